#include "qstretch/path_element.hpp"

#include <stdexcept>

namespace qstretch {

PathElement::PathElement(Field field, const Path& p) : field_(field) { terms_.emplace(p, Scalar::one(field)); }

PathElement::PathElement(Field field, const Path& p, const Scalar& c) : field_(field) { add_term(p, c); }

const Path& PathElement::tip() const {
    if (terms_.empty()) throw std::logic_error("tip of zero element");
    return terms_.rbegin()->first;
}

const Scalar& PathElement::tip_coefficient() const {
    if (terms_.empty()) throw std::logic_error("tip of zero element");
    return terms_.rbegin()->second;
}

Scalar PathElement::coefficient(const Path& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

void PathElement::add_term(const Path& p, const Scalar& c) {
    if (c.field() != field_) throw FieldMismatchError("coefficient field differs from element field");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(p, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void PathElement::check_field(const PathElement& other) const {
    if (field_ != other.field_) throw FieldMismatchError("path elements over different fields");
}

PathElement PathElement::operator-() const {
    PathElement r(field_);
    for (const auto& [p, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), p, -c);
    return r;
}

PathElement operator+(const PathElement& a, const PathElement& b) {
    a.check_field(b);
    PathElement r = a;
    for (const auto& [p, c] : b.terms_) r.add_term(p, c);
    return r;
}

PathElement operator-(const PathElement& a, const PathElement& b) { return a + (-b); }

PathElement operator*(const Scalar& c, const PathElement& x) {
    PathElement r(x.field_);
    if (c.is_zero()) return r;
    for (const auto& [p, v] : x.terms_) r.terms_.emplace_hint(r.terms_.end(), p, c * v);
    return r;
}

PathElement PathElement::monic() const { return tip_coefficient().inverse() * *this; }

std::string PathElement::to_string(const Quiver& q) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    // Highest term first reads naturally ("x*y - y*x" style).
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [p, c] = *it;
        std::string coeff = c.to_string();
        bool negative = !coeff.empty() && coeff.front() == '-' && field_.is_rational();
        if (negative) coeff.erase(0, 1);
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        if (coeff != "1") out += coeff + "*";
        out += p.to_string(q);
        first = false;
    }
    return out;
}

bool operator==(const PathElement& a, const PathElement& b) { return a.field_ == b.field_ && a.terms_ == b.terms_; }

PathElement multiply(const PathElement& x, const PathElement& y) {
    if (x.field() != y.field()) throw FieldMismatchError("multiplying path elements over different fields");
    PathElement r(x.field());
    for (const auto& [p, c] : x.terms()) {
        for (const auto& [q, d] : y.terms()) {
            if (auto pq = compose(p, q)) r.add_term(*pq, c * d);
        }
    }
    return r;
}

PathElement sandwich(const Path& u, const PathElement& x, const Path& v) {
    PathElement r(x.field());
    for (const auto& [p, c] : x.terms()) {
        auto up = compose(u, p);
        if (!up) continue;
        if (auto upv = compose(*up, v)) r.add_term(*upv, c);
    }
    return r;
}

Classification classify(const PathElement& x) {
    if (x.is_zero()) throw ZeroElementError("classification of the zero element is undefined");
    Classification c;
    const auto& first = x.terms().begin()->first;
    c.uniform = true;
    c.min_length = first.length();
    c.max_length = first.length();
    for (const auto& [p, v] : x.terms()) {
        if (p.source() != first.source() || p.target() != first.target()) c.uniform = false;
        c.min_length = std::min(c.min_length, p.length());
        c.max_length = std::max(c.max_length, p.length());
    }
    if (c.uniform) {
        c.source = first.source();
        c.target = first.target();
    }
    c.length_homogeneous = c.min_length == c.max_length;
    if (c.length_homogeneous) c.degree = c.min_length;
    c.monomial = x.size() == 1;
    return c;
}

}  // namespace qstretch
