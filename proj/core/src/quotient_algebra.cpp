#include "qstretch/quotient_algebra.hpp"

#include <algorithm>

namespace qstretch {

QuotientAlgebra QuotientAlgebra::build(Quiver quiver, std::vector<PathElement> relations, Field field,
                                       std::optional<std::size_t> degree_cap) {
    QuotientAlgebra a;
    a.quiver_ = std::move(quiver);
    a.field_ = field;
    a.relations_ = std::move(relations);
    std::size_t cap = degree_cap ? *degree_cap : default_degree_cap(a.relations_);
    a.groebner_ = buchberger(a.quiver_, a.relations_, cap, field);
    a.basis_ = enumerate_basis(a.quiver_, a.groebner_);
    for (std::size_t i = 0; i < a.basis_.size(); ++i) {
        a.index_.emplace(a.basis_[i], i);
        a.max_word_length_ = std::max(a.max_word_length_, a.basis_[i].length());
    }
    a.graded_ = a.groebner_.basis.is_length_homogeneous();

    std::size_t n = a.basis_.size();
    a.table_.assign(n * n, SparseVec{});
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            auto p = compose(a.basis_[i], a.basis_[j]);
            if (!p) continue;
            if (auto k = a.index_of(*p)) {
                a.table_[i * n + j] = unit_vector(field, static_cast<std::uint32_t>(*k));
            } else {
                a.table_[i * n + j] = a.coordinates(PathElement(field, *p));
            }
        }
    }
    return a;
}

std::optional<std::size_t> QuotientAlgebra::index_of(const Path& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::size_t QuotientAlgebra::block_dim(VertexId i, VertexId j) const {
    return static_cast<std::size_t>(std::count_if(basis_.begin(), basis_.end(), [&](const Path& p) {
        return p.source() == i && p.target() == j;
    }));
}

std::size_t QuotientAlgebra::right_projective_dim(VertexId i) const {
    return static_cast<std::size_t>(
        std::count_if(basis_.begin(), basis_.end(), [&](const Path& p) { return p.source() == i; }));
}

std::size_t QuotientAlgebra::left_projective_dim(VertexId j) const {
    return static_cast<std::size_t>(
        std::count_if(basis_.begin(), basis_.end(), [&](const Path& p) { return p.target() == j; }));
}

std::vector<std::size_t> QuotientAlgebra::radical_basis() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        if (!basis_[i].is_trivial()) out.push_back(i);
    }
    return out;
}

std::size_t QuotientAlgebra::loewy_length() const {
    std::vector<std::size_t> arrows;
    for (ArrowId a = 0; a < quiver_.arrow_count(); ++a) {
        if (auto k = index_of(Path::arrow(quiver_, a))) arrows.push_back(*k);
    }
    // rad^1 is spanned by the radical basis; rad^{k+1} = rad^k * (arrows).
    std::vector<SparseVec> layer;
    for (std::size_t i : radical_basis()) layer.push_back(unit_vector(field_, static_cast<std::uint32_t>(i)));
    std::size_t k = 1;
    if (layer.empty()) return 1;
    while (true) {
        Echelon next(field_, dim());
        for (const auto& v : layer) {
            for (std::size_t a : arrows) {
                SparseVec prod = multiply(v, unit_vector(field_, static_cast<std::uint32_t>(a)));
                if (!prod.empty()) next.insert(prod);
            }
        }
        ++k;
        if (next.rank() == 0) return k;
        layer = next.rows();
    }
}

PathElement QuotientAlgebra::reduce(const PathElement& x) const { return normal_form(quiver_, x, groebner_.basis); }

SparseVec QuotientAlgebra::coordinates(const PathElement& x) const {
    PathElement r = reduce(x);
    std::vector<std::pair<std::uint32_t, Scalar>> entries;
    for (const auto& [p, c] : r.terms()) {
        auto k = index_of(p);
        if (!k) throw std::logic_error("normal form left a non-basis word: " + p.to_string(quiver_));
        entries.emplace_back(static_cast<std::uint32_t>(*k), c);
    }
    return canonicalize(std::move(entries));
}

PathElement QuotientAlgebra::element(const SparseVec& v) const {
    PathElement x(field_);
    for (const auto& [i, c] : v) x.add_term(basis_.at(i), c);
    return x;
}

SparseVec QuotientAlgebra::multiply(const SparseVec& x, const SparseVec& y) const {
    std::vector<std::pair<std::uint32_t, Scalar>> acc;
    for (const auto& [i, a] : x) {
        for (const auto& [j, b] : y) {
            Scalar ab = a * b;
            for (const auto& [k, c] : multiply_basis(i, j)) acc.emplace_back(k, ab * c);
        }
    }
    return canonicalize(std::move(acc));
}

MinimalityVerdict check_minimal_uniform(const QuotientAlgebra& algebra, const std::vector<PathElement>& relations) {
    MinimalityVerdict verdict;
    const Quiver& q = algebra.quiver();
    const Field& field = algebra.field();
    for (std::size_t i = 0; i < relations.size(); ++i) {
        if (relations[i].is_zero() || !classify(relations[i]).uniform) {
            verdict.uniform = false;
            verdict.non_uniform.push_back(i);
        }
    }

    std::size_t top = algebra.loewy_length();
    // Paths of length <= top, bucketed by endpoint and length.
    std::vector<Path> paths;
    for (VertexId v = 0; v < q.vertex_count(); ++v) paths.push_back(Path::trivial(v));
    std::size_t begin = 0;
    for (std::size_t len = 1; len <= top; ++len) {
        std::size_t end = paths.size();
        for (std::size_t k = begin; k < end; ++k) {
            for (ArrowId a : q.arrows_from(paths[k].target())) {
                paths.push_back(*compose(paths[k], Path::arrow(q, a)));
            }
        }
        begin = end;
    }
    std::unordered_map<Path, std::uint32_t, PathHash> coord;
    for (std::size_t k = 0; k < paths.size(); ++k) coord.emplace(paths[k], static_cast<std::uint32_t>(k));

    auto truncate = [&](const PathElement& x) {
        std::vector<std::pair<std::uint32_t, Scalar>> entries;
        for (const auto& [p, c] : x.terms()) {
            if (p.length() <= top) entries.emplace_back(coord.at(p), c);
        }
        return canonicalize(std::move(entries));
    };

    Echelon span(field, paths.size());
    for (std::size_t i = 0; i < relations.size(); ++i) {
        const auto& g = relations[i];
        if (g.is_zero()) continue;
        auto c = classify(g);
        if (!c.uniform || c.min_length > top) continue;
        std::size_t room = top - c.min_length;
        for (const auto& p : paths) {
            if (p.target() != *c.source || p.length() > room) continue;
            for (const auto& s : paths) {
                if (s.source() != *c.target || p.length() + s.length() > room) continue;
                if (p.length() + s.length() == 0) continue;
                SparseVec v = truncate(sandwich(p, g, s));
                if (!v.empty()) span.insert(v);
            }
        }
    }
    for (std::size_t i = 0; i < relations.size(); ++i) {
        const auto& g = relations[i];
        if (g.is_zero()) {
            verdict.redundant.push_back(i);
            continue;
        }
        if (g.field() != field) throw FieldMismatchError("relation over a different field");
        if (span.insert(truncate(g))) {
            ++verdict.rank;
        } else {
            verdict.redundant.push_back(i);
        }
    }
    verdict.minimal = verdict.redundant.empty();
    return verdict;
}

}  // namespace qstretch
