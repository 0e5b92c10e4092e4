#pragma once

#include <map>
#include <optional>
#include <string>

#include "qstretch/quiver.hpp"
#include "qstretch/scalar.hpp"

namespace qstretch {

/// A finite linear combination of paths: an element of KQ.
///
/// Terms are keyed by the admissible order, so the tip (leading path) is the
/// last entry.  No zero coefficients are stored.
class PathElement {
public:
    using Terms = std::map<Path, Scalar>;

    explicit PathElement(Field field = Field::rationals()) : field_(field) {}
    PathElement(Field field, const Path& p);
    PathElement(Field field, const Path& p, const Scalar& c);

    const Field& field() const { return field_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    /// Leading path and its coefficient; throws std::logic_error on zero.
    const Path& tip() const;
    const Scalar& tip_coefficient() const;

    Scalar coefficient(const Path& p) const;

    /// Adds c*p in place (the only mutator; used while building elements).
    void add_term(const Path& p, const Scalar& c);

    PathElement operator-() const;
    friend PathElement operator+(const PathElement& a, const PathElement& b);
    friend PathElement operator-(const PathElement& a, const PathElement& b);
    friend PathElement operator*(const Scalar& c, const PathElement& x);

    /// Scales so that the tip coefficient is one.
    PathElement monic() const;

    std::string to_string(const Quiver& q) const;

    friend bool operator==(const PathElement& a, const PathElement& b);

private:
    void check_field(const PathElement& other) const;

    Field field_;
    Terms terms_;
};

/// Bilinear extension of path composition; incompatible paths multiply to zero.
/// Throws FieldMismatchError for elements over different fields.
PathElement multiply(const PathElement& x, const PathElement& y);

/// u * x * v for paths u and v.
PathElement sandwich(const Path& u, const PathElement& x, const Path& v);

struct Classification {
    bool uniform = false;
    std::optional<VertexId> source;
    std::optional<VertexId> target;
    bool length_homogeneous = false;
    std::optional<std::size_t> degree;
    bool monomial = false;
    std::size_t min_length = 0;
    std::size_t max_length = 0;
};

class ZeroElementError : public Error {
public:
    using Error::Error;
};

/// Uniformity, length homogeneity and monomiality of a nonzero element.
/// Throws ZeroElementError for zero (none of these is defined there).
Classification classify(const PathElement& x);

}  // namespace qstretch
