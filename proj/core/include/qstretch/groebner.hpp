#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "qstretch/path_element.hpp"
#include "qstretch/quiver.hpp"

namespace qstretch {

class NotUniformError : public Error {
public:
    NotUniformError(std::size_t index, const std::string& what) : Error(what), index_(index) {}
    std::size_t index() const { return index_; }

private:
    std::size_t index_;
};

class NotAdmissibleError : public Error {
public:
    NotAdmissibleError(std::size_t index, const std::string& what) : Error(what), index_(index) {}
    std::size_t index() const { return index_; }

private:
    std::size_t index_;
};

class IncompleteBasisError : public Error {
public:
    using Error::Error;
};

class InfiniteDimensionalError : public Error {
public:
    using Error::Error;
};

/// Monic uniform elements, inter-reduced, sorted by tip.
class GroebnerBasis {
public:
    GroebnerBasis() = default;
    GroebnerBasis(Field field, std::vector<PathElement> elements);

    const Field& field() const { return field_; }
    const std::vector<PathElement>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }
    bool empty() const { return elements_.empty(); }

    /// Index of an element whose tip occurs in `word`, with the offset of the
    /// occurrence; the longest match starting leftmost is reported first.
    std::optional<std::pair<std::size_t, std::size_t>> find_divisor(const std::vector<ArrowId>& word) const;
    /// Same search restricted to occurrences that end at the last letter.
    bool has_tip_suffix(const std::vector<ArrowId>& word) const;

    bool is_monomial() const;
    bool is_length_homogeneous() const;
    std::size_t max_tip_length() const;

private:
    Field field_;
    std::vector<PathElement> elements_;
    std::map<std::vector<ArrowId>, std::size_t> tip_index_;
    std::set<std::size_t, std::greater<>> tip_lengths_;
};

/// Canonical representative of x modulo the ideal generated by `basis`:
/// every remaining path contains no tip.
PathElement normal_form(const Quiver& q, const PathElement& x, const GroebnerBasis& basis);

struct BuchbergerResult {
    GroebnerBasis basis;
    bool complete = false;
    std::size_t degree_cap = 0;
    /// L with every path of length L tip-reducible, when one was found.
    std::optional<std::size_t> certified_length;
    std::size_t overlaps_processed = 0;
    std::size_t overlaps_skipped = 0;
    bool monomial_fast_path = false;
    /// Set when no overlap was skipped yet normal words exist in every length.
    bool infinite_dimensional = false;
};

/// Default cap on S-polynomial degree: four times the longest generator.
std::size_t default_degree_cap(const std::vector<PathElement>& generators);

/// Noncommutative Buchberger completion for a two-sided ideal of KQ.
///
/// Generators must be uniform and lie in the square of the arrow ideal.
/// Overlaps are processed in increasing degree; those above `degree_cap` are
/// skipped and make the result INCOMPLETE.  COMPLETE means every path of
/// some length L is tip-reducible and no overlap was skipped, so the normal
/// words are finite and the basis is a Groebner basis.
/// `field` fixes the coefficient field when there are no generators; it must
/// agree with the generators otherwise.
BuchbergerResult buchberger(const Quiver& q, const std::vector<PathElement>& generators, std::size_t degree_cap,
                            std::optional<Field> field = std::nullopt);

/// All normal words (paths containing no tip), sorted by the admissible order.
/// Throws InfiniteDimensionalError when the quotient is infinite dimensional
/// and IncompleteBasisError for any other incomplete basis.
std::vector<Path> enumerate_basis(const Quiver& q, const BuchbergerResult& result);

}  // namespace qstretch
