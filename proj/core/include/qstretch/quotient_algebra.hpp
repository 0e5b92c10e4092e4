#pragma once

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "qstretch/groebner.hpp"
#include "qstretch/linalg.hpp"

namespace qstretch {

/// Λ = KQ/I with its normal-word basis and a precomputed multiplication table.
///
/// Elements are sparse coordinate vectors over the basis, which is sorted by
/// the admissible order (vertices first).
class QuotientAlgebra {
public:
    QuotientAlgebra() = default;

    /// Runs Buchberger (cap defaults to default_degree_cap) and enumerates the
    /// normal words.  Throws NotUniformError, NotAdmissibleError,
    /// InfiniteDimensionalError or IncompleteBasisError.
    static QuotientAlgebra build(Quiver quiver, std::vector<PathElement> relations, Field field,
                                 std::optional<std::size_t> degree_cap = std::nullopt);

    const Quiver& quiver() const { return quiver_; }
    const Field& field() const { return field_; }
    const std::vector<PathElement>& relations() const { return relations_; }
    const BuchbergerResult& groebner() const { return groebner_; }
    const GroebnerBasis& groebner_basis() const { return groebner_.basis; }

    std::size_t dim() const { return basis_.size(); }
    const std::vector<Path>& basis() const { return basis_; }
    const Path& basis_word(std::size_t i) const { return basis_.at(i); }
    std::optional<std::size_t> index_of(const Path& p) const;
    /// Index of the trivial path at v.
    std::size_t vertex_index(VertexId v) const { return *index_of(Path::trivial(v)); }

    /// dim e_i Λ e_j: normal words from i to j.
    std::size_t block_dim(VertexId i, VertexId j) const;
    /// dim e_i Λ and dim Λ e_j.
    std::size_t right_projective_dim(VertexId i) const;
    std::size_t left_projective_dim(VertexId j) const;

    /// Indices of normal words of positive length.
    std::vector<std::size_t> radical_basis() const;
    /// True when the reduced Groebner basis is length homogeneous.
    bool is_graded() const { return graded_; }
    std::size_t max_word_length() const { return max_word_length_; }
    /// Smallest k with rad^k = 0.
    std::size_t loewy_length() const;

    PathElement reduce(const PathElement& x) const;
    SparseVec coordinates(const PathElement& x) const;
    PathElement element(const SparseVec& v) const;

    const SparseVec& multiply_basis(std::size_t i, std::size_t j) const { return table_[i * basis_.size() + j]; }
    SparseVec multiply(const SparseVec& x, const SparseVec& y) const;

private:
    Quiver quiver_;
    Field field_;
    std::vector<PathElement> relations_;
    BuchbergerResult groebner_;
    std::vector<Path> basis_;
    std::unordered_map<Path, std::size_t, PathHash> index_;
    std::vector<SparseVec> table_;
    bool graded_ = true;
    std::size_t max_word_length_ = 0;
};

struct MinimalityVerdict {
    bool uniform = true;
    std::vector<std::size_t> non_uniform;
    bool minimal = true;
    /// Relations whose image in I/(rI + Ir) depends on the earlier ones.
    std::vector<std::size_t> redundant;
    std::size_t rank = 0;

    bool ok() const { return uniform && minimal; }
};

/// Checks that `relations` (generators of the ideal of `algebra`) are uniform
/// and have linearly independent images in I/(rI + Ir), working in
/// KQ/R^{k+1} where k is the Loewy length.
MinimalityVerdict check_minimal_uniform(const QuotientAlgebra& algebra, const std::vector<PathElement>& relations);

}  // namespace qstretch
