#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "qstretch/scalar.hpp"

namespace qstretch {

/// Sparse vector: (index, coefficient) pairs, strictly increasing index, no zero coefficients.
using SparseVec = std::vector<std::pair<std::uint32_t, Scalar>>;

SparseVec unit_vector(const Field& field, std::uint32_t index);
/// y + c*x
SparseVec axpy(const SparseVec& y, const Scalar& c, const SparseVec& x);
SparseVec scaled(const SparseVec& x, const Scalar& c);
SparseVec add(const SparseVec& a, const SparseVec& b);
SparseVec subtract(const SparseVec& a, const SparseVec& b);
/// Sorts by index, merges duplicates and drops zeros.
SparseVec canonicalize(std::vector<std::pair<std::uint32_t, Scalar>> entries);
Scalar coefficient(const SparseVec& x, std::uint32_t index, const Field& field);

/// Incremental row echelon form over a fixed ambient dimension.
///
/// Pivots are the leading (smallest) index of each stored row and rows are
/// normalised to pivot coefficient one.  Columns are eliminated in index
/// order, so the result only depends on the insertion order.
class Echelon {
public:
    Echelon(Field field, std::size_t ambient_dim);

    /// Stores the reduced vector if it is independent of the current rows.
    bool insert(const SparseVec& v);
    SparseVec reduce(const SparseVec& v) const;
    bool contains(const SparseVec& v) const { return reduce(v).empty(); }

    std::size_t rank() const { return rows_.size(); }
    std::size_t ambient_dim() const { return pivot_row_.size(); }
    const Field& field() const { return field_; }
    const std::vector<SparseVec>& rows() const { return rows_; }
    std::vector<std::uint32_t> pivots() const;

    /// Reduced row echelon basis of the stored span, sorted by pivot.
    std::vector<SparseVec> reduced_basis() const;

private:
    Field field_;
    std::vector<SparseVec> rows_;
    std::vector<std::int64_t> pivot_row_;
};

struct KernelResult {
    std::size_t rank = 0;
    /// Reduced row echelon basis of the kernel, in source coordinates.
    std::vector<SparseVec> kernel;
};

/// Kernel and rank of the linear map whose j-th column (image of the j-th
/// source basis vector) is columns[j].
KernelResult kernel(const Field& field, std::span<const SparseVec> columns, std::size_t target_dim);

std::size_t rank_of(const Field& field, std::span<const SparseVec> vectors, std::size_t ambient_dim);

}  // namespace qstretch
