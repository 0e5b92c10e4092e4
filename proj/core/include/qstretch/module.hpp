#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "qstretch/structured_algebra.hpp"

namespace qstretch {

/// A finite-dimensional right module: act(i, b) is e_i · b in module coordinates.
///
/// Every module built here has a basis on which each idempotent acts as 0 or
/// 1, and, when `degrees` is set, the action is homogeneous.
struct FDModule {
    StructuredAlgebra algebra;
    std::size_t dim = 0;
    std::function<SparseVec(std::size_t, std::size_t)> act;
    std::optional<std::vector<int>> degrees;

    SparseVec act_vector(const SparseVec& m, std::size_t b) const;
    SparseVec act_element(const SparseVec& m, const SparseVec& a) const;
};

FDModule regular_module(const StructuredAlgebra& a);
/// A/rad: one simple per idempotent, all in degree 0.
FDModule simple_top(const StructuredAlgebra& a);
/// D(A_A) = Hom_K(A, K) as a right module over opposite(a).
FDModule dual_regular(const StructuredAlgebra& a, const StructuredAlgebra& opposite);

/// The bimodule A/J as a right module over `envelope` = enveloping(A), where J
/// is the two-sided ideal generated by `spanning_set`:  m · (x ⊗ y) = x m y.
FDModule quotient_by_ideal_module(const StructuredAlgebra& a, const StructuredAlgebra& envelope,
                                  const std::vector<SparseVec>& spanning_set);

}  // namespace qstretch
