#pragma once

#include <cstddef>
#include <vector>

#include "qstretch/check.hpp"
#include "qstretch/resolution.hpp"
#include "qstretch/stretch.hpp"

namespace qstretch {

/// The sets g^n: g^0 are the vertices and each g^n_k = Σ g^{n-1}_j r_j is
/// read off the generator of P^n, as an element of KQ.
struct GszData {
    std::vector<std::vector<PathElement>> g;
    /// Every element is a single path.
    bool paths = true;
    /// t(g^n_k) is the vertex of the k-th summand of P^n, and every element is uniform.
    bool consistent = true;
};

/// Requires a resolution of the simple top over the algebra `lambda`.
GszData gsz_data(const MinimalResolution& res, const QuotientAlgebra& lambda);

/// Resolution of Λ/rad over Λ, as used for transport and degree detection.
MinimalResolution resolve_top(const QuotientAlgebra& lambda, std::size_t n_max = kDefaultResolutionLength);

/// Compares the resolutions of Λ/rad and Λ̃/rad̃: counts at n = 0, 1, and for
/// n >= 2 the vertex multisets with degrees scaled by A (when graded) plus
/// the endpoint/length data of θ*(g^n) against g̃^n.  For monomial algebras
/// the sets θ*(g^n) and g̃^n must coincide.
std::vector<CheckRecord> verify_transport(const MinimalResolution& res, const QuotientAlgebra& lambda,
                                          const MinimalResolution& stretched_res, const StretchedPresentation& sp);

/// Λ̃/⟨ε⟩ as a right module over the enveloping algebra `envelope` of `stretched`.
FDModule epsilon_quotient_module(const StretchedPresentation& sp, const StructuredAlgebra& stretched,
                                 const StructuredAlgebra& envelope);

/// Per-arrow dimension ledger for the bimodule resolution of Λ̃/⟨ε⟩ (A >= 2),
/// plus a cross-check against the enveloping-algebra resolution.  The
/// cross-check is SKIPPED when dim(Λ̃)^2 exceeds `budget`.
std::vector<CheckRecord> verify_bimodule_formulas(const StretchedPresentation& sp,
                                                  std::size_t budget = kDefaultEnvelopeBudget);

}  // namespace qstretch
