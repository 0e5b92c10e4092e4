#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qstretch/module.hpp"

namespace qstretch {

inline constexpr std::size_t kDefaultResolutionLength = 6;

struct Generator {
    /// Position in algebra.idempotents(): the summand is e·A.
    std::size_t idempotent = 0;
    std::optional<int> degree;
    /// The generator's image, in coordinates of the module being covered.
    SparseVec element;
};

struct ProjectiveCover {
    std::vector<Generator> generators;
    /// Basis of P = ⊕ e_k A: pairs (generator k, algebra basis index b), e_k b = b.
    std::vector<std::pair<std::size_t, std::size_t>> basis;
    /// Image of each basis element of P in the covered module.
    std::vector<SparseVec> images;
    std::size_t rank = 0;
    /// RREF basis of the kernel, in P coordinates.
    std::vector<SparseVec> kernel;
};

/// Minimal projective cover.  Generators are chosen greedily, per idempotent
/// and then per degree, as elements m·e outside M·rad.
ProjectiveCover projective_cover(const FDModule& m);

struct ResolutionStep {
    std::vector<Generator> generators;
    std::vector<std::pair<std::size_t, std::size_t>> basis;
    /// d^n: column per basis element of P^n, in coordinates of P^{n-1}
    /// (of the resolved module for n = 0).
    std::vector<SparseVec> differential;
    std::size_t kernel_dim = 0;
    std::size_t dim() const { return basis.size(); }
};

struct MinimalResolution {
    StructuredAlgebra algebra;
    std::size_t n_max = 0;
    std::vector<ResolutionStep> steps;
    bool zero_module = false;
    /// A zero syzygy was reached within n_max.
    bool terminated = false;
    bool graded = false;
    bool d_squared_zero = true;
    bool minimal = true;
    bool exact = true;
};

/// P^0 .. P^{n_max}, stopping early at a zero syzygy.
MinimalResolution minimal_resolution(const FDModule& m, std::size_t n_max = kDefaultResolutionLength);

struct BettiEntry {
    std::size_t vertex = 0;
    std::optional<int> degree;
    friend auto operator<=>(const BettiEntry&, const BettiEntry&) = default;
};

struct BettiData {
    std::size_t n_max = 0;
    bool graded = false;
    bool terminated = false;
    /// entries[n]: sorted generator data of P^n.
    std::vector<std::vector<BettiEntry>> entries;

    std::size_t count(std::size_t n) const { return n < entries.size() ? entries[n].size() : 0; }
    /// Distinct degrees at step n, ascending.
    std::vector<int> degrees(std::size_t n) const;
};

BettiData betti_data(const MinimalResolution& res);

struct ProjectiveDimension {
    enum class Kind { Exact, Exceeds, ZeroModule };
    Kind kind = Kind::Exact;
    std::size_t value = 0;  // the dimension, or n_max for Exceeds

    /// "2", "> 6" or "ZERO-MODULE".
    std::string to_string() const;
    friend bool operator==(const ProjectiveDimension&, const ProjectiveDimension&) = default;
};

ProjectiveDimension pdim_of(const MinimalResolution& res);
ProjectiveDimension pdim_bounded(const FDModule& m, std::size_t n_max = kDefaultResolutionLength);

/// idim of A_A, as pdim of D(A) over the opposite algebra.
ProjectiveDimension injective_dimension_bounded(const StructuredAlgebra& a,
                                                std::size_t n_max = kDefaultResolutionLength);

}  // namespace qstretch
