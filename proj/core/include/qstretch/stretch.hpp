#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qstretch/check.hpp"
#include "qstretch/quotient_algebra.hpp"

namespace qstretch {

/// The stretched quiver Q̃_A together with its bookkeeping.
///
/// Original vertices keep their indices and come first; the new vertices
/// w(α,1..A-1) follow, grouped by arrow.  Each arrow α becomes α#1..α#A in
/// that order, so θ* preserves the admissible order.  For A = 1 the stretched
/// quiver is the original one.
struct StretchMap {
    std::size_t factor = 1;
    Quiver original;
    Quiver stretched;
    /// pieces[α] = (α_1, ..., α_A)
    std::vector<std::vector<ArrowId>> pieces;
    /// inner[α] = (w_1, ..., w_{A-1})
    std::vector<std::vector<VertexId>> inner;

    bool is_original_vertex(VertexId v) const { return v < original.vertex_count(); }
    /// (α, i) with v = w(α,i), or nothing for an original vertex.
    std::optional<std::pair<ArrowId, std::size_t>> origin_of(VertexId v) const;
};

/// Throws std::invalid_argument for A < 1.
StretchMap stretch_quiver(const Quiver& q, std::size_t A);

/// The substitution α ↦ α_1⋯α_A, fixing vertices.
Path theta_star(const StretchMap& map, const Path& p);
PathElement theta_star(const StretchMap& map, const PathElement& x);

struct Inheritance {
    bool homogeneous = false;
    bool stretched_homogeneous = false;
    bool monomial = false;
    bool stretched_monomial = false;
    /// Every stretched relation has A times the length range of its source.
    bool degrees_scaled = true;
    /// Every stretched relation starts and ends at an original vertex.
    bool endpoints_in_original = true;

    bool ok() const {
        return homogeneous == stretched_homogeneous && monomial == stretched_monomial && degrees_scaled &&
               endpoints_in_original;
    }
};

struct StretchedPresentation {
    StretchMap map;
    std::vector<PathElement> relations;
    QuotientAlgebra algebra;
    /// ε = sum of the original vertices.
    PathElement epsilon;
    Inheritance inheritance;
    MinimalityVerdict minimality;
};

/// Builds Λ̃_A from the relations Λ was presented with.
StretchedPresentation stretch_algebra(const QuotientAlgebra& lambda, std::size_t A,
                                      std::optional<std::size_t> degree_cap = std::nullopt);

struct Connector {
    VertexId w = 0;
    ArrowId arrow = 0;
    std::size_t position = 0;  // i in w(α,i)
    Path p;                    // α_1⋯α_i
    Path q;                    // α_{i+1}⋯α_A
};

/// One entry per new vertex, in vertex order; empty for A = 1.
std::vector<Connector> connector_paths(const StretchMap& map);

struct CornerAlgebra {
    /// Indices into the Λ̃ basis of words with both endpoints original.
    std::vector<std::size_t> basis;
    /// theta[i] = Λ̃-coordinates of θ applied to Λ basis word i.
    std::vector<SparseVec> theta;
    bool bijective = false;
    bool multiplicative = false;
    std::string first_failure;
    std::vector<CheckRecord> records;

    bool pass() const { return bijective && multiplicative; }
};

/// Compares Λ with B = εΛ̃ε under θ: bijection of bases and all products.
CornerAlgebra corner_algebra(const StretchedPresentation& sp, const QuotientAlgebra& lambda);

/// Products ab of basis words with t(a) = o(b) an original vertex; they span Λ̃εΛ̃.
std::vector<SparseVec> epsilon_spanning_set(const StretchedPresentation& sp);
std::size_t ideal_dimension(const StretchedPresentation& sp);
/// dim X_α = dim(Σ_i Λ̃w_iΛ̃ + Λ̃εΛ̃) - dim Λ̃εΛ̃ per original arrow (empty for A = 1).
std::vector<std::size_t> x_alpha_dimensions(const StretchedPresentation& sp);

/// Vertex/arrow counts, dim Λ̃w_i, dim w_iΛ̃, dim X_α and dim Λ̃/⟨ε⟩.
std::vector<CheckRecord> dimension_report(const QuotientAlgebra& lambda, const StretchedPresentation& sp);

/// Projectivity of Λ̃ε over B summand by summand, the two spanning-set
/// identities for the connector paths, and dim(Λ̃ε ⊗_B εΛ̃) = dim Λ̃εΛ̃.
std::vector<CheckRecord> verify_stratifying(const StretchedPresentation& sp);

/// λ ↦ λp̃_w on Λ̃v and λ ↦ q̃_wλ on v'Λ̃ are injective, for every new vertex.
std::vector<CheckRecord> injectivity_lemma_check(const StretchedPresentation& sp);

}  // namespace qstretch
