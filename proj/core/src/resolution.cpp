#include "qstretch/resolution.hpp"

#include <algorithm>
#include <memory>
#include <tuple>

namespace qstretch {

namespace {

std::optional<int> leading_degree(const FDModule& m, const SparseVec& v) {
    if (!m.degrees || v.empty()) return std::nullopt;
    return (*m.degrees)[v.front().first];
}

// Basis indices b with e_k b = b, per idempotent position k.
std::vector<std::vector<std::size_t>> left_classes(const StructuredAlgebra& a) {
    std::vector<std::vector<std::size_t>> out(a.idempotent_count());
    for (std::size_t b = 0; b < a.dim(); ++b) out[a.left_idempotent(b)].push_back(b);
    return out;
}

struct Syzygy {
    StructuredAlgebra algebra;
    std::vector<SparseVec> rows;
    std::vector<std::pair<std::size_t, std::size_t>> basis;
    std::vector<std::int64_t> position;  // (generator * dim + b) -> P index
    std::vector<std::int64_t> pivot_row;  // P index -> kernel row
    std::size_t algebra_dim = 0;

    SparseVec act(std::size_t i, std::size_t b) const {
        std::vector<std::pair<std::uint32_t, Scalar>> acc;
        for (const auto& [p, c] : rows[i]) {
            auto [k, x] = basis[p];
            for (const auto& [y, d] : algebra.multiply_basis(x, b)) {
                auto q = position[k * algebra_dim + y];
                acc.emplace_back(static_cast<std::uint32_t>(q), c * d);
            }
        }
        SparseVec v = canonicalize(std::move(acc));
        SparseVec out;
        for (const auto& [q, c] : v) {
            auto r = pivot_row[q];
            if (r >= 0) out.emplace_back(static_cast<std::uint32_t>(r), c);
        }
        return canonicalize(std::move(out));
    }
};

SparseVec apply_columns(const std::vector<SparseVec>& columns, const SparseVec& v) {
    std::vector<std::pair<std::uint32_t, Scalar>> acc;
    for (const auto& [j, c] : v) {
        for (const auto& [i, d] : columns[j]) acc.emplace_back(i, c * d);
    }
    return canonicalize(std::move(acc));
}

}  // namespace

ProjectiveCover projective_cover(const FDModule& m) {
    ProjectiveCover cover;
    const StructuredAlgebra& a = m.algebra;
    const Field field = a.field();
    if (m.dim == 0) return cover;

    Echelon span(field, m.dim);
    for (std::size_t i = 0; i < m.dim; ++i) {
        SparseVec e = unit_vector(field, static_cast<std::uint32_t>(i));
        for (const auto& g : a.radical_generators()) {
            SparseVec v = m.act_element(e, g);
            if (!v.empty()) span.insert(v);
        }
    }

    struct Candidate {
        std::size_t idempotent;
        int degree;
        std::size_t index;
        SparseVec value;
    };
    std::vector<Candidate> candidates;
    for (std::size_t k = 0; k < a.idempotent_count(); ++k) {
        std::size_t e = a.idempotents()[k];
        for (std::size_t i = 0; i < m.dim; ++i) {
            SparseVec v = m.act(i, e);
            if (v.empty()) continue;
            candidates.push_back({k, leading_degree(m, v).value_or(0), i, std::move(v)});
        }
    }
    std::stable_sort(candidates.begin(), candidates.end(), [](const Candidate& x, const Candidate& y) {
        return std::tie(x.idempotent, x.degree) < std::tie(y.idempotent, y.degree);
    });
    for (auto& c : candidates) {
        if (span.rank() == m.dim) break;
        if (span.insert(c.value)) cover.generators.push_back({c.idempotent, leading_degree(m, c.value), c.value});
    }

    auto classes = left_classes(a);
    for (std::size_t k = 0; k < cover.generators.size(); ++k) {
        const auto& g = cover.generators[k];
        for (std::size_t b : classes[g.idempotent]) {
            cover.basis.emplace_back(k, b);
            cover.images.push_back(m.act_vector(g.element, b));
        }
    }
    KernelResult kr = kernel(field, cover.images, m.dim);
    cover.rank = kr.rank;
    cover.kernel = std::move(kr.kernel);
    return cover;
}

MinimalResolution minimal_resolution(const FDModule& input, std::size_t n_max) {
    MinimalResolution res;
    res.algebra = input.algebra;
    res.n_max = n_max;
    res.graded = input.degrees.has_value() && input.algebra.graded();
    const StructuredAlgebra& a = input.algebra;

    FDModule current = input;
    if (!res.graded) current.degrees.reset();
    std::vector<SparseVec> embedding;  // syzygy rows in coordinates of the previous projective

    for (std::size_t n = 0; n <= n_max; ++n) {
        if (current.dim == 0) {
            if (n == 0) res.zero_module = true;
            res.terminated = true;
            break;
        }
        ProjectiveCover cover = projective_cover(current);
        if (cover.rank != current.dim) res.exact = false;

        ResolutionStep step;
        step.basis = cover.basis;
        step.kernel_dim = cover.kernel.size();
        auto lift = [&](const SparseVec& v) { return n == 0 ? v : apply_columns(embedding, v); };
        for (auto& g : cover.generators) {
            step.generators.push_back({g.idempotent, g.degree, lift(g.element)});
        }
        for (const auto& img : cover.images) step.differential.push_back(lift(img));

        for (const auto& row : cover.kernel) {
            for (const auto& [p, c] : row) {
                auto [k, b] = cover.basis[p];
                if (a.is_idempotent(b)) res.minimal = false;
            }
        }
        if (n >= 1) {
            const auto& prev = res.steps.back().differential;
            for (const auto& col : step.differential) {
                if (!apply_columns(prev, col).empty()) res.d_squared_zero = false;
            }
        }

        std::vector<int> pdeg;
        if (res.graded) {
            for (auto [k, b] : cover.basis) pdeg.push_back(*cover.generators[k].degree + a.degree(b));
        }
        res.steps.push_back(std::move(step));

        if (cover.kernel.empty()) {
            res.terminated = true;
            break;
        }
        if (n == n_max) break;

        auto syz = std::make_shared<Syzygy>();
        syz->algebra = a;
        syz->algebra_dim = a.dim();
        syz->basis = cover.basis;
        syz->position.assign(cover.generators.size() * a.dim(), -1);
        for (std::size_t p = 0; p < cover.basis.size(); ++p) {
            auto [k, b] = cover.basis[p];
            syz->position[k * a.dim() + b] = static_cast<std::int64_t>(p);
        }
        syz->pivot_row.assign(cover.basis.size(), -1);
        for (std::size_t r = 0; r < cover.kernel.size(); ++r) {
            syz->pivot_row[cover.kernel[r].front().first] = static_cast<std::int64_t>(r);
        }
        syz->rows = cover.kernel;

        FDModule next;
        next.algebra = a;
        next.dim = cover.kernel.size();
        next.act = [syz](std::size_t i, std::size_t b) { return syz->act(i, b); };
        if (res.graded) {
            std::vector<int> deg;
            for (const auto& row : cover.kernel) deg.push_back(pdeg[row.front().first]);
            next.degrees = std::move(deg);
        }
        embedding = std::move(cover.kernel);
        current = std::move(next);
    }
    return res;
}

std::vector<int> BettiData::degrees(std::size_t n) const {
    std::vector<int> out;
    if (n >= entries.size()) return out;
    for (const auto& e : entries[n]) {
        if (e.degree) out.push_back(*e.degree);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

BettiData betti_data(const MinimalResolution& res) {
    BettiData b;
    b.n_max = res.n_max;
    b.graded = res.graded;
    b.terminated = res.terminated;
    for (const auto& step : res.steps) {
        std::vector<BettiEntry> row;
        for (const auto& g : step.generators) row.push_back({g.idempotent, g.degree});
        std::sort(row.begin(), row.end());
        b.entries.push_back(std::move(row));
    }
    return b;
}

std::string ProjectiveDimension::to_string() const {
    switch (kind) {
        case Kind::Exact:
            return std::to_string(value);
        case Kind::Exceeds:
            return "> " + std::to_string(value);
        case Kind::ZeroModule:
            return "ZERO-MODULE";
    }
    return {};
}

ProjectiveDimension pdim_of(const MinimalResolution& res) {
    if (res.zero_module) return {ProjectiveDimension::Kind::ZeroModule, 0};
    if (res.terminated) return {ProjectiveDimension::Kind::Exact, res.steps.size() - 1};
    return {ProjectiveDimension::Kind::Exceeds, res.n_max};
}

ProjectiveDimension pdim_bounded(const FDModule& m, std::size_t n_max) { return pdim_of(minimal_resolution(m, n_max)); }

ProjectiveDimension injective_dimension_bounded(const StructuredAlgebra& a, std::size_t n_max) {
    StructuredAlgebra op = StructuredAlgebra::opposite(a);
    return pdim_bounded(dual_regular(a, op), n_max);
}

}  // namespace qstretch
