#include "qstretch/module.hpp"

#include <map>
#include <memory>

namespace qstretch {

SparseVec FDModule::act_vector(const SparseVec& m, std::size_t b) const {
    std::vector<std::pair<std::uint32_t, Scalar>> acc;
    for (const auto& [i, c] : m) {
        for (const auto& [k, d] : act(i, b)) acc.emplace_back(k, c * d);
    }
    return canonicalize(std::move(acc));
}

SparseVec FDModule::act_element(const SparseVec& m, const SparseVec& a) const {
    std::vector<std::pair<std::uint32_t, Scalar>> acc;
    for (const auto& [b, c] : a) {
        for (const auto& [k, d] : act_vector(m, b)) acc.emplace_back(k, c * d);
    }
    return canonicalize(std::move(acc));
}

FDModule regular_module(const StructuredAlgebra& a) {
    FDModule m;
    m.algebra = a;
    m.dim = a.dim();
    m.act = [a](std::size_t i, std::size_t b) { return a.multiply_basis(i, b); };
    if (a.graded()) {
        std::vector<int> deg(a.dim());
        for (std::size_t i = 0; i < a.dim(); ++i) deg[i] = a.degree(i);
        m.degrees = std::move(deg);
    }
    return m;
}

FDModule simple_top(const StructuredAlgebra& a) {
    FDModule m;
    m.algebra = a;
    m.dim = a.idempotent_count();
    std::vector<std::size_t> idem = a.idempotents();
    Field field = a.field();
    m.act = [idem, field](std::size_t i, std::size_t b) -> SparseVec {
        if (idem[i] == b) return unit_vector(field, static_cast<std::uint32_t>(i));
        return {};
    };
    m.degrees = std::vector<int>(m.dim, 0);
    return m;
}

FDModule dual_regular(const StructuredAlgebra& a, const StructuredAlgebra& opposite) {
    // (δ_i · b)(x) = δ_i(x b): the transpose of right multiplication by b.
    const std::size_t n = a.dim();
    auto table = std::make_shared<std::vector<SparseVec>>(n * n);
    std::vector<std::vector<std::pair<std::uint32_t, Scalar>>> raw(n * n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t b = 0; b < n; ++b) {
            for (const auto& [i, c] : a.multiply_basis(j, b)) raw[b * n + i].emplace_back(static_cast<std::uint32_t>(j), c);
        }
    }
    for (std::size_t k = 0; k < n * n; ++k) (*table)[k] = canonicalize(std::move(raw[k]));
    FDModule m;
    m.algebra = opposite;
    m.dim = n;
    m.act = [table, n](std::size_t i, std::size_t b) { return (*table)[b * n + i]; };
    return m;
}

FDModule quotient_by_ideal_module(const StructuredAlgebra& a, const StructuredAlgebra& envelope,
                                  const std::vector<SparseVec>& spanning_set) {
    const std::size_t n = a.dim();
    const Field field = a.field();
    Echelon ideal(field, n);
    std::vector<SparseVec> frontier;
    for (const auto& v : spanning_set) {
        if (ideal.insert(v)) frontier.push_back(v);
    }
    // Close the span under left and right multiplication by basis elements.
    while (!frontier.empty()) {
        std::vector<SparseVec> next;
        for (const auto& v : frontier) {
            for (std::size_t b = 0; b < n; ++b) {
                SparseVec bv = a.multiply(unit_vector(field, static_cast<std::uint32_t>(b)), v);
                SparseVec vb = a.multiply(v, unit_vector(field, static_cast<std::uint32_t>(b)));
                if (!bv.empty() && ideal.insert(bv)) next.push_back(bv);
                if (!vb.empty() && ideal.insert(vb)) next.push_back(vb);
            }
        }
        frontier = std::move(next);
    }

    auto pivots = ideal.pivots();
    std::vector<bool> is_pivot(n, false);
    for (auto p : pivots) is_pivot[p] = true;
    auto coord = std::make_shared<std::vector<std::int64_t>>(n, -1);
    std::vector<std::uint32_t> kept;
    for (std::size_t i = 0; i < n; ++i) {
        if (is_pivot[i]) continue;
        (*coord)[i] = static_cast<std::int64_t>(kept.size());
        kept.push_back(static_cast<std::uint32_t>(i));
    }
    auto reducer = std::make_shared<Echelon>(std::move(ideal));

    FDModule m;
    m.algebra = envelope;
    m.dim = kept.size();
    const std::size_t d = n;
    m.act = [a, reducer, coord, kept, field, d](std::size_t i, std::size_t b) -> SparseVec {
        std::size_t x = b / d;
        std::size_t y = b % d;
        SparseVec xm = a.multiply_basis(x, kept[i]);
        if (xm.empty()) return {};
        SparseVec xmy = a.multiply(xm, unit_vector(field, static_cast<std::uint32_t>(y)));
        SparseVec r = reducer->reduce(xmy);
        SparseVec out;
        for (const auto& [k, c] : r) out.emplace_back(static_cast<std::uint32_t>((*coord)[k]), c);
        return out;
    };
    if (a.graded()) {
        std::vector<int> deg;
        for (auto k : kept) deg.push_back(a.degree(k));
        m.degrees = std::move(deg);
    }
    return m;
}

}  // namespace qstretch
