#include "qstretch/transport.hpp"

#include <algorithm>
#include <memory>
#include <sstream>
#include <stdexcept>

namespace qstretch {

namespace {

VertexId generator_vertex(const StructuredAlgebra& a, const QuotientAlgebra& q, std::size_t idempotent) {
    return q.basis_word(a.idempotents().at(idempotent)).source();
}

std::string join(const std::vector<std::string>& parts) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ", ";
        out += parts[i];
    }
    return "{" + out + "}";
}

// Sorted "vertex@degree" labels of the generators of P^n.
std::vector<std::string> summands(const MinimalResolution& res, const QuotientAlgebra& q, std::size_t n,
                                  std::size_t scale, const StretchMap* embed) {
    std::vector<std::string> out;
    for (const auto& g : res.steps[n].generators) {
        VertexId v = generator_vertex(res.algebra, q, g.idempotent);
        std::string name = embed ? embed->stretched.vertex_name(v) : q.quiver().vertex_name(v);
        if (res.graded && g.degree) name += "@" + std::to_string(static_cast<std::size_t>(*g.degree) * scale);
        out.push_back(std::move(name));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Sorted endpoint/length labels of g^n, or the paths themselves when `exact`.
std::vector<std::string> gsz_labels(const std::vector<PathElement>& g, const Quiver& q, bool exact, bool lengths) {
    std::vector<std::string> out;
    for (const auto& x : g) {
        if (x.is_zero()) {
            out.push_back("0");
            continue;
        }
        if (exact) {
            out.push_back(x.to_string(q));
            continue;
        }
        const Path& t = x.tip();
        std::string s = q.vertex_name(t.source()) + "->" + q.vertex_name(t.target());
        if (lengths) s += ":" + std::to_string(t.length());
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

GszData gsz_data(const MinimalResolution& res, const QuotientAlgebra& lambda) {
    GszData out;
    const Field& f = lambda.field();
    for (std::size_t n = 0; n < res.steps.size(); ++n) {
        const auto& step = res.steps[n];
        std::vector<PathElement> level;
        for (const auto& gen : step.generators) {
            PathElement x(f);
            if (n == 0) {
                for (const auto& [i, c] : gen.element) {
                    x.add_term(Path::trivial(generator_vertex(res.algebra, lambda, i)), c);
                }
            } else {
                const auto& prev_basis = res.steps[n - 1].basis;
                for (const auto& [p, c] : gen.element) {
                    auto [j, b] = prev_basis.at(p);
                    PathElement term = multiply(out.g[n - 1].at(j), PathElement(f, lambda.basis_word(b)));
                    x = x + c * term;
                }
            }
            VertexId v = generator_vertex(res.algebra, lambda, gen.idempotent);
            if (x.is_zero()) {
                out.consistent = false;
            } else {
                auto cl = classify(x);
                if (!cl.uniform || cl.target != v) out.consistent = false;
            }
            if (x.size() != 1) out.paths = false;
            level.push_back(std::move(x));
        }
        out.g.push_back(std::move(level));
    }
    return out;
}

MinimalResolution resolve_top(const QuotientAlgebra& lambda, std::size_t n_max) {
    auto a = StructuredAlgebra::from_quotient(lambda);
    return minimal_resolution(simple_top(a), n_max);
}

std::vector<CheckRecord> verify_transport(const MinimalResolution& res, const QuotientAlgebra& lambda,
                                          const MinimalResolution& stretched_res, const StretchedPresentation& sp) {
    std::vector<CheckRecord> out;
    const std::size_t A = sp.map.factor;
    const QuotientAlgebra& big = sp.algebra;
    const std::size_t m0 = lambda.quiver().vertex_count();
    const std::size_t m1 = lambda.quiver().arrow_count();
    auto count = [](const MinimalResolution& r, std::size_t n) {
        return n < r.steps.size() ? r.steps[n].generators.size() : std::size_t{0};
    };
    out.push_back(compare("transport.P0", m0 + m1 * (A - 1), count(stretched_res, 0)));
    out.push_back(compare("transport.P1", m1 * A, count(stretched_res, 1)));

    GszData g = gsz_data(res, lambda);
    GszData gt = gsz_data(stretched_res, big);
    const bool graded = res.graded && stretched_res.graded;
    const bool exact = g.paths && gt.paths;
    const std::size_t top = std::min(res.n_max, stretched_res.n_max);
    for (std::size_t n = 2; n <= top; ++n) {
        std::vector<std::string> predicted, computed;
        if (n < res.steps.size()) predicted = summands(res, lambda, n, A, &sp.map);
        if (n < stretched_res.steps.size()) computed = summands(stretched_res, big, n, 1, nullptr);
        out.push_back(compare("transport.P" + std::to_string(n), join(predicted), join(computed)));

        std::vector<PathElement> image;
        if (n < g.g.size()) {
            for (const auto& x : g.g[n]) image.push_back(theta_star(sp.map, x));
        }
        std::vector<PathElement> mine;
        if (n < gt.g.size()) mine = gt.g[n];
        auto rec = compare("transport.gsz.P" + std::to_string(n), join(gsz_labels(image, big.quiver(), exact, graded)),
                           join(gsz_labels(mine, big.quiver(), exact, graded)));
        if (!g.consistent || !gt.consistent) {
            rec.status = Status::Fail;
            rec.detail = "inconsistent generator data";
        }
        out.push_back(std::move(rec));
    }
    if (!res.terminated || !stretched_res.terminated) {
        for (auto& r : out) {
            if (r.status == Status::Pass) {
                r.status = Status::UpTo;
                r.up_to = top;
            }
        }
    }
    return out;
}

FDModule epsilon_quotient_module(const StretchedPresentation& sp, const StructuredAlgebra& stretched,
                                 const StructuredAlgebra& envelope) {
    return quotient_by_ideal_module(stretched, envelope, epsilon_spanning_set(sp));
}

std::vector<CheckRecord> verify_bimodule_formulas(const StretchedPresentation& sp, std::size_t budget) {
    std::vector<CheckRecord> out;
    const std::size_t A = sp.map.factor;
    if (A < 2) {
        CheckRecord r;
        r.name = "bimodule";
        r.status = Status::Skipped;
        r.detail = "stretch factor 1";
        out.push_back(std::move(r));
        return out;
    }
    const QuotientAlgebra& big = sp.algebra;
    const Quiver& q = sp.map.original;
    auto xs = x_alpha_dimensions(sp);
    std::size_t sum_r0 = 0, sum_r1 = 0, sum_r2 = 0;
    for (ArrowId a = 0; a < q.arrow_count(); ++a) {
        const auto& w = sp.map.inner[a];
        const std::string tag = "[" + q.arrow(a).name + "]";
        const std::size_t V = big.left_projective_dim(q.arrow(a).source);
        const std::size_t Vp = big.right_projective_dim(q.arrow(a).target);
        auto L = [&](std::size_t i) { return big.left_projective_dim(w[i - 1]); };
        auto R = [&](std::size_t i) { return big.right_projective_dim(w[i - 1]); };

        std::size_t r0 = 0;
        for (std::size_t i = 1; i < A; ++i) r0 += L(i) * R(i);
        std::size_t r0f = (A - 1) * A * (A + 1) / 6 + (A - 1) * A * (V + Vp) / 2 + (A - 1) * V * Vp;
        out.push_back(compare("bimodule.R0" + tag, r0f, r0));

        std::size_t k0 = r0 - xs[a];
        std::size_t k0f = (A - 2) * (A - 1) * A / 6 + (A - 1) * A * (V + Vp) / 2 + (A - 1) * V * Vp;
        out.push_back(compare("bimodule.KerDelta0" + tag, k0f, k0));

        std::size_t r1 = V * R(1) + L(A - 1) * Vp;
        for (std::size_t i = 1; i + 1 < A; ++i) r1 += L(i) * R(i + 1);
        std::size_t r1f = A * (A - 1) * (V + Vp) / 2 + A * V * Vp + A * (A - 1) * (A - 2) / 6;
        out.push_back(compare("bimodule.R1" + tag, r1f, r1));

        out.push_back(compare("bimodule.KerDelta1" + tag, V * Vp, r1 - k0));
        out.push_back(compare("bimodule.R2" + tag, r1 - k0, V * Vp));
        sum_r0 += r0;
        sum_r1 += r1;
        sum_r2 += V * Vp;
    }

    const char* names[] = {"bimodule.envelope.P0", "bimodule.envelope.P1", "bimodule.envelope.P2",
                           "bimodule.envelope.pdim"};
    auto lambda = std::make_shared<const QuotientAlgebra>(big);
    auto s = StructuredAlgebra::from_quotient(lambda);
    StructuredAlgebra env;
    try {
        env = StructuredAlgebra::enveloping(s, budget);
    } catch (const BudgetExceededError& e) {
        for (const char* n : names) {
            CheckRecord r;
            r.name = n;
            r.status = Status::Skipped;
            r.detail = e.what();
            out.push_back(std::move(r));
        }
        return out;
    }
    auto res = minimal_resolution(epsilon_quotient_module(sp, s, env), 3);
    auto dim_at = [&](std::size_t n) { return n < res.steps.size() ? res.steps[n].dim() : std::size_t{0}; };
    out.push_back(compare(names[0], sum_r0, dim_at(0)));
    out.push_back(compare(names[1], sum_r1, dim_at(1)));
    out.push_back(compare(names[2], sum_r2, dim_at(2)));
    out.push_back(compare(names[3], "2", pdim_of(res).to_string()));
    return out;
}

}  // namespace qstretch
