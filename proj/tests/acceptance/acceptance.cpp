#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles/anick.hpp"
#include "qstretch/koszul.hpp"
#include "qstretch/stretch.hpp"
#include "qstretch/transport.hpp"
#include "support.hpp"

using namespace qstretch;
using testing::build;
using testing::fixture;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) {
            pass = false;
            detail = what;
        }
    }
};

const char* const kGraded[] = {"example_1_5", "fg2", "truncated_x2", "truncated_x3"};
const char* const kAll[] = {"example_1_5", "fg2", "truncated_x2", "truncated_x3", "ungraded_f7"};
const char* const kMonomial[] = {"fg2", "truncated_x2", "truncated_x3"};

std::string tag(const char* name, std::size_t A) { return std::string(name) + " A=" + std::to_string(A); }

Quiver random_quiver(std::mt19937& rng, std::size_t max_vertices, std::size_t max_arrows) {
    std::uniform_int_distribution<std::size_t> nv(1, max_vertices), na(0, max_arrows);
    std::size_t n = nv(rng), m = na(rng);
    std::vector<std::string> vertices;
    for (std::size_t i = 0; i < n; ++i) vertices.push_back("v" + std::to_string(i));
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::vector<ArrowDecl> arrows;
    for (std::size_t j = 0; j < m; ++j) arrows.push_back({"a" + std::to_string(j), vertices[pick(rng)], vertices[pick(rng)]});
    return Quiver(vertices, arrows);
}

std::vector<Path> paths_of_length(const Quiver& q, std::size_t l) {
    std::vector<Path> layer;
    for (VertexId v = 0; v < q.vertex_count(); ++v) layer.push_back(Path::trivial(v));
    for (std::size_t i = 0; i < l; ++i) {
        std::vector<Path> next;
        for (const auto& p : layer) {
            for (ArrowId a : q.arrows_from(p.target())) {
                auto w = p.arrows();
                w.push_back(a);
                next.push_back(Path::from_arrows(q, w));
            }
        }
        layer = std::move(next);
    }
    return layer;
}

// A random monomial algebra: some paths of length 2 plus every path of length 3 avoiding them.
testing::Presentation random_monomial(std::mt19937& rng) {
    testing::Presentation p;
    p.field = Field::rationals();
    do {
        p.quiver = random_quiver(rng, 3, 4);
    } while (p.quiver.arrow_count() == 0);
    std::bernoulli_distribution coin(0.4);
    std::vector<Path> chosen;
    for (const auto& w : paths_of_length(p.quiver, 2)) {
        if (coin(rng)) chosen.push_back(w);
    }
    for (const auto& w : paths_of_length(p.quiver, 3)) {
        bool covered = false;
        for (const auto& c : chosen) covered = covered || find_subword(w.arrows(), c.arrows()).has_value();
        if (!covered) p.relations.emplace_back(p.field, w);
    }
    for (const auto& c : chosen) p.relations.emplace_back(p.field, c);
    return p;
}

std::vector<std::vector<oracle::ChainKey>> betti_keys(const MinimalResolution& res) {
    std::vector<std::vector<oracle::ChainKey>> out;
    for (const auto& row : betti_data(res).entries) {
        std::vector<oracle::ChainKey> keys;
        for (const auto& e : row) keys.push_back({e.vertex, static_cast<std::size_t>(e.degree.value_or(-1))});
        std::sort(keys.begin(), keys.end());
        out.push_back(keys);
    }
    return out;
}

std::vector<oracle::Word> words(const std::vector<PathElement>& rels) {
    std::vector<oracle::Word> out;
    for (const auto& r : rels) out.push_back(r.tip().arrows());
    return out;
}

void require_records(Outcome& o, const std::vector<CheckRecord>& recs, const std::string& where) {
    for (const auto& r : recs) {
        o.require(!r.failed(), where + ": " + r.name + " predicted " + r.predicted + ", computed " + r.computed);
    }
}

Outcome criterion_1() {
    Outcome o;
    auto p = fixture("example_1_5");
    auto sp = stretch_algebra(build(p), 2);
    const Quiver& q = sp.map.stretched;
    o.require(q.vertex_count() == 3, "vertex count");
    o.require(q.arrow_count() == 4, "arrow count");
    testing::Presentation s{p.field, q, {}};
    std::vector<PathElement> want{testing::element(s, "x#1*x#2*x#1*x#2"),
                                  testing::element(s, "x#1*x#2*y#1*y#2 - y#1*y#2*x#1*x#2"),
                                  testing::element(s, "y#1*y#2*y#1*y#2")};
    o.require(sp.relations == want, "relations differ from (x1x2)^2, x1x2y1y2 - y1y2x1x2, (y1y2)^2");
    o.detail = o.pass ? "3 vertices, 4 arrows, 3 relations" : o.detail;
    return o;
}

Outcome criterion_2() {
    Outcome o;
    std::mt19937 rng(2);
    std::uniform_int_distribution<std::size_t> factor(1, 4);
    std::size_t count = 0;
    for (; count < 200; ++count) {
        Quiver q = random_quiver(rng, 6, 8);
        std::size_t A = factor(rng);
        auto m = stretch_quiver(q, A);
        o.require(m.stretched.vertex_count() == q.vertex_count() + q.arrow_count() * (A - 1), "vertex count");
        o.require(m.stretched.arrow_count() == q.arrow_count() * A, "arrow count");
        for (ArrowId a = 0; a < q.arrow_count(); ++a) {
            auto img = theta_star(m, Path::arrow(q, a));
            o.require(img.length() == A && img.source() == q.arrow(a).source && img.target() == q.arrow(a).target,
                      "theta* of an arrow");
        }
    }
    if (o.pass) o.detail = std::to_string(count) + " random quivers";
    return o;
}

Outcome criterion_3() {
    Outcome o;
    for (const char* name : kGraded) {
        auto lambda = build(fixture(name));
        for (std::size_t A : {1, 2, 3}) {
            auto sp = stretch_algebra(lambda, A);
            auto c = corner_algebra(sp, lambda);
            o.require(c.basis.size() == lambda.dim(), tag(name, A) + ": dim of corner");
            o.require(c.pass(), tag(name, A) + ": " + c.first_failure);
        }
    }
    if (o.pass) o.detail = "4 fixtures x A in {1,2,3}";
    return o;
}

Outcome criterion_4() {
    Outcome o;
    for (const char* name : kAll) {
        auto lambda = build(fixture(name));
        for (std::size_t A : {1, 2, 3}) require_records(o, dimension_report(lambda, stretch_algebra(lambda, A)), tag(name, A));
    }
    std::mt19937 rng(4);
    std::size_t instances = 0;
    for (; instances < 25; ++instances) {
        auto p = random_monomial(rng);
        auto lambda = build(p);
        for (std::size_t A : {2, 3}) {
            require_records(o, dimension_report(lambda, stretch_algebra(lambda, A)),
                            "random #" + std::to_string(instances) + " A=" + std::to_string(A));
        }
    }
    if (o.pass) o.detail = "5 fixtures, " + std::to_string(instances) + " random monomial algebras";
    return o;
}

Outcome criterion_5() {
    Outcome o;
    std::size_t records = 0;
    for (const char* name : kAll) {
        auto lambda = build(fixture(name));
        for (std::size_t A : {1, 2, 3}) {
            auto recs = verify_stratifying(stretch_algebra(lambda, A));
            records += recs.size();
            require_records(o, recs, tag(name, A));
        }
    }
    if (o.pass) o.detail = std::to_string(records) + " records";
    return o;
}

Outcome criterion_6() {
    Outcome o;
    std::ostringstream detail;
    for (const char* name : {"example_1_5", "truncated_x2"}) {
        auto sp = stretch_algebra(build(fixture(name)), 2);
        auto s = StructuredAlgebra::from_quotient(std::make_shared<const QuotientAlgebra>(sp.algebra));
        auto env = StructuredAlgebra::enveloping(s, 4096);
        auto res = minimal_resolution(epsilon_quotient_module(sp, s, env), 4);
        auto pd = pdim_of(res);
        o.require(res.d_squared_zero && res.minimal && res.exact, std::string(name) + ": resolution checks");
        o.require(pd.to_string() == "2", std::string(name) + ": pdim " + pd.to_string());
        detail << name << " env dim " << env.dim() << " pdim " << pd.to_string() << "; ";
    }
    if (o.pass) o.detail = detail.str();
    return o;
}

Outcome criterion_7() {
    Outcome o;
    std::size_t identities = 0;
    for (const char* name : kAll) {
        auto lambda = build(fixture(name));
        for (std::size_t A : {2, 3}) {
            for (const auto& r : verify_bimodule_formulas(stretch_algebra(lambda, A))) {
                o.require(!r.failed(), tag(name, A) + ": " + r.name);
                if (r.name.find("envelope") == std::string::npos) {
                    o.require(r.status == Status::Pass, tag(name, A) + ": " + r.name + " not checked");
                    ++identities;
                }
            }
        }
    }
    if (o.pass) o.detail = std::to_string(identities) + " per-arrow identities";
    return o;
}

Outcome criterion_8() {
    Outcome o;
    std::size_t algebras = 0;
    auto compare_with_oracle = [&](const Quiver& q, const QuotientAlgebra& a, const std::vector<PathElement>& rels,
                                   const std::string& where) {
        auto res = resolve_top(a, 6);
        auto chains = oracle::anick_chains(q, words(rels), 6);
        o.require(betti_keys(res) == chains, where + ": resolution differs from overlap chains");
        ++algebras;
    };
    for (const char* name : kMonomial) {
        auto lambda = build(fixture(name));
        for (std::size_t A : {1, 2, 3}) {
            auto sp = stretch_algebra(lambda, A);
            compare_with_oracle(sp.map.stretched, sp.algebra, sp.relations, tag(name, A));
        }
    }
    // random instances whose chain counts stay small enough to resolve quickly
    std::mt19937 rng(8);
    for (int accepted = 0, drawn = 0; accepted < 15; ++drawn) {
        auto p = random_monomial(rng);
        auto a = build(p);
        std::vector<PathElement> minimal(a.groebner_basis().elements());
        std::size_t widest = 0;
        for (const auto& level : oracle::anick_chains(p.quiver, words(minimal), 6)) widest = std::max(widest, level.size());
        if (widest > 64) continue;
        compare_with_oracle(p.quiver, a, minimal, "random #" + std::to_string(drawn));
        ++accepted;
    }
    if (o.pass) o.detail = std::to_string(algebras) + " monomial algebras up to n = 6";
    return o;
}

Outcome criterion_9() {
    Outcome o;
    for (const char* name : kGraded) {
        auto lambda = build(fixture(name));
        auto res = resolve_top(lambda, 5);
        for (std::size_t A : {1, 2, 3}) {
            auto sp = stretch_algebra(lambda, A);
            require_records(o, verify_transport(res, lambda, resolve_top(sp.algebra, 5), sp), tag(name, A));
        }
    }
    if (o.pass) o.detail = "4 graded fixtures x A in {1,2,3}, n_max = 5";
    return o;
}

Outcome criterion_10() {
    Outcome o;
    auto lambda = build(fixture("fg2"));
    auto d = detect_d_koszul(betti_data(resolve_top(lambda, 6)));
    o.require(d.D == 3u && d.status_string() == "UP-TO(6)", "d-Koszul: " + d.status_string() + " " + d.reason);
    auto sp = stretch_algebra(lambda, 2);
    auto s = detect_DA_stacked(betti_data(resolve_top(sp.algebra, 6)));
    o.require(s.D == 6u && s.A == 2u && s.status_string() == "UP-TO(6)",
              "stacked: " + s.status_string() + " " + s.reason);
    if (o.pass) o.detail = "d = 3 UP-TO(6); (D,A) = (6,2) UP-TO(6)";
    return o;
}

Outcome criterion_11() {
    Outcome o;
    auto idim = [](const QuotientAlgebra& a) {
        return injective_dimension_bounded(StructuredAlgebra::from_quotient(a), 6);
    };
    auto fg = build(fixture("fg2"));
    o.require(idim(fg).to_string() == "0", "idim of the two-cycle algebra is " + idim(fg).to_string());
    auto big = idim(stretch_algebra(fg, 2).algebra);
    o.require(big.to_string() == "2", "idim of its stretch is " + big.to_string());
    std::size_t compared = 0;
    for (const char* name : kAll) {
        auto lambda = build(fixture(name));
        auto small = idim(lambda);
        for (std::size_t A : {2, 3}) {
            auto stretched = idim(stretch_algebra(lambda, A).algebra);
            using K = ProjectiveDimension::Kind;
            if (small.kind != K::Exact || stretched.kind != K::Exact) continue;
            o.require(stretched.value <= std::max<std::size_t>(small.value, 2), tag(name, A) + ": bound exceeded");
            ++compared;
        }
    }
    if (o.pass) o.detail = "idim 0 and 2; bound checked on " + std::to_string(compared) + " pairs";
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        std::function<Outcome()> run;
        double limit_seconds;  // 0: no limit
    };
    std::vector<Criterion> criteria{{1, criterion_1, 1},   {2, criterion_2, 10},  {3, criterion_3, 30},
                                    {4, criterion_4, 0},   {5, criterion_5, 0},   {6, criterion_6, 120},
                                    {7, criterion_7, 0},   {8, criterion_8, 0},   {9, criterion_9, 0},
                                    {10, criterion_10, 60}, {11, criterion_11, 0}};
    int failures = 0;
    for (const auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (o.pass && c.limit_seconds > 0 && secs > c.limit_seconds) {
            o.pass = false;
            o.detail = "time limit of " + std::to_string(c.limit_seconds) + " s exceeded";
        }
        if (!o.pass) ++failures;
        char timing[32];
        std::snprintf(timing, sizeof timing, "%.3f s", secs);
        std::cout << "criterion " << c.id << ": " << (o.pass ? "PASS" : "FAIL") << " (" << timing << ") " << o.detail
                  << std::endl;
    }
    return failures == 0 ? 0 : 1;
}
