#include "doctest.h"
#include "qstretch/transport.hpp"
#include "support.hpp"

using namespace qstretch;
using testing::build;
using testing::fixture;

namespace {

bool none_failed(const std::vector<CheckRecord>& rs) {
    for (const auto& r : rs) {
        if (r.failed()) return false;
    }
    return !rs.empty();
}

const CheckRecord& find(const std::vector<CheckRecord>& rs, const std::string& name) {
    for (const auto& r : rs) {
        if (r.name == name) return r;
    }
    FAIL("missing record " << name);
    return rs.front();
}

}  // namespace

TEST_SUITE("transport") {
    TEST_CASE("transported resolutions of graded fixtures") {
        for (const char* name : {"example_1_5", "fg2", "truncated_x2", "truncated_x3"}) {
            auto lambda = build(fixture(name));
            auto res = resolve_top(lambda, 5);
            for (std::size_t A : {1, 2, 3}) {
                auto sp = stretch_algebra(lambda, A);
                auto big = resolve_top(sp.algebra, 5);
                auto recs = verify_transport(res, lambda, big, sp);
                CHECK_MESSAGE(none_failed(recs), name << " A=" << A);
            }
        }
    }

    TEST_CASE("GSZ sets of a monomial algebra are paths") {
        auto lambda = build(fixture("fg2"));
        auto g = gsz_data(resolve_top(lambda, 4), lambda);
        CHECK(g.paths);
        CHECK(g.consistent);
        REQUIRE(g.g.size() == 5);
        CHECK(g.g[2].size() == 2);
        CHECK(g.g[2][0].tip().length() == 3);
        CHECK(g.g[3][0].tip().length() == 4);
    }

    TEST_CASE("GSZ sets of a commutative relation are uniform combinations") {
        auto lambda = build(fixture("example_1_5"));
        auto g = gsz_data(resolve_top(lambda, 3), lambda);
        CHECK(g.consistent);
        CHECK_FALSE(g.paths);
        CHECK(g.g[2].size() == 3);
    }

    TEST_CASE("bimodule ledger and enveloping cross-check") {
        auto sp = stretch_algebra(build(fixture("truncated_x2")), 2);
        auto recs = verify_bimodule_formulas(sp);
        CHECK(none_failed(recs));
        CHECK(find(recs, "bimodule.R0[x]").computed == "25");
        CHECK(find(recs, "bimodule.envelope.pdim").computed == "2");
        CHECK(find(recs, "bimodule.envelope.P1").status == Status::Pass);
    }

    TEST_CASE("cross-check is skipped over budget") {
        auto sp = stretch_algebra(build(fixture("example_1_5")), 3);
        auto recs = verify_bimodule_formulas(sp);
        CHECK(none_failed(recs));
        CHECK(find(recs, "bimodule.envelope.pdim").status == Status::Skipped);
        CHECK(find(recs, "bimodule.KerDelta1[y]").status == Status::Pass);
    }

    TEST_CASE("stretch factor one has no ledger") {
        auto sp = stretch_algebra(build(fixture("truncated_x2")), 1);
        auto recs = verify_bimodule_formulas(sp);
        REQUIRE(recs.size() == 1);
        CHECK(recs[0].status == Status::Skipped);
    }
}
