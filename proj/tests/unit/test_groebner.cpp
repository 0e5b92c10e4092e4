#include "doctest.h"
#include "oracles/graded_dimension.hpp"
#include "qstretch/groebner.hpp"
#include "support.hpp"

#include <random>

using namespace qstretch;
using testing::element;
using testing::fixture;
using testing::path;

TEST_SUITE("groebner") {
    TEST_CASE("commuting loops truncated in degree two") {
        auto p = fixture("example_1_5");
        auto r = buchberger(p.quiver, p.relations, default_degree_cap(p.relations));
        CHECK(r.complete);
        CHECK_FALSE(r.monomial_fast_path);
        REQUIRE(r.basis.size() == 3);
        std::vector<std::string> tips;
        for (const auto& g : r.basis.elements()) tips.push_back(g.to_string(p.quiver));
        CHECK(tips == std::vector<std::string>{"x*x", "y*x - x*y", "y*y"});
        auto words = enumerate_basis(p.quiver, r);
        REQUIRE(words.size() == 4);
        CHECK(words[3] == path(p.quiver, {"x", "y"}));
        CHECK(r.basis.is_length_homogeneous());
    }

    TEST_CASE("normal forms are canonical") {
        auto p = fixture("example_1_5");
        auto r = buchberger(p.quiver, p.relations, default_degree_cap(p.relations));
        auto yx = element(p, "y*x");
        auto xy = element(p, "x*y");
        CHECK(normal_form(p.quiver, yx, r.basis) == xy);
        CHECK(normal_form(p.quiver, element(p, "x*y*x"), r.basis).is_zero());
        CHECK(normal_form(p.quiver, element(p, "3*y*x - x*y + x*x"), r.basis) == element(p, "2*x*y"));
    }

    TEST_CASE("monomial relations take the fast path") {
        auto p = fixture("fg2");
        auto r = buchberger(p.quiver, p.relations, default_degree_cap(p.relations));
        CHECK(r.monomial_fast_path);
        CHECK(r.complete);
        CHECK(r.basis.is_monomial());
        CHECK(enumerate_basis(p.quiver, r).size() == 6);
    }

    TEST_CASE("the relation (ab)^2 on the two-cycle leaves nine normal words") {
        auto p = fixture("fg2");
        p.relations = {element(p, "a*b*a*b")};
        auto r = buchberger(p.quiver, p.relations, default_degree_cap(p.relations));
        CHECK(enumerate_basis(p.quiver, r).size() == 9);
        CHECK(oracle::graded_dimension(p.quiver, p.relations, p.field, 12) == 9);
    }

    TEST_CASE("rejections") {
        auto p = fixture("fg2");
        PathElement mixed = element(p, "a*b") + element(p, "b*a");
        CHECK_THROWS_AS(buchberger(p.quiver, {mixed}, 8), NotUniformError);
        auto loops = fixture("example_1_5");
        CHECK_THROWS_AS(buchberger(loops.quiver, {element(loops, "x")}, 8), NotAdmissibleError);
        CHECK_THROWS_AS(buchberger(loops.quiver, {element(loops, "x*x + y")}, 8), NotAdmissibleError);
        auto free = buchberger(loops.quiver, {}, 8, Field::rationals());
        CHECK_FALSE(free.complete);
        CHECK(free.infinite_dimensional);
        CHECK_THROWS_AS(enumerate_basis(loops.quiver, free), InfiniteDimensionalError);
    }

    TEST_CASE("random homogeneous relations agree with degreewise linear algebra") {
        std::mt19937 rng(20261016);
        std::uniform_int_distribution<int> coef(-2, 2);
        auto base = fixture("example_1_5");
        std::vector<Path> quadratic;
        for (const char* a : {"x", "y"}) {
            for (const char* b : {"x", "y"}) quadratic.push_back(path(base.quiver, {a, b}));
        }
        int checked = 0;
        for (int trial = 0; trial < 40; ++trial) {
            std::vector<PathElement> rels;
            for (int k = 0; k < 3; ++k) {
                PathElement r(base.field);
                for (const auto& w : quadratic) r.add_term(w, Scalar(base.field, coef(rng)));
                if (!r.is_zero()) rels.push_back(r);
            }
            auto expected = oracle::graded_dimension(base.quiver, rels, base.field, 8);
            if (!expected) continue;
            auto r = buchberger(base.quiver, rels, 16);
            REQUIRE(r.complete);
            CHECK(enumerate_basis(base.quiver, r).size() == *expected);
            ++checked;
        }
        CHECK(checked >= 10);
    }
}
