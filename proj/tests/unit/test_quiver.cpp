#include "doctest.h"
#include "qstretch/quiver.hpp"

#include <stdexcept>

using namespace qstretch;

namespace {

Quiver two_cycle() { return Quiver({"1", "2"}, {{"a", "1", "2"}, {"b", "2", "1"}}); }

}  // namespace

TEST_SUITE("quiver") {
    TEST_CASE("declarations are validated") {
        CHECK_THROWS_AS(Quiver({"v", "v"}, {}), std::invalid_argument);
        CHECK_THROWS_AS(Quiver({"v"}, {{"x", "v", "w"}}), std::invalid_argument);
        CHECK_THROWS_AS(Quiver({"v"}, {{"x", "v", "v"}, {"x", "v", "v"}}), std::invalid_argument);
        CHECK_THROWS_AS(Quiver({"v"}, {{"v", "v", "v"}}), std::invalid_argument);
        Quiver q = two_cycle();
        CHECK(q.vertex_count() == 2);
        CHECK(q.arrow_count() == 2);
        CHECK(q.arrows_from(0) == std::vector<ArrowId>{0});
        CHECK(q.arrows_into(0) == std::vector<ArrowId>{1});
    }

    TEST_CASE("paths compose only end to start") {
        Quiver q = two_cycle();
        Path ab = Path::from_arrows(q, {0, 1});
        CHECK(ab.source() == 0);
        CHECK(ab.target() == 0);
        CHECK(ab.to_string(q) == "a*b");
        CHECK_THROWS(Path::from_arrows(q, {0, 0}));
        auto aba = compose(ab, Path::arrow(q, 0));
        REQUIRE(aba);
        CHECK(aba->length() == 3);
        CHECK_FALSE(compose(Path::arrow(q, 0), Path::arrow(q, 0)));
        CHECK(compose(Path::trivial(0), ab) == ab);
        CHECK_FALSE(compose(Path::trivial(1), ab));
        CHECK(aba->subpath(q, 1, 3) == Path::from_arrows(q, {1, 0}));
    }

    TEST_CASE("order is length first, then declaration order") {
        Quiver q({"v"}, {{"x", "v", "v"}, {"y", "v", "v"}});
        Path v = Path::trivial(0), x = Path::arrow(q, 0), y = Path::arrow(q, 1);
        Path xy = Path::from_arrows(q, {0, 1}), yx = Path::from_arrows(q, {1, 0});
        CHECK(v < x);
        CHECK(x < y);
        CHECK(y < xy);
        CHECK(xy < yx);
        CHECK(Path::from_arrows(q, {1, 1}) < Path::from_arrows(q, {0, 0, 0}));
    }

    TEST_CASE("subword search") {
        Quiver q({"v"}, {{"x", "v", "v"}, {"y", "v", "v"}});
        std::vector<ArrowId> w{0, 1, 1, 0};
        CHECK(find_subword(w, {1, 0}) == 2);
        CHECK(find_subword(w, {0, 1}) == 0);
        CHECK_FALSE(find_subword(w, {0, 0}));
    }
}
