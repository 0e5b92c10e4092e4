#include "doctest.h"
#include "qstretch/linalg.hpp"

#include <random>

using namespace qstretch;

namespace {

SparseVec vec(const Field& f, std::vector<std::int64_t> dense) {
    std::vector<std::pair<std::uint32_t, Scalar>> e;
    for (std::uint32_t i = 0; i < dense.size(); ++i) e.emplace_back(i, Scalar(f, dense[i]));
    return canonicalize(std::move(e));
}

SparseVec apply_columns(const std::vector<SparseVec>& columns, const SparseVec& x) {
    SparseVec out;
    for (const auto& [j, c] : x) out = axpy(out, c, columns[j]);
    return out;
}

}  // namespace

TEST_SUITE("linalg") {
    TEST_CASE("canonicalize merges and drops zeros") {
        Field q = Field::rationals();
        auto v = canonicalize({{3, Scalar(q, 1)}, {1, Scalar(q, 2)}, {3, Scalar(q, -1)}});
        REQUIRE(v.size() == 1);
        CHECK(v[0].first == 1);
        CHECK(coefficient(v, 1, q) == Scalar(q, 2));
        CHECK(coefficient(v, 3, q).is_zero());
    }

    TEST_CASE("echelon rank and membership") {
        Field q = Field::rationals();
        Echelon e(q, 3);
        CHECK(e.insert(vec(q, {1, 2, 3})));
        CHECK(e.insert(vec(q, {0, 1, 1})));
        CHECK_FALSE(e.insert(vec(q, {2, 5, 7})));
        CHECK(e.rank() == 2);
        CHECK(e.contains(vec(q, {1, 3, 4})));
        CHECK_FALSE(e.contains(vec(q, {0, 0, 1})));
        auto rref = e.reduced_basis();
        REQUIRE(rref.size() == 2);
        CHECK(rref[0].front().first == 0);
        CHECK(rref[1].front().first == 1);
        CHECK(coefficient(rref[0], 1, q).is_zero());
    }

    TEST_CASE("kernel vectors are annihilated and complete") {
        std::mt19937 rng(7);
        std::uniform_int_distribution<int> coef(-2, 2);
        for (Field f : {Field::rationals(), Field::prime(3)}) {
            for (int trial = 0; trial < 20; ++trial) {
                std::size_t rows = 1 + trial % 4, cols = 2 + trial % 5;
                std::vector<SparseVec> columns;
                for (std::size_t j = 0; j < cols; ++j) {
                    std::vector<std::int64_t> d(rows);
                    for (auto& x : d) x = coef(rng);
                    columns.push_back(vec(f, d));
                }
                auto k = kernel(f, columns, rows);
                CHECK(k.rank + k.kernel.size() == cols);
                CHECK(k.rank == rank_of(f, columns, rows));
                for (const auto& v : k.kernel) CHECK(apply_columns(columns, v).empty());
            }
        }
    }
}
