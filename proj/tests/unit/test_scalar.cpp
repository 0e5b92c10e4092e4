#include "doctest.h"
#include "qstretch/scalar.hpp"

#include <stdexcept>

using namespace qstretch;

TEST_SUITE("scalar") {
    TEST_CASE("rational arithmetic is exact") {
        Field q = Field::rationals();
        Scalar a(q, 1, 3), b(q, 1, 6);
        CHECK(a + b == Scalar(q, 1, 2));
        CHECK(a - b == Scalar(q, 1, 6));
        CHECK(a * b == Scalar(q, 1, 18));
        CHECK(a / b == Scalar(q, 2));
        CHECK((-a).to_string() == "-1/3");
        CHECK(Scalar(q, 4, -6) == Scalar(q, -2, 3));
    }

    TEST_CASE("rationals grow past machine words") {
        Field q = Field::rationals();
        Scalar big(q, std::int64_t{1} << 62);
        Scalar sq = big * big;
        CHECK(sq.to_mpq() == mpq_class(mpz_class(1) << 124));
        CHECK(sq / big == big);
        CHECK((sq - sq).is_zero());
    }

    TEST_CASE("prime field reduces and inverts") {
        Field f = Field::prime(7);
        CHECK(Scalar(f, 10) == Scalar(f, 3));
        CHECK(Scalar(f, -1) == Scalar(f, 6));
        CHECK(Scalar(f, 3) * Scalar(f, 3).inverse() == Scalar::one(f));
        CHECK(Scalar(f, 1, 2) == Scalar(f, 4));
        for (std::int64_t x = 1; x < 7; ++x) CHECK((Scalar(f, x) * Scalar(f, x).inverse()).is_one());
    }

    TEST_CASE("invalid fields and operations") {
        CHECK_THROWS_AS(Field::prime(4), std::invalid_argument);
        CHECK_THROWS_AS(Field::prime(1), std::invalid_argument);
        CHECK_THROWS_AS(Scalar::zero(Field::rationals()).inverse(), std::domain_error);
        CHECK_THROWS_AS(Scalar(Field::prime(5), 1, 5), std::domain_error);
        CHECK_THROWS_AS(Scalar(Field::prime(5), 1) + Scalar(Field::rationals(), 1), FieldMismatchError);
    }
}
