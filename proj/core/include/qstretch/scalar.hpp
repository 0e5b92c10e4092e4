#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace qstretch {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class FieldMismatchError : public Error {
public:
    using Error::Error;
};

/// The coefficient field: either the rationals or a prime field F_p.
class Field {
public:
    Field() = default;

    static Field rationals() { return Field{}; }
    /// Throws std::invalid_argument unless p is a prime below 2^31.
    static Field prime(std::uint64_t p);

    bool is_rational() const { return modulus_ == 0; }
    bool is_prime() const { return modulus_ != 0; }
    std::uint64_t characteristic() const { return modulus_; }

    /// "Q" or "F <p>"; the same spelling the algebra file format uses.
    std::string to_string() const;

    friend bool operator==(const Field&, const Field&) = default;

private:
    friend class Scalar;
    explicit Field(std::uint64_t p) : modulus_(p) {}
    std::uint64_t modulus_ = 0;
};

/// An exact field element.
///
/// Rationals are kept as a reduced int64 fraction and promoted to GMP only
/// when a result no longer fits; the canonical form is unique either way.
/// Elements of F_p store their representative in [0, p).
class Scalar {
public:
    Scalar() = default;  // rational zero
    Scalar(const Field& field, std::int64_t value);
    Scalar(const Field& field, std::int64_t numerator, std::int64_t denominator);
    Scalar(const Field& field, const mpq_class& value);

    static Scalar zero(const Field& field) { return Scalar(field, 0); }
    static Scalar one(const Field& field) { return Scalar(field, 1); }

    Field field() const;
    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    Scalar inverse() const;  // throws std::domain_error on zero

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
    Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
    Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

    friend bool operator==(const Scalar& a, const Scalar& b);

    /// "3", "-1/2", or the residue for F_p.
    std::string to_string() const;

    /// Rational value (for F_p, the residue as an integer).
    mpq_class to_mpq() const;

private:
    static Scalar from_mpq(std::uint64_t modulus, const mpq_class& q);
    void set_small_rational(__int128 num, __int128 den);
    static void check_same_field(const Scalar& a, const Scalar& b);

    std::uint64_t modulus_ = 0;
    std::int64_t num_ = 0;  // residue when modulus_ != 0
    std::int64_t den_ = 1;
    std::shared_ptr<const mpq_class> big_;  // set iff the fraction does not fit in int64
};

}  // namespace qstretch
