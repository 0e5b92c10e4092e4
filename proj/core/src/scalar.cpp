#include "qstretch/scalar.hpp"

#include <limits>

namespace qstretch {

namespace {

using i128 = __int128;

constexpr i128 kInt64Max = std::numeric_limits<std::int64_t>::max();
constexpr i128 kInt64Min = std::numeric_limits<std::int64_t>::min();

bool fits_int64(i128 v) { return v >= kInt64Min && v <= kInt64Max; }

i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

mpz_class to_mpz(i128 v) {
    bool negative = v < 0;
    unsigned __int128 u = negative ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
    mpz_class high(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
    mpz_class low(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
    mpz_class r = (high << 64) + low;
    return negative ? mpz_class(-r) : r;
}

std::uint64_t mod_reduce(std::int64_t v, std::uint64_t p) {
    auto r = v % static_cast<std::int64_t>(p);
    if (r < 0) r += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(r);
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t result = 1;
    base %= p;
    while (exp > 0) {
        if (exp & 1U) result = result * base % p;
        base = base * base % p;
        exp >>= 1U;
    }
    return result;
}

bool is_prime_number(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d) {
        if (p % d == 0) return false;
    }
    return true;
}

}  // namespace

Field Field::prime(std::uint64_t p) {
    if (p >= (1ULL << 31) || !is_prime_number(p)) {
        throw std::invalid_argument("field characteristic must be a prime below 2^31, got " + std::to_string(p));
    }
    return Field(p);
}

std::string Field::to_string() const {
    return is_rational() ? std::string("Q") : "F " + std::to_string(modulus_);
}

Scalar::Scalar(const Field& field, std::int64_t value) : modulus_(field.characteristic()) {
    if (modulus_ != 0) {
        num_ = static_cast<std::int64_t>(mod_reduce(value, modulus_));
    } else {
        num_ = value;
    }
}

Scalar::Scalar(const Field& field, std::int64_t numerator, std::int64_t denominator)
    : modulus_(field.characteristic()) {
    if (denominator == 0) throw std::domain_error("zero denominator");
    if (modulus_ != 0) {
        auto d = mod_reduce(denominator, modulus_);
        if (d == 0) throw std::domain_error("denominator vanishes in " + field.to_string());
        num_ = static_cast<std::int64_t>(mod_reduce(numerator, modulus_) * mod_pow(d, modulus_ - 2, modulus_) %
                                         modulus_);
    } else {
        set_small_rational(numerator, denominator);
    }
}

Scalar::Scalar(const Field& field, const mpq_class& value) { *this = from_mpq(field.characteristic(), value); }

Scalar Scalar::from_mpq(std::uint64_t modulus, const mpq_class& q) {
    Scalar s;
    s.modulus_ = modulus;
    if (modulus != 0) {
        mpz_class p(static_cast<unsigned long>(modulus));
        mpz_class n = q.get_num() % p;
        if (n < 0) n += p;
        mpz_class d = q.get_den() % p;
        if (d == 0) throw std::domain_error("denominator vanishes in F " + std::to_string(modulus));
        auto nv = static_cast<std::uint64_t>(n.get_ui());
        auto dv = static_cast<std::uint64_t>(d.get_ui());
        s.num_ = static_cast<std::int64_t>(nv * mod_pow(dv, modulus - 2, modulus) % modulus);
        return s;
    }
    if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p()) {
        s.num_ = q.get_num().get_si();
        s.den_ = q.get_den().get_si();
    } else {
        s.big_ = std::make_shared<const mpq_class>(q);
    }
    return s;
}

void Scalar::set_small_rational(i128 num, i128 den) {
    if (den < 0) {
        num = -num;
        den = -den;
    }
    i128 g = gcd128(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    if (num == 0) den = 1;
    big_.reset();
    if (fits_int64(num) && fits_int64(den)) {
        num_ = static_cast<std::int64_t>(num);
        den_ = static_cast<std::int64_t>(den);
    } else {
        mpq_class q(to_mpz(num), to_mpz(den));
        q.canonicalize();
        big_ = std::make_shared<const mpq_class>(std::move(q));
        num_ = 0;
        den_ = 1;
    }
}

Field Scalar::field() const { return Field(modulus_); }

bool Scalar::is_zero() const { return !big_ && num_ == 0; }

bool Scalar::is_one() const { return !big_ && num_ == 1 && den_ == 1; }

mpq_class Scalar::to_mpq() const {
    if (big_) return *big_;
    mpq_class q(to_mpz(num_), to_mpz(den_));
    q.canonicalize();
    return q;
}

void Scalar::check_same_field(const Scalar& a, const Scalar& b) {
    if (a.modulus_ != b.modulus_) throw FieldMismatchError("arithmetic between scalars of different fields");
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    if (modulus_ != 0) {
        r.num_ = num_ == 0 ? 0 : static_cast<std::int64_t>(modulus_) - num_;
    } else if (big_) {
        r = from_mpq(0, -*big_);
    } else {
        r.set_small_rational(-static_cast<i128>(num_), den_);
    }
    return r;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    Scalar r = *this;
    if (modulus_ != 0) {
        r.num_ = static_cast<std::int64_t>(mod_pow(static_cast<std::uint64_t>(num_), modulus_ - 2, modulus_));
    } else if (big_) {
        r = from_mpq(0, 1 / *big_);
    } else {
        r.set_small_rational(den_, num_);
    }
    return r;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    Scalar::check_same_field(a, b);
    Scalar r;
    r.modulus_ = a.modulus_;
    if (a.modulus_ != 0) {
        r.num_ = static_cast<std::int64_t>((static_cast<std::uint64_t>(a.num_) + static_cast<std::uint64_t>(b.num_)) %
                                           a.modulus_);
        return r;
    }
    if (a.big_ || b.big_) return Scalar::from_mpq(0, a.to_mpq() + b.to_mpq());
    if (a.den_ == 1 && b.den_ == 1) {
        r.set_small_rational(static_cast<i128>(a.num_) + b.num_, 1);
        return r;
    }
    r.set_small_rational(static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_,
                         static_cast<i128>(a.den_) * b.den_);
    return r;
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
    Scalar::check_same_field(a, b);
    Scalar r;
    r.modulus_ = a.modulus_;
    if (a.modulus_ != 0) {
        r.num_ = static_cast<std::int64_t>(static_cast<std::uint64_t>(a.num_) * static_cast<std::uint64_t>(b.num_) %
                                           a.modulus_);
        return r;
    }
    if (a.big_ || b.big_) return Scalar::from_mpq(0, a.to_mpq() * b.to_mpq());
    r.set_small_rational(static_cast<i128>(a.num_) * b.num_, static_cast<i128>(a.den_) * b.den_);
    return r;
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.modulus_ != b.modulus_) return false;
    if (a.big_ || b.big_) {
        if (static_cast<bool>(a.big_) != static_cast<bool>(b.big_)) return false;
        return *a.big_ == *b.big_;
    }
    return a.num_ == b.num_ && a.den_ == b.den_;
}

std::string Scalar::to_string() const {
    if (big_) return big_->get_str();
    if (modulus_ != 0 || den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace qstretch
