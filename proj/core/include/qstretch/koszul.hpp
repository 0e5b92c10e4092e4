#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "qstretch/check.hpp"
#include "qstretch/resolution.hpp"

namespace qstretch {

class InsufficientDataError : public Error {
public:
    using Error::Error;
};

/// 0, 1, (n/2)D for even n >= 2 and ((n-1)/2)D + A for odd n >= 3.
/// Throws std::invalid_argument unless D >= 2 and A >= 1.
std::size_t delta(std::size_t n, std::size_t D, std::size_t A);

struct DegreeVerdict {
    /// (D, A); for the d-Koszul detector A is 1 and D is d.
    std::optional<std::size_t> D;
    std::optional<std::size_t> A;
    Status status = Status::Fail;
    std::size_t up_to = 0;
    std::optional<std::size_t> failure_degree;
    std::string reason;

    bool ok() const { return status != Status::Fail; }
    std::string status_string() const;
};

/// Looks for d with every generator of P^n in degree δ(n, d, 1).  d is read
/// from P^2, or taken from `d_hint` when P^2 is empty.  PASS when the
/// resolution terminated, UP-TO(n_max) otherwise.
DegreeVerdict detect_d_koszul(const BettiData& betti, std::optional<std::size_t> d_hint = std::nullopt);

/// D from the degree of P^2, A from deg P^3 - D, then every computed step is
/// checked against δ(n, D, A).  Throws InsufficientDataError if n_max < 3.
DegreeVerdict detect_DA_stacked(const BettiData& betti);

}  // namespace qstretch
