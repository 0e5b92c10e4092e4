#include "qstretch/koszul.hpp"

#include <stdexcept>

namespace qstretch {

std::size_t delta(std::size_t n, std::size_t D, std::size_t A) {
    if (D < 2) throw std::invalid_argument("delta needs D >= 2");
    if (A < 1) throw std::invalid_argument("delta needs A >= 1");
    if (n == 0) return 0;
    if (n == 1) return 1;
    if (n % 2 == 0) return (n / 2) * D;
    return ((n - 1) / 2) * D + A;
}

std::string DegreeVerdict::status_string() const {
    CheckRecord r;
    r.status = status;
    r.up_to = up_to;
    return r.status_string();
}

namespace {

// The single degree of P^n, or nothing when it is empty or mixed.
std::optional<int> single_degree(const BettiData& b, std::size_t n, bool& mixed) {
    auto d = b.degrees(n);
    mixed = d.size() > 1;
    if (d.size() != 1) return std::nullopt;
    return d.front();
}

DegreeVerdict fail(std::size_t n, std::string reason) {
    DegreeVerdict v;
    v.status = Status::Fail;
    v.failure_degree = n;
    v.reason = std::move(reason);
    return v;
}

DegreeVerdict check_all(const BettiData& b, std::size_t D, std::size_t A) {
    for (std::size_t n = 0; n < b.entries.size(); ++n) {
        auto want = static_cast<int>(delta(n, D, A));
        for (const auto& e : b.entries[n]) {
            if (e.degree != want) {
                return fail(n, "generator of P^" + std::to_string(n) + " in degree " + std::to_string(*e.degree) +
                                   ", expected " + std::to_string(want));
            }
        }
    }
    DegreeVerdict v;
    v.D = D;
    v.A = A;
    if (b.terminated) {
        v.status = Status::Pass;
    } else {
        v.status = Status::UpTo;
        v.up_to = b.n_max;
    }
    return v;
}

}  // namespace

DegreeVerdict detect_d_koszul(const BettiData& betti, std::optional<std::size_t> d_hint) {
    if (!betti.graded) return fail(0, "ungraded");
    bool mixed = false;
    auto d2 = single_degree(betti, 2, mixed);
    if (mixed) return fail(2, "generators of P^2 in several degrees");
    std::size_t d = 0;
    if (d2) {
        d = static_cast<std::size_t>(*d2);
        if (d_hint && *d_hint != d) {
            return fail(2, "P^2 generated in degree " + std::to_string(d) + ", not " + std::to_string(*d_hint));
        }
    } else if (d_hint) {
        d = *d_hint;
    } else {
        return fail(2, "P^2 is empty; d is undetermined without a hint");
    }
    if (d < 2) return fail(2, "P^2 generated below degree 2");
    return check_all(betti, d, 1);
}

DegreeVerdict detect_DA_stacked(const BettiData& betti) {
    if (betti.n_max < 3) throw InsufficientDataError("(D,A)-stacked detection needs n_max >= 3");
    if (!betti.graded) return fail(0, "ungraded");
    bool mixed = false;
    auto d2 = single_degree(betti, 2, mixed);
    if (!d2) return fail(2, mixed ? "generators of P^2 in several degrees" : "P^2 is empty");
    auto d3 = single_degree(betti, 3, mixed);
    if (!d3) return fail(3, mixed ? "generators of P^3 in several degrees" : "P^3 is empty");
    if (*d2 < 2 || *d3 <= *d2) return fail(3, "degrees of P^2 and P^3 do not give D >= 2, A >= 1");
    return check_all(betti, static_cast<std::size_t>(*d2), static_cast<std::size_t>(*d3 - *d2));
}

}  // namespace qstretch
