#pragma once

#include <string>
#include <string_view>

#include "qstretch/cli/algebra_file.hpp"
#include "qstretch/quotient_algebra.hpp"

namespace testing {

using qstretch::cli::Presentation;

inline Presentation fixture(const std::string& name) {
    return qstretch::cli::read_algebra_file(std::string(QSTRETCH_FIXTURE_DIR) + "/" + name + ".alg");
}

inline qstretch::QuotientAlgebra build(const Presentation& p) {
    return qstretch::QuotientAlgebra::build(p.quiver, p.relations, p.field);
}

/// Parses one relation over the quiver and field of `p`.
inline qstretch::PathElement element(const Presentation& p, std::string_view text) {
    Presentation bare{p.field, p.quiver, {}};
    auto parsed = qstretch::cli::parse_algebra_file(qstretch::cli::emit_algebra_file(bare) + "relation " +
                                                    std::string(text) + "\n");
    return parsed.relations.front();
}

inline qstretch::Path path(const qstretch::Quiver& q, std::initializer_list<std::string_view> arrows) {
    std::vector<qstretch::ArrowId> w;
    for (auto a : arrows) w.push_back(*q.find_arrow(a));
    return qstretch::Path::from_arrows(q, w);
}

}  // namespace testing
