#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "qstretch/linalg.hpp"
#include "qstretch/path_element.hpp"

namespace oracle {

/// dim KQ/I for length-homogeneous relations, degree by degree: I_l is spanned
/// by the products p·r·q of length l, and the count stops at the first l with
/// I_l = KQ_l.  Returns nothing if that does not happen by `max_length`.
inline std::optional<std::size_t> graded_dimension(const qstretch::Quiver& q,
                                                   const std::vector<qstretch::PathElement>& relations,
                                                   const qstretch::Field& field, std::size_t max_length) {
    using qstretch::Path;
    std::vector<std::vector<Path>> paths(1);
    for (qstretch::VertexId v = 0; v < q.vertex_count(); ++v) paths[0].push_back(Path::trivial(v));
    std::size_t total = q.vertex_count();
    for (std::size_t l = 1; l <= max_length; ++l) {
        std::vector<Path> layer;
        for (const auto& p : paths[l - 1]) {
            for (qstretch::ArrowId a : q.arrows_from(p.target())) {
                auto w = p.arrows();
                w.push_back(a);
                layer.push_back(Path::from_arrows(q, w));
            }
        }
        paths.push_back(layer);
        if (layer.empty()) return total;
        std::map<Path, std::uint32_t> index;
        for (std::uint32_t i = 0; i < layer.size(); ++i) index[layer[i]] = i;
        qstretch::Echelon span(field, layer.size());
        for (const auto& r : relations) {
            std::size_t d = r.tip().length();
            if (d > l) continue;
            for (std::size_t i = 0; i + d <= l; ++i) {
                for (const auto& left : paths[i]) {
                    for (const auto& right : paths[l - d - i]) {
                        auto x = qstretch::sandwich(left, r, right);
                        std::vector<std::pair<std::uint32_t, qstretch::Scalar>> v;
                        for (const auto& [p, c] : x.terms()) v.emplace_back(index.at(p), c);
                        auto sv = qstretch::canonicalize(std::move(v));
                        if (!sv.empty()) span.insert(sv);
                    }
                }
            }
        }
        std::size_t quotient = layer.size() - span.rank();
        if (quotient == 0) return total;
        total += quotient;
    }
    return std::nullopt;
}

}  // namespace oracle
