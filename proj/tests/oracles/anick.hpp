#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "qstretch/quiver.hpp"

namespace oracle {

using Word = std::vector<qstretch::ArrowId>;

/// (target vertex, length) of one chain: the summand it indexes and its degree.
using ChainKey = std::pair<qstretch::VertexId, std::size_t>;

/// Overlap chains of a monomial algebra, built directly from the relation
/// words.  chains[n] is the sorted multiset of (target, length) data; the
/// projective P^n of a minimal resolution of the top has one summand per chain.
inline std::vector<std::vector<ChainKey>> anick_chains(const qstretch::Quiver& q, const std::vector<Word>& relations,
                                                       std::size_t n_max) {
    auto occurs_ending_at = [&](const Word& w, std::size_t end, std::size_t lo) {
        // a relation occupying [start, end) of w with start >= lo
        for (const auto& r : relations) {
            if (r.size() > end || end - r.size() < lo) continue;
            if (std::equal(r.begin(), r.end(), w.begin() + static_cast<std::ptrdiff_t>(end - r.size()))) return true;
        }
        return false;
    };
    std::size_t max_rel = 0;
    for (const auto& r : relations) max_rel = std::max(max_rel, r.size());

    // A chain is its full word together with the length of its last piece.
    struct Chain {
        Word word;
        std::size_t tail;
        qstretch::VertexId target;
    };
    std::vector<std::vector<ChainKey>> out;
    std::vector<Chain> current;
    std::vector<ChainKey> level;
    for (qstretch::VertexId v = 0; v < q.vertex_count(); ++v) level.push_back({v, 0});
    std::sort(level.begin(), level.end());
    out.push_back(level);
    if (n_max == 0) return out;
    level.clear();
    for (qstretch::ArrowId a = 0; a < q.arrow_count(); ++a) {
        current.push_back({{a}, 1, q.arrow(a).target});
        level.push_back({q.arrow(a).target, 1});
    }
    if (level.empty()) return out;
    std::sort(level.begin(), level.end());
    out.push_back(level);

    for (std::size_t n = 2; n <= n_max; ++n) {
        std::vector<Chain> next;
        for (const auto& c : current) {
            // extend the last piece s by a word t, one arrow at a time
            Word s(c.word.end() - static_cast<std::ptrdiff_t>(c.tail), c.word.end());
            std::vector<Word> frontier{s};
            while (!frontier.empty()) {
                std::vector<Word> grown;
                for (const auto& w : frontier) {
                    qstretch::VertexId end = w.empty() ? c.target : q.arrow(w.back()).target;
                    for (qstretch::ArrowId a : q.arrows_from(end)) {
                        Word x = w;
                        x.push_back(a);
                        if (x.size() > s.size() + max_rel) continue;
                        bool blocked = false;
                        for (std::size_t e = s.size() + 1; e < x.size() && !blocked; ++e) {
                            blocked = occurs_ending_at(x, e, 0);
                        }
                        if (blocked) continue;
                        // the closing relation must start inside s
                        bool closes = false;
                        for (const auto& r : relations) {
                            if (r.size() > x.size()) continue;
                            std::size_t start = x.size() - r.size();
                            if (start >= s.size()) continue;
                            if (std::equal(r.begin(), r.end(), x.begin() + static_cast<std::ptrdiff_t>(start))) {
                                closes = true;
                            }
                        }
                        if (closes) {
                            Word full = c.word;
                            full.insert(full.end(), x.begin() + static_cast<std::ptrdiff_t>(s.size()), x.end());
                            next.push_back({full, x.size() - s.size(), q.arrow(x.back()).target});
                        } else if (!occurs_ending_at(x, x.size(), 0)) {
                            grown.push_back(std::move(x));
                        }
                    }
                }
                frontier = std::move(grown);
            }
        }
        if (next.empty()) break;
        level.clear();
        for (const auto& c : next) level.push_back({c.target, c.word.size()});
        std::sort(level.begin(), level.end());
        out.push_back(level);
        current = std::move(next);
    }
    return out;
}

}  // namespace oracle
