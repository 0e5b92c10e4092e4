#include "qstretch/groebner.hpp"

#include <algorithm>
#include <queue>
#include <tuple>

namespace qstretch {

namespace {

using Word = std::vector<ArrowId>;
using TipIndex = std::map<Word, std::size_t>;
using LengthSet = std::set<std::size_t, std::greater<>>;

std::optional<std::pair<std::size_t, std::size_t>> find_in(const TipIndex& index, const LengthSet& lengths,
                                                           const Word& word) {
    for (std::size_t off = 0; off < word.size(); ++off) {
        for (std::size_t len : lengths) {
            if (len == 0 || off + len > word.size()) continue;
            Word sub(word.begin() + static_cast<std::ptrdiff_t>(off),
                     word.begin() + static_cast<std::ptrdiff_t>(off + len));
            auto it = index.find(sub);
            if (it != index.end()) return std::make_pair(it->second, off);
        }
    }
    return std::nullopt;
}

bool suffix_in(const TipIndex& index, const LengthSet& lengths, const Word& word) {
    for (std::size_t len : lengths) {
        if (len == 0 || len > word.size()) continue;
        Word sub(word.end() - static_cast<std::ptrdiff_t>(len), word.end());
        if (index.contains(sub)) return true;
    }
    return false;
}

// Rewrites x until no path in its support contains a tip.
template <class Lookup>
PathElement reduce(const Quiver& q, PathElement work, Lookup&& lookup) {
    PathElement done(work.field());
    while (!work.is_zero()) {
        Path p = work.tip();
        Scalar c = work.tip_coefficient();
        auto hit = lookup(p.arrows());
        if (!hit) {
            done.add_term(p, c);
            work.add_term(p, -c);
            continue;
        }
        const PathElement& g = *hit->first;
        std::size_t off = hit->second;
        std::size_t len = g.tip().length();
        Path u = p.subpath(q, 0, off);
        Path v = p.subpath(q, off + len, p.length());
        work = work - c * sandwich(u, g, v);
    }
    return done;
}

struct LevelScan {
    std::optional<std::size_t> empty_length;
    bool infinite = false;
    std::vector<Path> words;
};

constexpr std::size_t kWordLimit = 2'000'000;

// Breadth-first enumeration of normal words.  Stops at the first empty level,
// or once some level is long enough to force a repeated window of length
// max_tip - 1 (then normal words are unbounded).
LevelScan scan_normal_words(const Quiver& q, const TipIndex& index, const LengthSet& lengths, bool keep) {
    LevelScan out;
    std::size_t window = lengths.empty() ? 0 : (*lengths.begin() == 0 ? 0 : *lengths.begin() - 1);
    std::vector<Path> level;
    for (VertexId v = 0; v < q.vertex_count(); ++v) level.push_back(Path::trivial(v));
    std::size_t window_count = 0;
    std::size_t total = 0;
    for (std::size_t len = 0;; ++len) {
        if (level.empty()) {
            out.empty_length = len;
            return out;
        }
        if (len == window) window_count = level.size();
        if (len > window && len - window + 1 > window_count) {
            out.infinite = true;
            return out;
        }
        total += level.size();
        if (total > kWordLimit) return out;
        if (keep) out.words.insert(out.words.end(), level.begin(), level.end());
        std::vector<Path> next;
        for (const auto& p : level) {
            for (ArrowId a : q.arrows_from(p.target())) {
                Word w = p.arrows();
                w.push_back(a);
                if (suffix_in(index, lengths, w)) continue;
                next.push_back(Path::from_arrows(q, std::move(w)));
            }
        }
        level = std::move(next);
    }
}

void validate(const std::vector<PathElement>& generators, const Field& field) {
    for (std::size_t i = 0; i < generators.size(); ++i) {
        const auto& g = generators[i];
        if (g.field() != field) throw FieldMismatchError("relation " + std::to_string(i) + " is over a different field");
        if (g.is_zero()) continue;
        auto c = classify(g);
        if (!c.uniform) throw NotUniformError(i, "relation " + std::to_string(i) + " is not uniform");
        if (c.min_length < 2) {
            throw NotAdmissibleError(i, "relation " + std::to_string(i) +
                                            " has a component of length below 2 (ideal not admissible)");
        }
    }
}

}  // namespace

GroebnerBasis::GroebnerBasis(Field field, std::vector<PathElement> elements)
    : field_(field), elements_(std::move(elements)) {
    std::sort(elements_.begin(), elements_.end(),
              [](const PathElement& a, const PathElement& b) { return a.tip() < b.tip(); });
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        tip_index_.emplace(elements_[i].tip().arrows(), i);
        tip_lengths_.insert(elements_[i].tip().length());
    }
}

std::optional<std::pair<std::size_t, std::size_t>> GroebnerBasis::find_divisor(const std::vector<ArrowId>& word) const {
    return find_in(tip_index_, tip_lengths_, word);
}

bool GroebnerBasis::has_tip_suffix(const std::vector<ArrowId>& word) const {
    return suffix_in(tip_index_, tip_lengths_, word);
}

bool GroebnerBasis::is_monomial() const {
    return std::all_of(elements_.begin(), elements_.end(), [](const PathElement& g) { return g.size() == 1; });
}

bool GroebnerBasis::is_length_homogeneous() const {
    return std::all_of(elements_.begin(), elements_.end(),
                       [](const PathElement& g) { return classify(g).length_homogeneous; });
}

std::size_t GroebnerBasis::max_tip_length() const { return tip_lengths_.empty() ? 0 : *tip_lengths_.begin(); }

PathElement normal_form(const Quiver& q, const PathElement& x, const GroebnerBasis& basis) {
    if (basis.empty()) return x;
    if (x.field() != basis.field()) throw FieldMismatchError("element and basis over different fields");
    return reduce(q, x, [&](const Word& w) -> std::optional<std::pair<const PathElement*, std::size_t>> {
        auto hit = basis.find_divisor(w);
        if (!hit) return std::nullopt;
        return std::make_pair(&basis.elements()[hit->first], hit->second);
    });
}

std::size_t default_degree_cap(const std::vector<PathElement>& generators) {
    std::size_t longest = 0;
    for (const auto& g : generators) {
        for (const auto& [p, c] : g.terms()) longest = std::max(longest, p.length());
    }
    return 4 * longest;
}

namespace {

class Completion {
public:
    Completion(const Quiver& q, Field field, std::size_t cap) : q_(q), field_(field), cap_(cap) {}

    void add(PathElement h) {
        h = h.monic();
        std::size_t id = all_.size();
        all_.push_back(h);
        alive_.push_back(true);
        std::vector<std::size_t> evicted;
        for (std::size_t k = 0; k < id; ++k) {
            if (!alive_[k]) continue;
            if (find_subword(all_[k].tip().arrows(), h.tip().arrows())) {
                alive_[k] = false;
                index_.erase(all_[k].tip().arrows());
                evicted.push_back(k);
            }
        }
        index_.emplace(h.tip().arrows(), id);
        rebuild_lengths();
        for (std::size_t k = 0; k <= id; ++k) {
            if (!alive_[k]) continue;
            queue_overlaps(k, id);
            if (k != id) queue_overlaps(id, k);
        }
        for (std::size_t k : evicted) {
            PathElement r = normal_form_(all_[k]);
            if (!r.is_zero()) add(std::move(r));
        }
    }

    void run() {
        while (!pending_.empty()) {
            auto [deg, i, j, k] = pending_.top();
            pending_.pop();
            if (!alive_[i] || !alive_[j]) continue;
            if (deg > cap_) {
                skipped_.emplace_back(i, j);
                continue;
            }
            ++processed_;
            const PathElement& gi = all_[i];
            const PathElement& gj = all_[j];
            const Path& ti = gi.tip();
            const Path& tj = gj.tip();
            Path v = tj.subpath(q_, k, tj.length());
            Path u = ti.subpath(q_, 0, ti.length() - k);
            PathElement s = sandwich(Path::trivial(ti.source()), gi, v) - sandwich(u, gj, Path::trivial(tj.target()));
            PathElement r = normal_form_(s);
            if (!r.is_zero()) add(std::move(r));
        }
    }

    std::vector<PathElement> reduced() const {
        std::vector<PathElement> out;
        for (std::size_t k = 0; k < all_.size(); ++k) {
            if (!alive_[k]) continue;
            const PathElement& g = all_[k];
            PathElement head(field_, g.tip(), g.tip_coefficient());
            out.push_back(head + normal_form_(g - head));
        }
        return out;
    }

    std::size_t live_skipped() const {
        return static_cast<std::size_t>(std::count_if(skipped_.begin(), skipped_.end(),
                                                      [&](auto ij) { return alive_[ij.first] && alive_[ij.second]; }));
    }
    std::size_t processed() const { return processed_; }

private:
    using Overlap = std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>;

    void queue_overlaps(std::size_t i, std::size_t j) {
        const Word& a = all_[i].tip().arrows();
        const Word& b = all_[j].tip().arrows();
        std::size_t limit = std::min(a.size(), b.size());
        for (std::size_t k = 1; k < limit; ++k) {
            if (std::equal(a.end() - static_cast<std::ptrdiff_t>(k), a.end(), b.begin())) {
                pending_.emplace(a.size() + b.size() - k, i, j, k);
            }
        }
    }

    void rebuild_lengths() {
        lengths_.clear();
        for (const auto& [w, id] : index_) lengths_.insert(w.size());
    }

    PathElement normal_form_(const PathElement& x) const {
        return reduce(q_, x, [&](const Word& w) -> std::optional<std::pair<const PathElement*, std::size_t>> {
            auto hit = find_in(index_, lengths_, w);
            if (!hit) return std::nullopt;
            return std::make_pair(&all_[hit->first], hit->second);
        });
    }

    const Quiver& q_;
    Field field_;
    std::size_t cap_;
    std::vector<PathElement> all_;
    std::vector<bool> alive_;
    TipIndex index_;
    LengthSet lengths_;
    std::priority_queue<Overlap, std::vector<Overlap>, std::greater<>> pending_;
    std::vector<std::pair<std::size_t, std::size_t>> skipped_;
    std::size_t processed_ = 0;
};

}  // namespace

BuchbergerResult buchberger(const Quiver& q, const std::vector<PathElement>& generators, std::size_t degree_cap,
                            std::optional<Field> field) {
    Field k = field ? *field : (generators.empty() ? Field::rationals() : generators.front().field());
    validate(generators, k);

    BuchbergerResult result;
    result.degree_cap = degree_cap;
    std::size_t live_skipped = 0;

    bool monomial = std::all_of(generators.begin(), generators.end(),
                                [](const PathElement& g) { return g.size() <= 1; });
    std::vector<PathElement> elements;
    if (monomial) {
        result.monomial_fast_path = true;
        std::vector<PathElement> tips;
        for (const auto& g : generators) {
            if (!g.is_zero()) tips.emplace_back(k, g.tip());
        }
        std::sort(tips.begin(), tips.end(), [](const auto& a, const auto& b) { return a.tip() < b.tip(); });
        for (const auto& t : tips) {
            bool divisible = std::any_of(elements.begin(), elements.end(), [&](const PathElement& e) {
                return find_subword(t.tip().arrows(), e.tip().arrows()).has_value();
            });
            if (!divisible) elements.push_back(t);
        }
    } else {
        Completion c(q, k, degree_cap);
        std::vector<PathElement> sorted;
        for (const auto& g : generators) {
            if (!g.is_zero()) sorted.push_back(g);
        }
        std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.tip() < b.tip(); });
        for (auto& g : sorted) {
            PathElement r = g;
            c.add(std::move(r));
        }
        c.run();
        elements = c.reduced();
        live_skipped = c.live_skipped();
        result.overlaps_processed = c.processed();
        result.overlaps_skipped = live_skipped;
    }

    result.basis = GroebnerBasis(k, std::move(elements));

    TipIndex index;
    LengthSet lengths;
    for (std::size_t i = 0; i < result.basis.size(); ++i) {
        index.emplace(result.basis.elements()[i].tip().arrows(), i);
        lengths.insert(result.basis.elements()[i].tip().length());
    }
    LevelScan scan = scan_normal_words(q, index, lengths, false);
    result.certified_length = scan.empty_length;
    result.complete = scan.empty_length.has_value() && live_skipped == 0;
    result.infinite_dimensional = scan.infinite && live_skipped == 0;
    return result;
}

std::vector<Path> enumerate_basis(const Quiver& q, const BuchbergerResult& result) {
    if (result.infinite_dimensional) throw InfiniteDimensionalError("quotient algebra is infinite dimensional");
    if (!result.complete) {
        throw IncompleteBasisError("Groebner basis is INCOMPLETE at degree cap " + std::to_string(result.degree_cap));
    }
    TipIndex index;
    LengthSet lengths;
    for (std::size_t i = 0; i < result.basis.size(); ++i) {
        index.emplace(result.basis.elements()[i].tip().arrows(), i);
        lengths.insert(result.basis.elements()[i].tip().length());
    }
    LevelScan scan = scan_normal_words(q, index, lengths, true);
    std::sort(scan.words.begin(), scan.words.end());
    return scan.words;
}

}  // namespace qstretch
