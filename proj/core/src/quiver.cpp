#include "qstretch/quiver.hpp"

#include <algorithm>
#include <stdexcept>

namespace qstretch {

Quiver::Quiver(std::vector<std::string> vertices, const std::vector<ArrowDecl>& arrows)
    : vertices_(std::move(vertices)) {
    for (VertexId v = 0; v < vertices_.size(); ++v) {
        if (vertices_[v].empty()) throw std::invalid_argument("empty vertex name");
        if (!vertex_index_.emplace(vertices_[v], v).second) {
            throw std::invalid_argument("duplicate vertex '" + vertices_[v] + "'");
        }
    }
    for (const auto& decl : arrows) {
        if (decl.name.empty()) throw std::invalid_argument("empty arrow name");
        auto s = find_vertex(decl.source);
        auto t = find_vertex(decl.target);
        if (!s) throw std::invalid_argument("arrow '" + decl.name + "' starts at undeclared vertex '" + decl.source + "'");
        if (!t) throw std::invalid_argument("arrow '" + decl.name + "' ends at undeclared vertex '" + decl.target + "'");
        if (vertex_index_.contains(decl.name)) {
            throw std::invalid_argument("arrow '" + decl.name + "' shares its name with a vertex");
        }
        if (!arrow_index_.emplace(decl.name, static_cast<ArrowId>(arrows_.size())).second) {
            throw std::invalid_argument("duplicate arrow '" + decl.name + "'");
        }
        arrows_.push_back({decl.name, *s, *t});
    }
}

std::optional<VertexId> Quiver::find_vertex(std::string_view name) const {
    auto it = vertex_index_.find(std::string(name));
    if (it == vertex_index_.end()) return std::nullopt;
    return it->second;
}

std::optional<ArrowId> Quiver::find_arrow(std::string_view name) const {
    auto it = arrow_index_.find(std::string(name));
    if (it == arrow_index_.end()) return std::nullopt;
    return it->second;
}

std::vector<ArrowId> Quiver::arrows_from(VertexId v) const {
    std::vector<ArrowId> out;
    for (ArrowId a = 0; a < arrows_.size(); ++a) {
        if (arrows_[a].source == v) out.push_back(a);
    }
    return out;
}

std::vector<ArrowId> Quiver::arrows_into(VertexId v) const {
    std::vector<ArrowId> out;
    for (ArrowId a = 0; a < arrows_.size(); ++a) {
        if (arrows_[a].target == v) out.push_back(a);
    }
    return out;
}

bool operator==(const Quiver& a, const Quiver& b) {
    if (a.vertices_ != b.vertices_ || a.arrows_.size() != b.arrows_.size()) return false;
    for (std::size_t i = 0; i < a.arrows_.size(); ++i) {
        const auto& x = a.arrows_[i];
        const auto& y = b.arrows_[i];
        if (x.name != y.name || x.source != y.source || x.target != y.target) return false;
    }
    return true;
}

Path Path::trivial(VertexId v) { return Path(v, v, {}); }

Path Path::arrow(const Quiver& q, ArrowId a) {
    const auto& arr = q.arrow(a);
    return Path(arr.source, arr.target, {a});
}

Path Path::from_arrows(const Quiver& q, std::vector<ArrowId> word) {
    if (word.empty()) throw std::invalid_argument("use Path::trivial for the empty word");
    for (std::size_t k = 0; k < word.size(); ++k) {
        if (word[k] >= q.arrow_count()) throw std::invalid_argument("arrow index out of range");
        if (k > 0 && q.arrow(word[k - 1]).target != q.arrow(word[k]).source) {
            throw std::invalid_argument("arrows " + q.arrow(word[k - 1]).name + " and " + q.arrow(word[k]).name +
                                        " do not compose");
        }
    }
    VertexId s = q.arrow(word.front()).source;
    VertexId t = q.arrow(word.back()).target;
    return Path(s, t, std::move(word));
}

Path Path::subpath(const Quiver& q, std::size_t begin, std::size_t end) const {
    if (begin > end || end > word_.size()) throw std::out_of_range("subpath range");
    if (begin == end) {
        if (word_.empty()) return *this;
        VertexId v = begin < word_.size() ? q.arrow(word_[begin]).source : target_;
        return trivial(v);
    }
    return Path(q.arrow(word_[begin]).source, q.arrow(word_[end - 1]).target,
                std::vector<ArrowId>(word_.begin() + static_cast<std::ptrdiff_t>(begin),
                                     word_.begin() + static_cast<std::ptrdiff_t>(end)));
}

std::string Path::to_string(const Quiver& q) const {
    if (word_.empty()) return q.vertex_name(source_);
    std::string out;
    for (std::size_t k = 0; k < word_.size(); ++k) {
        if (k > 0) out += '*';
        out += q.arrow(word_[k]).name;
    }
    return out;
}

std::strong_ordering operator<=>(const Path& a, const Path& b) {
    if (auto c = a.word_.size() <=> b.word_.size(); c != 0) return c;
    if (auto c = a.word_ <=> b.word_; c != 0) return c;
    if (auto c = a.source_ <=> b.source_; c != 0) return c;
    return a.target_ <=> b.target_;
}

std::optional<Path> compose(const Path& p, const Path& q) {
    if (p.target_ != q.source_) return std::nullopt;
    if (p.word_.empty()) return q;
    if (q.word_.empty()) return p;
    std::vector<ArrowId> w;
    w.reserve(p.word_.size() + q.word_.size());
    w.insert(w.end(), p.word_.begin(), p.word_.end());
    w.insert(w.end(), q.word_.begin(), q.word_.end());
    return Path(p.source_, q.target_, std::move(w));
}

std::optional<std::size_t> find_subword(const std::vector<ArrowId>& hay, const std::vector<ArrowId>& needle) {
    if (needle.size() > hay.size()) return std::nullopt;
    auto it = std::search(hay.begin(), hay.end(), needle.begin(), needle.end());
    if (it == hay.end() && !needle.empty()) return std::nullopt;
    return static_cast<std::size_t>(it - hay.begin());
}

std::size_t PathHash::operator()(const Path& p) const noexcept {
    std::size_t h = 1469598103934665603ULL ^ (static_cast<std::size_t>(p.source()) * 1099511628211ULL);
    for (auto a : p.arrows()) h = (h ^ a) * 1099511628211ULL;
    return h;
}

}  // namespace qstretch
