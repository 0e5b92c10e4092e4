#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "qstretch/scalar.hpp"

namespace qstretch {

using VertexId = std::uint32_t;
using ArrowId = std::uint32_t;

struct Arrow {
    std::string name;
    VertexId source = 0;
    VertexId target = 0;
};

/// Arrow declaration by vertex names, as read from an algebra file.
struct ArrowDecl {
    std::string name;
    std::string source;
    std::string target;
};

/// A finite quiver.  Vertex and arrow names are opaque strings at the
/// boundary and dense indices internally; declaration order is kept because
/// it seeds the monomial order.
class Quiver {
public:
    Quiver() = default;
    /// Throws std::invalid_argument on duplicate names or dangling endpoints.
    Quiver(std::vector<std::string> vertices, const std::vector<ArrowDecl>& arrows);

    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t arrow_count() const { return arrows_.size(); }
    const std::string& vertex_name(VertexId v) const { return vertices_.at(v); }
    const Arrow& arrow(ArrowId a) const { return arrows_.at(a); }
    const std::vector<std::string>& vertex_names() const { return vertices_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }

    std::optional<VertexId> find_vertex(std::string_view name) const;
    std::optional<ArrowId> find_arrow(std::string_view name) const;

    std::vector<ArrowId> arrows_from(VertexId v) const;
    std::vector<ArrowId> arrows_into(VertexId v) const;

    friend bool operator==(const Quiver& a, const Quiver& b);

private:
    std::vector<std::string> vertices_;
    std::vector<Arrow> arrows_;
    std::unordered_map<std::string, VertexId> vertex_index_;
    std::unordered_map<std::string, ArrowId> arrow_index_;
};

/// A path in a quiver: a composable word of arrows read left to right.
/// The trivial path at v has no arrows and source = target = v.
class Path {
public:
    Path() = default;
    static Path trivial(VertexId v);
    static Path arrow(const Quiver& q, ArrowId a);
    /// Throws std::invalid_argument if the word is empty or not composable.
    static Path from_arrows(const Quiver& q, std::vector<ArrowId> word);

    VertexId source() const { return source_; }
    VertexId target() const { return target_; }
    std::size_t length() const { return word_.size(); }
    bool is_trivial() const { return word_.empty(); }
    const std::vector<ArrowId>& arrows() const { return word_; }

    /// Subpath word[begin, end); empty ranges give the trivial path at the
    /// vertex sitting at that position.
    Path subpath(const Quiver& q, std::size_t begin, std::size_t end) const;

    /// "x*y", or the vertex name for trivial paths.
    std::string to_string(const Quiver& q) const;

    /// Length-lexicographic order with ties broken by arrow declaration
    /// order, comparing words left to right; trivial paths are minimal.
    friend std::strong_ordering operator<=>(const Path& a, const Path& b);
    friend bool operator==(const Path& a, const Path& b) = default;

private:
    Path(VertexId s, VertexId t, std::vector<ArrowId> w) : source_(s), target_(t), word_(std::move(w)) {}
    friend std::optional<Path> compose(const Path& p, const Path& q);

    VertexId source_ = 0;
    VertexId target_ = 0;
    std::vector<ArrowId> word_;
};

/// pq when t(p) = o(q), std::nullopt (the zero path) otherwise.
std::optional<Path> compose(const Path& p, const Path& q);

/// Position of the first occurrence of `needle` as a contiguous subword of `hay`.
std::optional<std::size_t> find_subword(const std::vector<ArrowId>& hay, const std::vector<ArrowId>& needle);

struct PathHash {
    std::size_t operator()(const Path& p) const noexcept;
};

}  // namespace qstretch
