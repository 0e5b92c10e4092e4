#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qstretch/path_element.hpp"
#include "qstretch/quiver.hpp"
#include "qstretch/scalar.hpp"

namespace qstretch::cli {

/// A quiver with relations over a field, in declaration order.
struct Presentation {
    Field field;
    Quiver quiver;
    std::vector<PathElement> relations;

    friend bool operator==(const Presentation&, const Presentation&) = default;
};

/// Syntax and semantic errors.  Locations are 1-based; relation is 0-based.
class ParseError : public Error {
public:
    ParseError(std::string message, std::size_t line, std::size_t column,
               std::optional<std::size_t> relation = std::nullopt);

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }
    std::optional<std::size_t> relation() const { return relation_; }

private:
    std::size_t line_;
    std::size_t column_;
    std::optional<std::size_t> relation_;
};

/// Line-oriented format:
///
///     # comment
///     field Q                 (or: field F 7)
///     vertices v w
///     arrow x : v -> w
///     relation x*y - 2/3*z*y
///
/// Coefficients are integers or a/b; over F_p they are reduced mod p.
Presentation parse_algebra_file(std::string_view text);
Presentation read_algebra_file(const std::string& path);

/// Inverse of parse_algebra_file up to formatting.
std::string emit_algebra_file(const Presentation& p);
std::string format_element(const PathElement& x, const Quiver& q);

}  // namespace qstretch::cli
