#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "qstretch/check.hpp"
#include "qstretch/cli/algebra_file.hpp"
#include "qstretch/structured_algebra.hpp"

namespace qstretch::cli {

inline constexpr const char* kToolVersion = "0.1.0";

struct Options {
    /// stretch, basis, dims, resolve, check d-koszul, check stacked, verify stratifying,
    /// verify transport, verify bimodule, verify idim, report
    std::string command;
    std::size_t A = 1;
    std::size_t n_max = 6;
    std::optional<std::size_t> d;
    std::string module = "simple";
    std::optional<std::string> emit;
    std::optional<std::size_t> degree_cap;
    std::size_t budget = kDefaultEnvelopeBudget;
    bool all = false;
};

struct Report {
    nlohmann::ordered_json json;
    std::vector<CheckRecord> records;
    /// 0 when no record failed, 1 otherwise.
    int exit_code = 0;

    /// The first failing record, if any.
    const CheckRecord* first_failure() const;
    std::string to_json(bool indent = true) const;
    std::string to_table() const;
};

/// 64-bit FNV-1a of the input, as 16 hex digits.
std::string fnv1a_digest(std::string_view text);

/// Runs one command on the algebra file contents `text`.  Throws ParseError
/// for malformed input and qstretch::Error for algebras the engine rejects.
Report run(const Options& options, std::string_view text);

}  // namespace qstretch::cli
