#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace qstretch {

enum class Status { Pass, Fail, UpTo, Skipped };

/// One verified identity: what theory predicts against what was computed.
struct CheckRecord {
    std::string name;
    std::string predicted;
    std::string computed;
    Status status = Status::Pass;
    std::size_t up_to = 0;  // meaningful for Status::UpTo
    std::string detail;

    bool failed() const { return status == Status::Fail; }
    /// "PASS", "FAIL", "UP-TO(n)" or "SKIPPED".
    std::string status_string() const;
};

/// PASS when the two strings agree, FAIL otherwise.
CheckRecord compare(std::string name, const std::string& predicted, const std::string& computed,
                    std::string detail = {});
CheckRecord compare(std::string name, std::size_t predicted, std::size_t computed, std::string detail = {});

bool all_ok(const std::vector<CheckRecord>& records);

}  // namespace qstretch
