#include "qstretch/check.hpp"

#include <algorithm>

namespace qstretch {

std::string CheckRecord::status_string() const {
    switch (status) {
        case Status::Pass:
            return "PASS";
        case Status::Fail:
            return "FAIL";
        case Status::UpTo:
            return "UP-TO(" + std::to_string(up_to) + ")";
        case Status::Skipped:
            return "SKIPPED";
    }
    return "FAIL";
}

CheckRecord compare(std::string name, const std::string& predicted, const std::string& computed, std::string detail) {
    CheckRecord r;
    r.name = std::move(name);
    r.predicted = predicted;
    r.computed = computed;
    r.status = predicted == computed ? Status::Pass : Status::Fail;
    r.detail = std::move(detail);
    return r;
}

CheckRecord compare(std::string name, std::size_t predicted, std::size_t computed, std::string detail) {
    return compare(std::move(name), std::to_string(predicted), std::to_string(computed), std::move(detail));
}

bool all_ok(const std::vector<CheckRecord>& records) {
    return std::none_of(records.begin(), records.end(), [](const CheckRecord& r) { return r.failed(); });
}

}  // namespace qstretch
