#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "nested/classify.hpp"
#include "nested/verify.hpp"

namespace nested::cli {

using Json = nlohmann::ordered_json;

struct Timings {
  std::int64_t load_us = 0;
  std::int64_t analysis_us = 0;
};

/// Fixed key order; integers, booleans, strings and lists only.
Json report_json(const ClassificationReport& r, const GroupTable& g,
                 const std::optional<Timings>& t = std::nullopt);
std::string report_text(const ClassificationReport& r, const GroupTable& g,
                        const std::optional<Timings>& t = std::nullopt);

Json checks_json(const std::string& label, const std::vector<CheckResult>& results);
std::string checks_text(const std::string& label, const std::vector<CheckResult>& results);

Json table1_json(const Table1Counts& t);

}  // namespace nested::cli
