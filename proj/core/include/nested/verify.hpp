#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "nested/classify.hpp"

namespace nested {

enum class Verdict { Pass, Fail, NotApplicable };

std::string_view to_string(Verdict v) noexcept;

struct CheckResult {
  std::string id;
  Verdict verdict = Verdict::NotApplicable;
  /// Witness for a failure, or the unmet hypothesis for not-applicable.
  std::string detail;
};

struct CheckInfo {
  std::string id;
  std::string summary;
};

/// Every registered check, sorted by id.
const std::vector<CheckInfo>& theorem_checks();

/// Runs the selected checks (all when `ids` is empty) and returns results
/// sorted by id. Unknown ids throw InputError.
std::vector<CheckResult> run_theorem_suite(GroupAnalysis& a, const std::vector<std::string>& ids = {});

/// Counts of groups of one order by nilpotency class (>= 2).
struct Table1Counts {
  std::size_t order = 0;
  std::size_t groups = 0;
  std::map<unsigned, std::size_t> all, nested, nested_by_degrees, nested_gvz;

  void add(const ClassificationReport& r);
  /// Classes present in `all`, ascending.
  std::vector<unsigned> classes() const;
};

/// Aligned text rendering: one row per statistic, one column per class.
std::string render_table1(const Table1Counts& t);

}  // namespace nested
