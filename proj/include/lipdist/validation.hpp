#pragma once

#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lipdist/report.hpp"

namespace lipdist {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string observed;
  std::string expected;
  double seconds = 0.0;
  nlohmann::json details;
};

struct ValidationSummary {
  std::vector<CriterionResult> criteria;
  std::vector<std::string> warnings;
  bool all_passed() const;
};

/// Criterion ids run by default, in order.
std::vector<int> all_criteria();

/// Runs the acceptance suite. Criteria that exercise the corpus use
/// config.jgrid; the distance criteria (7-9) use a depth 16 grid with levels
/// 7..14. `theta`, `wavelet_p`, `seed`, `band`, `eta` and the probe settings
/// come from the configuration. `on_result` is called as each criterion ends.
ValidationSummary run_validation(const RunConfig& config, const std::vector<int>& which = all_criteria(),
                                 const std::function<void(const CriterionResult&)>& on_result = {});

nlohmann::json to_json(const CriterionResult& r);
nlohmann::json to_json(const ValidationSummary& s);

/// "criterion 7: PASS  title (observed ...; expected ...)"
std::string summary_line(const CriterionResult& r);

}  // namespace lipdist
