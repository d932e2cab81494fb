#ifndef DSTAR_REPORT_HPP
#define DSTAR_REPORT_HPP

#include <string>
#include <vector>

#include "json.hpp"

namespace dstar {

using ordered_json = nlohmann::ordered_json;

// One verdict row: PASS/FAIL for invariants the source proves, WARN for
// stated quantities that differ from what the computation finds.
struct Check {
  std::string name;
  std::string status;  // "PASS", "WARN", "FAIL"
  ordered_json expected;
  ordered_json computed;
  std::string evidence;
};

struct AnalysisReport {
  std::string task;
  ordered_json inputs = ordered_json::object();
  ordered_json details = ordered_json::object();
  std::vector<Check> checks;
  bool cap_hit = false;
  long long timing_ms = 0;

  void pass(const std::string& name, ordered_json computed,
            const std::string& evidence = "");
  void fail(const std::string& name, ordered_json expected,
            ordered_json computed, const std::string& evidence = "");
  void warn(const std::string& name, ordered_json expected,
            ordered_json computed, const std::string& evidence = "");
  // PASS iff ok; expected/computed recorded either way.
  void claim(const std::string& name, bool ok, ordered_json expected,
             ordered_json computed, const std::string& evidence = "");

  bool any_failure() const;
  // 0 clean, 2 failed checks, 3 cap hit.
  int exit_code() const;

  // Timing is excluded by default so that identical runs serialize
  // byte-identically.
  ordered_json to_json(bool with_timing = false) const;
  void merge(const AnalysisReport& other, const std::string& prefix);
};

}  // namespace dstar

#endif
