#ifndef DSTAR_INSTANCE_HPP
#define DSTAR_INSTANCE_HPP

#include <map>
#include <optional>
#include <string>

#include "dstar/report.hpp"
#include "dstar/verify.hpp"

namespace dstar {

struct Caps {
  std::size_t group = PermGroup::kDefaultClosureCap;
  std::size_t stars = 100000;
  std::size_t orbits = 1000;
  int iso = 256;
};

// A parsed instance file: graph + group (+ optional seeds, partition,
// shape) and the task to run. See docs/instance-schema.md for the JSON
// layout.
struct InstanceSpec {
  std::string task;   // analyze | construct | decompose | search | verify-paper
  std::string which = "all";  // verify-paper target
  std::optional<GraphAction> action;
  std::optional<Star> seed_s, seed_t;
  std::optional<Partition> partition;
  std::optional<StarShape> shape;
  Caps caps;
  ordered_json echo;  // the raw spec, echoed into reports

  static InstanceSpec parse(const std::string& json_text);
};

struct RunResult {
  AnalysisReport report;
  // Artifacts keyed by filename stem ("pi", "quotient", ...).
  std::map<std::string, Graph> graphs;
};

RunResult run_instance(const InstanceSpec& spec);

}  // namespace dstar

#endif
