#ifndef DSTAR_VERIFY_HPP
#define DSTAR_VERIFY_HPP

#include "dstar/quotient.hpp"
#include "dstar/report.hpp"

namespace dstar {

// The four worked instances, rebuilt from their sources: graph, acting
// group, and seed double-star.
struct ReferenceInstance {
  std::string name;
  GraphAction act;
  Star s;
  Star t;
  // The documented pairing element, when the example names one.
  std::optional<Permutation> stated_z;
};

ReferenceInstance reference_example(int which, int n = 3);  // which in 1..4

// Runs the full pipeline for one example and records every stated claim
// against the computed value. `which` accepts "example-1" .. "example-4"
// or "all".
AnalysisReport verify_paper(const std::string& which);

}  // namespace dstar

#endif
