#ifndef DSTAR_QUOTIENT_HPP
#define DSTAR_QUOTIENT_HPP

#include <optional>
#include <string>
#include <vector>

#include "dstar/construct.hpp"
#include "dstar/partition.hpp"

namespace dstar {

// One refinement step B -> B1 = pulled-back centers of the quotient-star
// family S_(0,1).
struct RefineStep {
  Partition b1;
  ThetaOrbit theta01;       // the 1-star pair orbit over the quotient
  ParamVector before;      // p(Gamma, X, B)
  ParamVector after;       // p(Gamma, X, B1)
  char outcome = 'c';      // 'a': B1 trivial, 'b': multicover, 'c': still reducible
};

// Requires a reducible triple (nontrivial invariant partition, nonempty
// quotient, not a multicover); throws NotReducible otherwise.
// Divisibility laws v1 | (v,k), r | (r1,b1), d1 | d, v1 r1 = b1 k1 and
// r1 d1 = r d = val(Gamma) are asserted.
RefineStep refine_once(const GraphAction& act, const Partition& b);

struct SeriesLevel {
  Partition partition;
  ParamVector pv;
  // Orbit feeding the step B_i -> B_{i+1}; absent at the terminal level.
  std::optional<ThetaOrbit> theta;
};

// The full series B = B_0 > B_1 > ... > B_m.
struct RefinementSeries {
  std::vector<SeriesLevel> levels;
  char terminal = 't';  // 't': B_m trivial, 'm': multicover
  int m = 0;
  int h = 1;            // maximal h <= m with d = d_{h-1}
  int factor_bound = 0; // sum of prime multiplicities of (v,k), plus one

  const Partition& partition_at(int level) const;  // clamps past m
  const ParamVector& params_at(int level) const;
};

RefinementSeries refinement_series(const GraphAction& act, const Partition& b);

// Arc_i(Gamma_B, sigma): block projections of the i-arcs of Gamma at sigma
// that remain arcs of the quotient.
std::vector<Arc> block_arcs(const Graph& g, const Partition& b,
                            const Graph& quotient, int sigma, int i);

// Reconstruction along the series: Theta built from the level-l block-arc
// stars on Arc(Gamma), its double-star graph, and the comparison against
// Gamma_{B_m}. Requires r >= 2, d = 1, and for s >= 2 that Gamma is
// (X,s)-arc-transitive.
struct Reconstruction {
  ThetaOrbit theta;
  DoubleStarGraph pi;
  bool stabilizer_equality = false;  // X_{Arc_l(sigma)} cap X_{B(tau)} = ...
  std::optional<std::vector<int>> iso_to_quotient_m;
};

Reconstruction reconstruct(const GraphAction& act, const Partition& b, int s);

}  // namespace dstar

#endif
