#include "dstar/quotient.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace dstar {

namespace {

int gcd_int(int a, int b) { return std::gcd(a, b); }

// Number of prime factors with multiplicity.
int omega(int n) {
  int count = 0;
  for (int p = 2; p * p <= n; ++p)
    while (n % p == 0) {
      n /= p;
      ++count;
    }
  if (n > 1) ++count;
  return count;
}

}  // namespace

RefineStep refine_once(const GraphAction& act, const Partition& b) {
  std::string reason;
  require(is_reducible(act, b, &reason), Fault::NotReducible, reason);
  const Graph& g = act.graph();

  ParamVector before = params(act, b);
  Graph q = quotient_graph(g, b);
  GraphAction q_act = quotient_action(act, b, q);

  // S_(0,1) and Theta_(0,1) from the arcs of Gamma.
  std::vector<Star> vertex_star(g.n);
  for (int v = 0; v < g.n; ++v)
    vertex_star[v] = vertex_quotient_star(g, b, q, v);
  std::set<DoubleStar> pairs;
  for (const auto& a : g.arcs())
    pairs.insert(DoubleStar{vertex_star[a[0]], vertex_star[a[1]]});
  ThetaOrbit theta01 =
      ThetaOrbit::from_members(q_act, {pairs.begin(), pairs.end()});

  // B1: the pulled-back centers.
  std::set<std::vector<int>> blocks;
  for (int v = 0; v < g.n; ++v)
    blocks.insert(center_intersection(g, b, q, vertex_star[v]));
  Partition b1 =
      Partition::from_blocks(g.n, {blocks.begin(), blocks.end()});

  require(b1.refines(b) && b1.size() > b.size(), Fault::NotReducible,
          "refinement did not strictly descend");

  ParamVector after;
  if (b1.is_trivial()) {
    // p(Gamma, X, 1): the quotient is Gamma itself.
    after.v = 1;
    after.k = 1;
    after.r = g.valency();
    after.b = g.valency();
    after.d = 1;
    after.c = 1;
  } else {
    after = params(act, b1);
  }

  // Divisibility laws; exact integers.
  int val = g.valency();
  require(gcd_int(before.v, before.k) % after.v == 0, Fault::NotInvariant,
          "v1 does not divide (v,k)");
  require(gcd_int(after.r, after.b) % before.r == 0, Fault::NotInvariant,
          "r does not divide (r1,b1)");
  require(before.d % after.d == 0, Fault::NotInvariant,
          "d1 does not divide d");
  require(after.v * after.r == after.b * after.k, Fault::NotInvariant,
          "v1 r1 != b1 k1");
  require(after.r * after.d == val && before.r * before.d == val,
          Fault::NotInvariant, "r d != val(Gamma)");

  RefineStep step{std::move(b1), std::move(theta01), before, after, 'c'};
  if (step.after.v == 1)
    step.outcome = 'a';
  else if (step.after.multicover())
    step.outcome = 'b';
  return step;
}

const Partition& RefinementSeries::partition_at(int level) const {
  require(level >= 0, Fault::LevelNotComputed, "negative level");
  if (level >= static_cast<int>(levels.size()))
    return levels.back().partition;  // the series stabilizes past m
  return levels[level].partition;
}

const ParamVector& RefinementSeries::params_at(int level) const {
  require(level >= 0 && level < static_cast<int>(levels.size()),
          Fault::LevelNotComputed, "level outside the computed series");
  return levels[level].pv;
}

RefinementSeries refinement_series(const GraphAction& act,
                                   const Partition& b) {
  RefinementSeries series;
  Partition current = b;
  while (true) {
    RefineStep step = refine_once(act, current);
    series.levels.push_back(SeriesLevel{current, step.before, step.theta01});
    if (step.outcome != 'c') {
      series.levels.push_back(
          SeriesLevel{step.b1, step.after, std::nullopt});
      series.terminal = step.outcome == 'a' ? 't' : 'm';
      break;
    }
    current = step.b1;
  }
  series.m = static_cast<int>(series.levels.size()) - 1;

  // Strict descent and the factor-chain bound.
  for (int i = 0; i + 1 <= series.m; ++i) {
    require(series.levels[i + 1].partition.refines(series.levels[i].partition),
            Fault::NotInvariant, "series is not nested");
    require(series.levels[i + 1].pv.v < series.levels[i].pv.v,
            Fault::NotInvariant, "series block sizes do not descend");
  }
  series.factor_bound =
      omega(gcd_int(series.levels[0].pv.v, series.levels[0].pv.k)) + 1;
  require(series.m <= series.factor_bound, Fault::NotInvariant,
          "series length exceeds the factor-chain bound");

  series.h = 1;
  for (int level = 1; level <= series.m; ++level)
    if (series.levels[level - 1].pv.d == series.levels[0].pv.d)
      series.h = level;
  return series;
}

std::vector<Arc> block_arcs(const Graph& g, const Partition& b,
                            const Graph& quotient, int sigma, int i) {
  require(sigma >= 0 && sigma < g.n, Fault::VertexOutOfRange,
          "vertex out of range");
  std::set<Arc> out;
  for (const Arc& a : l_arcs_from(g, i, sigma)) {
    Arc projected(a.size());
    for (std::size_t p = 0; p < a.size(); ++p)
      projected[p] = b.block_of(a[p]);
    if (is_l_arc(quotient, projected)) out.insert(std::move(projected));
  }
  if (i == 0) out.insert({b.block_of(sigma)});
  return {out.begin(), out.end()};
}

Reconstruction reconstruct(const GraphAction& act, const Partition& b,
                           int s) {
  const Graph& g = act.graph();
  RefinementSeries series = refinement_series(act, b);
  ParamVector pv = series.levels[0].pv;
  require(pv.r >= 2, Fault::HypothesisViolated, "reconstruction needs r >= 2");
  require(pv.d == 1, Fault::HypothesisViolated, "reconstruction needs d = 1");
  require(s >= 1, Fault::HypothesisViolated, "level must be positive");
  if (s >= 2)
    require(is_s_arc_transitive(act, s), Fault::HypothesisViolated,
            "graph is not (X,s)-arc-transitive");

  int l = std::max(s, series.m);
  Graph q = quotient_graph(g, b);
  GraphAction q_act = quotient_action(act, b, q);

  std::vector<Star> level_star(g.n);
  for (int v = 0; v < g.n; ++v) {
    std::vector<Arc> arcs = block_arcs(g, b, q, v, l);
    int r = pv.r;
    level_star[v] = make_star(q, {l, r}, std::move(arcs));
  }
  std::set<DoubleStar> pairs;
  for (const auto& a : g.arcs())
    pairs.insert(DoubleStar{level_star[a[0]], level_star[a[1]]});
  ThetaOrbit theta =
      ThetaOrbit::from_members(q_act, {pairs.begin(), pairs.end()});

  // Stabilizer interlock of the level-l stars across a representative arc.
  const Arc probe = g.arcs().front();
  PermGroup left = PermGroup::intersection(
      arc_set_stabilizer(q_act, level_star[probe[0]].arcs),
      set_stabilizer(act, b.block(b.block_of(probe[1]))));
  PermGroup right = PermGroup::intersection(
      arc_set_stabilizer(q_act, level_star[probe[1]].arcs),
      set_stabilizer(act, b.block(b.block_of(probe[0]))));
  bool stab_eq = left.same_elements_as(right);

  DoubleStarGraph pi = double_star_graph(theta);

  Graph target;
  if (series.terminal == 't') {
    target = g;  // B_m trivial: the quotient at level m is Gamma itself
  } else {
    target = quotient_graph(g, series.partition_at(series.m));
  }
  auto witness = isomorphism(pi.pi.graph(), target);

  return Reconstruction{std::move(theta), std::move(pi), stab_eq,
                        std::move(witness)};
}

}  // namespace dstar
