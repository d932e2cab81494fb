#include "dstar/construct.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace dstar {

DoubleStarGraph double_star_graph(const ThetaOrbit& theta) {
  require(theta.self_paired(), Fault::NotSelfPaired,
          "double-star graph needs a self-paired orbit");
  require(theta.transitivity_level() >= 1, Fault::NotArcTransitiveOrbit,
          "double-star graph needs an (X,1)-arc-transitive orbit");

  const std::vector<Star>& stars = theta.stars();
  std::map<Star, int> index;
  for (std::size_t i = 0; i < stars.size(); ++i)
    index.emplace(stars[i], static_cast<int>(i));

  std::set<std::pair<int, int>> edges;
  for (const auto& m : theta.members()) {
    int u = index.at(m.left), v = index.at(m.right);
    edges.emplace(std::min(u, v), std::max(u, v));
  }
  Graph pi = make_graph(static_cast<int>(stars.size()),
                        {edges.begin(), edges.end()});
  const Graph& base = theta.graph();
  for (std::size_t i = 0; i < stars.size(); ++i) {
    // Name a star vertex by its sorted arc list over base vertex names.
    std::string name = base.names[stars[i].center] + ":";
    for (const auto& a : stars[i].arcs) {
      for (std::size_t j = 1; j < a.size(); ++j)
        name += (j > 1 ? "-" : "") + base.names[a[j]];
      name += ";";
    }
    pi.names[i] = name;
  }

  const GraphAction& act = theta.action();
  std::vector<Permutation> gen_images;
  for (int gi : act.generator_indices()) {
    const Permutation& vp = act.vertex_perm(gi);
    std::vector<int> img(stars.size());
    for (std::size_t i = 0; i < stars.size(); ++i)
      img[i] = index.at(apply_star(vp, stars[i]));
    gen_images.push_back(Permutation(std::move(img)));
  }
  GraphAction pi_act =
      GraphAction::from_generator_images(pi, act.group(), gen_images);

  std::vector<int> block_of(stars.size());
  for (std::size_t i = 0; i < stars.size(); ++i)
    block_of[i] = stars[i].center;
  Partition centers = Partition::from_block_of(block_of);

  return DoubleStarGraph{std::move(pi_act), stars, std::move(centers)};
}

ThetaOrbit truncate(const ThetaOrbit& theta, int i) {
  require(i >= 1 && i <= theta.shape().length, Fault::IndexOutOfRange,
          "truncation level outside [1, l]");
  if (i == theta.shape().length) return theta;
  std::set<DoubleStar> cut;
  for (const auto& m : theta.members())
    cut.insert(DoubleStar{project(m.left, i), project(m.right, i)});
  return ThetaOrbit::from_members(theta.action(),
                                  {cut.begin(), cut.end()});
}

namespace {

// Theta*[S]: arcs of S extended one step through the partner stars.
std::vector<Arc> extension_arcs(const Graph& g, const Star& s,
                                const std::vector<Star>& partners) {
  std::set<Arc> out;
  for (const Star& t : partners) {
    int tau = t.center;
    for (const auto& a : s.arcs) {
      if (a[1] != tau) continue;
      // a = (sigma0, tau, tau1, ..., tau_{l-1}); extensions come from the
      // members of t carrying the shifted body.
      Arc body(a.begin() + 1, a.end());
      for (const auto& ta : t.arcs) {
        if (!std::equal(body.begin(), body.end(), ta.begin())) continue;
        Arc ext = a;
        ext.push_back(ta.back());
        if (is_l_arc(g, ext)) out.insert(std::move(ext));
      }
    }
  }
  return {out.begin(), out.end()};
}

}  // namespace

GrowthResult grow(const ThetaOrbit& theta, const Star& s) {
  require(theta.shape().branches >= 2, Fault::RTooSmall,
          "growing needs r >= 2");
  const Graph& g = theta.graph();
  const GraphAction& act = theta.action();

  GrowthResult out;
  out.star = s;
  out.successors = theta.successors(s);
  out.predecessors = theta.predecessors(s);
  require(!out.successors.empty() || !out.predecessors.empty(),
          Fault::NotADoubleStar, "star does not occur in the orbit");
  out.extended_plus = extension_arcs(g, s, out.successors);
  out.extended_minus = extension_arcs(g, s, out.predecessors);

  StarShape up{s.shape.length + 1, s.shape.branches};
  out.plus_is_star =
      !out.extended_plus.empty() && is_star(g, s.center, up, out.extended_plus);
  out.minus_is_star = !out.extended_minus.empty() &&
                      is_star(g, s.center, up, out.extended_minus);

  // Growth criterion: some partner T with X_S cap X_tau = X_T cap X_sigma.
  PermGroup stab_s = arc_set_stabilizer(act, s.arcs);
  auto check = [&](const std::vector<Star>& partners) {
    for (const Star& t : partners) {
      PermGroup stab_t = arc_set_stabilizer(act, t.arcs);
      PermGroup left = PermGroup::intersection(
          stab_s, vertex_stabilizer(act, t.center));
      PermGroup right = PermGroup::intersection(
          stab_t, vertex_stabilizer(act, s.center));
      if (left.same_elements_as(right)) return true;
    }
    return false;
  };
  out.criterion = check(out.successors) || check(out.predecessors);
  return out;
}

ThetaOrbit grow_orbit(const ThetaOrbit& theta) {
  require(theta.self_paired(), Fault::NotSelfPaired,
          "orbit growth needs a self-paired orbit");
  const DoubleStar& rep = theta.representative();
  GrowthResult left = grow(theta, rep.left);
  GrowthResult right = grow(theta, rep.right);
  require(left.plus_is_star && right.minus_is_star, Fault::HypothesisViolated,
          "growth criterion fails; extended sets are not stars");
  Star new_left = make_star(theta.graph(),
                            {theta.shape().length + 1, theta.shape().branches},
                            left.extended_plus);
  Star new_right = make_star(
      theta.graph(), {theta.shape().length + 1, theta.shape().branches},
      right.extended_minus);
  return ThetaOrbit::from_pair(theta.action(), new_left, new_right);
}

StabilizerChain stabilizer_chain(const ThetaOrbit& theta) {
  require(theta.graph().valency() >= 3 && theta.shape().branches >= 2,
          Fault::HypothesisViolated,
          "stabilizer chain needs valency >= 3 and r >= 2");
  const GraphAction& act = theta.action();
  const Star& s = theta.representative().left;
  int l = s.shape.length;

  StabilizerChain chain;
  std::vector<PermGroup> stabs;
  for (int i = 0; i <= l; ++i) {
    stabs.push_back(arc_set_stabilizer(act, project(s, i).arcs));
    chain.orders.push_back(stabs.back().order());
  }
  chain.h = l;
  while (chain.h >= 1 && chain.orders[chain.h - 1] == chain.orders[l])
    --chain.h;
  if (chain.h == 0) chain.h = 1;  // the chain settles no earlier than 1

  // Strictly decreasing before h, constant after.
  for (int i = 1; i < chain.h; ++i)
    require(chain.orders[i] < chain.orders[i - 1], Fault::HypothesisViolated,
            "stabilizer chain not strictly decreasing before h");
  for (int i = chain.h; i < l; ++i)
    require(chain.orders[i] == chain.orders[i + 1], Fault::HypothesisViolated,
            "stabilizer chain not constant after h");
  for (int i = 1; i <= l; ++i)
    require(stabs[i].is_subgroup_of(stabs[i - 1]), Fault::HypothesisViolated,
            "stabilizer chain is not nested");
  return chain;
}

CosetGraph coset_graph(const PermGroup& x, const PermGroup& g,
                       const Permutation& z) {
  require(g.is_subgroup_of(x), Fault::NotSubgroup,
          "G must be a subgroup of X");
  require(g.order() < x.order(), Fault::NotSubgroup,
          "G must be proper (single coset otherwise)");
  require(x.contains(z), Fault::NotSubgroup, "z must lie in X");
  require(!g.contains(z), Fault::AsymmetricDoubleCoset,
          "z inside G gives loops");

  // Double coset GzG, and the symmetry requirement GzG = Gz^{-1}G.
  std::set<Permutation> gzg;
  for (const auto& a : g.elements())
    for (const auto& b : g.elements()) gzg.insert(a * z * b);
  require(gzg.count(z.inverse()), Fault::AsymmetricDoubleCoset,
          "GzG is not symmetric");

  // Right cosets Gx, represented by their least member.
  std::vector<int> coset_of(x.order(), -1);
  std::vector<Permutation> reps;
  for (std::size_t e = 0; e < x.order(); ++e) {
    if (coset_of[e] >= 0) continue;
    Permutation least = x.element(static_cast<int>(e));
    std::vector<Permutation> members;
    for (const auto& a : g.elements()) {
      Permutation m = a * x.element(static_cast<int>(e));
      if (m < least) least = m;
      members.push_back(std::move(m));
    }
    int id = static_cast<int>(reps.size());
    reps.push_back(least);
    for (const auto& m : members) coset_of[x.index_of(m)] = id;
  }

  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = i + 1; j < reps.size(); ++j)
      if (gzg.count(reps[i] * reps[j].inverse()))
        edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
  Graph graph = make_graph(static_cast<int>(reps.size()), edges);
  for (std::size_t i = 0; i < reps.size(); ++i)
    graph.names[i] = "G" + reps[i].cycles();

  // X acts by right multiplication: (Gw)^y = G(wy).
  std::vector<Permutation> gen_images;
  for (const auto& gen : x.generators()) {
    std::vector<int> img(reps.size());
    for (std::size_t i = 0; i < reps.size(); ++i)
      img[i] = coset_of[x.index_of(reps[i] * gen)];
    gen_images.push_back(Permutation(std::move(img)));
  }
  GraphAction act = GraphAction::from_generator_images(graph, x, gen_images);
  return CosetGraph{std::move(act), std::move(reps)};
}

}  // namespace dstar
