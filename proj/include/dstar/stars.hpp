#ifndef DSTAR_STARS_HPP
#define DSTAR_STARS_HPP

#include <optional>
#include <utility>
#include <vector>

#include "dstar/action.hpp"

namespace dstar {

// Shape of an (l,r)-star: arcs of length l, branching r with
// 1 <= r <= valency.
struct StarShape {
  int length = 1;     // l >= 0
  int branches = 1;   // r >= 1
  bool operator==(const StarShape&) const = default;
};

// A set of l-arcs out of one center vertex obeying the recursive star law:
// the 1-layer has r arcs and every longer prefix extends in exactly r-1
// ways. Arcs are kept lexicographically sorted, so equal stars compare
// equal structurally.
struct Star {
  int center = 0;
  StarShape shape;
  std::vector<Arc> arcs;

  bool operator==(const Star& o) const {
    return center == o.center && shape == o.shape && arcs == o.arcs;
  }
  bool operator<(const Star& o) const { return arcs < o.arcs; }
};

struct StarHash {
  std::size_t operator()(const Star& s) const;
};

// Star law check for a candidate arc set.
bool is_star(const Graph& g, int center, StarShape shape,
             const std::vector<Arc>& arcs);

// Canonicalizes and validates; throws NotAStar when the law fails.
Star make_star(const Graph& g, StarShape shape, std::vector<Arc> arcs);

// S(i): every arc truncated to its first i steps.
Star project(const Star& s, int i);

// S_alpha: the arcs of s extending the prefix alpha (throws NotAPrefix).
std::vector<Arc> residual(const Star& s, const Arc& alpha);

// S_tau for (center,tau) in S(1): forward continuations through tau plus
// the reflections back through the center; for l = 1 this is {(tau)}.
// The result is the branch star's arc set, rooted at tau.
std::vector<Arc> branch(const Graph& g, const Star& s, int tau);

Star apply_star(const Permutation& vertex_perm, const Star& s);

// Ordered pair of interlocking stars at adjacent centers:
// S_tau = T(l-1) and T_sigma = S(l-1).
struct DoubleStar {
  Star left;
  Star right;
  bool operator==(const DoubleStar&) const = default;
  bool operator<(const DoubleStar& o) const {
    return std::pair(left.arcs, right.arcs) < std::pair(o.left.arcs, o.right.arcs);
  }
};

bool is_double_star(const Graph& g, const Star& s, const Star& t);

// An X-orbit of double-stars, with its self-pairedness and arc-transitivity
// level evaluated. Members are stored sorted; the representative is the
// least member.
class ThetaOrbit {
 public:
  // Orbit of the given pair (throws NotADoubleStar when the pair fails the
  // interlock conditions).
  static ThetaOrbit from_pair(const GraphAction& act, const Star& s,
                              const Star& t);
  // Wraps an externally assembled member list; verifies it is the full
  // orbit of its least member and that every member is a double-star.
  static ThetaOrbit from_members(const GraphAction& act,
                                 std::vector<DoubleStar> members);

  const GraphAction& action() const { return act_; }
  const Graph& graph() const { return act_.graph(); }
  StarShape shape() const { return shape_; }
  const std::vector<DoubleStar>& members() const { return members_; }
  const DoubleStar& representative() const { return members_.front(); }

  bool contains(const Star& s, const Star& t) const;
  // Theta(S) partners: right components paired with s / left components
  // paired with s.
  std::vector<Star> successors(const Star& s) const;
  std::vector<Star> predecessors(const Star& s) const;

  // St(Theta): all stars occurring in members, sorted, deduplicated.
  const std::vector<Star>& stars() const { return stars_; }

  bool self_paired() const { return self_paired_; }
  // Largest s <= l with every member star (X_star, s)-arc-transitive; 0 if
  // none.
  int transitivity_level() const { return level_; }
  // Self-paired and (X,1)-arc-transitive.
  bool x_symmetric() const { return self_paired_ && level_ >= 1; }
  // First group element (in element order) reversing the representative;
  // empty unless self-paired.
  const std::optional<Permutation>& pairing_witness() const { return witness_; }

  // Flag: r equals the valency (the multicover regime r = b).
  bool full_branching() const;

 private:
  ThetaOrbit(GraphAction act, std::vector<DoubleStar> members);
  void analyze();

  GraphAction act_;
  StarShape shape_;
  std::vector<DoubleStar> members_;
  std::vector<Star> stars_;
  bool self_paired_ = false;
  int level_ = 0;
  std::optional<Permutation> witness_;
};

struct EnumerationCaps {
  std::size_t max_stars_per_vertex = 100000;
  std::size_t max_orbits = 1000;
};

// All X-orbits of (l,r)-double-stars of an arc-transitive graph, one
// ThetaOrbit per orbit, deterministically ordered by least member.
std::vector<ThetaOrbit> enumerate_double_star_orbits(
    const GraphAction& act, StarShape shape, const EnumerationCaps& caps = {});

// All (l,r)-stars centered at one vertex (helper; also capped).
std::vector<Star> stars_at(const Graph& g, StarShape shape, int center,
                           std::size_t cap = 100000);

// Star literals looked up by vertex name, e.g. {{"123","456","127"},...}.
Star star_from_names(const Graph& g,
                     const std::vector<std::vector<std::string>>& arcs);

}  // namespace dstar

#endif
