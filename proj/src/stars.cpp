#include "dstar/stars.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace dstar {

std::size_t StarHash::operator()(const Star& s) const {
  std::size_t h = 0x9e3779b97f4a7c15ull;
  for (const auto& a : s.arcs) {
    for (int v : a) h = h * 0x100000001b3ull ^ static_cast<std::size_t>(v);
    h = h * 0x100000001b3ull ^ 0x2d;
  }
  return h;
}

bool is_star(const Graph& g, int center, StarShape shape,
             const std::vector<Arc>& arcs) {
  const int l = shape.length;
  const int r = shape.branches;
  if (l < 0 || r < 1) return false;
  for (const auto& a : arcs) {
    if (static_cast<int>(a.size()) != l + 1) return false;
    if (a[0] != center) return false;
    if (!is_l_arc(g, a)) return false;
  }
  std::set<Arc> unique(arcs.begin(), arcs.end());
  if (unique.size() != arcs.size()) return false;

  if (l == 0) return arcs.size() == 1;
  if (l == 1) return static_cast<int>(arcs.size()) == r;

  // Case (3): the (l-1)-projection is an (l-1,r)-star and every projection
  // member extends in exactly r-1 ways.
  std::map<Arc, int> extension_count;
  for (const auto& a : arcs) {
    Arc prefix(a.begin(), a.end() - 1);
    ++extension_count[prefix];
  }
  std::vector<Arc> prefixes;
  for (const auto& [prefix, count] : extension_count) {
    if (count != r - 1) return false;
    prefixes.push_back(prefix);
  }
  return is_star(g, center, {l - 1, r}, prefixes);
}

Star make_star(const Graph& g, StarShape shape, std::vector<Arc> arcs) {
  require(!arcs.empty(), Fault::NotAStar, "empty arc set");
  std::sort(arcs.begin(), arcs.end());
  int center = arcs[0][0];
  require(is_star(g, center, shape, arcs), Fault::NotAStar,
          "arc set violates the (l,r)-star law");
  return Star{center, shape, std::move(arcs)};
}

Star project(const Star& s, int i) {
  require(i >= 0 && i <= s.shape.length, Fault::IndexOutOfRange,
          "projection index outside [0, l]");
  std::set<Arc> prefixes;
  for (const auto& a : s.arcs) prefixes.insert(Arc(a.begin(), a.begin() + i + 1));
  Star out;
  out.center = s.center;
  out.shape = {i, s.shape.branches};
  out.arcs.assign(prefixes.begin(), prefixes.end());
  return out;
}

std::vector<Arc> residual(const Star& s, const Arc& alpha) {
  require(!alpha.empty() && static_cast<int>(alpha.size()) <= s.shape.length + 1,
          Fault::NotAPrefix, "prefix length outside the star");
  std::vector<Arc> out;
  for (const auto& a : s.arcs)
    if (std::equal(alpha.begin(), alpha.end(), a.begin())) out.push_back(a);
  require(!out.empty(), Fault::NotAPrefix,
          "arc is not a prefix of any member of the star");
  return out;
}

std::vector<Arc> branch(const Graph& g, const Star& s, int tau) {
  const int l = s.shape.length;
  require(l >= 1, Fault::NotANeighborInStar, "branch needs l >= 1");
  bool touches = false;
  for (const auto& a : s.arcs)
    if (a[1] == tau) touches = true;
  require(touches, Fault::NotANeighborInStar,
          "(center, tau) is not in S(1)");

  if (l == 1) return {{tau}};

  std::set<Arc> out;
  // Forward continuations of arcs passing through tau.
  for (const auto& a : s.arcs)
    if (a[1] == tau) out.insert(Arc(a.begin() + 1, a.end()));
  // Reflections back through the center over S(l-2).
  for (const auto& a : s.arcs) {
    Arc reflected;
    reflected.push_back(tau);
    reflected.insert(reflected.end(), a.begin(), a.begin() + l - 1);
    if (is_l_arc(g, reflected)) out.insert(std::move(reflected));
  }
  return {out.begin(), out.end()};
}

Star apply_star(const Permutation& vertex_perm, const Star& s) {
  Star out;
  out.center = vertex_perm[s.center];
  out.shape = s.shape;
  out.arcs = apply_arc_set(vertex_perm, s.arcs);
  return out;
}

bool is_double_star(const Graph& g, const Star& s, const Star& t) {
  if (s.shape.length < 1 || !(s.shape == t.shape)) return false;
  int sigma = s.center, tau = t.center;
  if (sigma == tau || !g.has_edge(sigma, tau)) return false;
  if (!is_star(g, sigma, s.shape, s.arcs)) return false;
  if (!is_star(g, tau, t.shape, t.arcs)) return false;

  auto in_level1 = [](const Star& star, int other) {
    for (const auto& a : star.arcs)
      if (a[1] == other) return true;
    return false;
  };
  if (!in_level1(s, tau) || !in_level1(t, sigma)) return false;

  int l = s.shape.length;
  if (branch(g, s, tau) != project(t, l - 1).arcs) return false;
  if (branch(g, t, sigma) != project(s, l - 1).arcs) return false;
  return true;
}

namespace {

struct PairHash {
  std::size_t operator()(const std::pair<Star, Star>& p) const {
    StarHash h;
    return h(p.first) * 0x9e3779b97f4a7c15ull ^ h(p.second);
  }
};

std::vector<DoubleStar> pair_orbit(const GraphAction& act, const Star& s,
                                   const Star& t) {
  using P = std::pair<Star, Star>;
  auto orbit = orbit_of<P, PairHash>(
      act, P{s, t}, [&](int e, const P& p) {
        const Permutation& vp = act.vertex_perm(e);
        return P{apply_star(vp, p.first), apply_star(vp, p.second)};
      });
  std::vector<DoubleStar> members;
  members.reserve(orbit.size());
  for (auto& [l, r] : orbit) members.push_back({std::move(l), std::move(r)});
  std::sort(members.begin(), members.end());
  return members;
}

}  // namespace

ThetaOrbit::ThetaOrbit(GraphAction act, std::vector<DoubleStar> members)
    : act_(std::move(act)), members_(std::move(members)) {
  shape_ = members_.front().left.shape;
  analyze();
}

ThetaOrbit ThetaOrbit::from_pair(const GraphAction& act, const Star& s,
                                 const Star& t) {
  require(is_double_star(act.graph(), s, t), Fault::NotADoubleStar,
          "(S,T) is not a double-star");
  return ThetaOrbit(act, pair_orbit(act, s, t));
}

ThetaOrbit ThetaOrbit::from_members(const GraphAction& act,
                                    std::vector<DoubleStar> members) {
  require(!members.empty(), Fault::NotADoubleStar, "empty member list");
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  for (const auto& m : members)
    require(is_double_star(act.graph(), m.left, m.right),
            Fault::NotADoubleStar, "member is not a double-star");
  auto orbit = pair_orbit(act, members.front().left, members.front().right);
  require(orbit == members, Fault::NotArcTransitiveOrbit,
          "member list is not a single orbit");
  return ThetaOrbit(act, std::move(members));
}

void ThetaOrbit::analyze() {
  // St(Theta).
  std::set<Star> stars;
  for (const auto& m : members_) {
    stars.insert(m.left);
    stars.insert(m.right);
  }
  stars_.assign(stars.begin(), stars.end());

  // Self-pairedness is an orbit-level property; one member's reversal
  // decides it (verified for all members in tests).
  self_paired_ = contains(representative().right, representative().left);

  if (self_paired_) {
    const Star& s = representative().left;
    const Star& t = representative().right;
    for (std::size_t e = 0; e < act_.group().order(); ++e) {
      const Permutation& vp = act_.vertex_perm(static_cast<int>(e));
      if (apply_star(vp, s) == t && apply_star(vp, t) == s) {
        witness_ = act_.group().element(static_cast<int>(e));
        break;
      }
    }
  }

  // Transitivity level, evaluated on both representative components (every
  // other member star is conjugate to one of them).
  level_ = 0;
  auto level_of = [&](const Star& star) {
    PermGroup stab = arc_set_stabilizer(act_, star.arcs);
    int level = 0;
    for (int s = 1; s <= shape_.length; ++s) {
      if (transitive_on_arcs(act_, stab, project(star, s).arcs))
        level = s;
      else
        break;
    }
    return level;
  };
  level_ = std::min(level_of(representative().left),
                    level_of(representative().right));
}

bool ThetaOrbit::contains(const Star& s, const Star& t) const {
  DoubleStar probe{s, t};
  return std::binary_search(members_.begin(), members_.end(), probe,
                            [](const DoubleStar& a, const DoubleStar& b) {
                              return a < b;
                            });
}

std::vector<Star> ThetaOrbit::successors(const Star& s) const {
  std::vector<Star> out;
  for (const auto& m : members_)
    if (m.left == s) out.push_back(m.right);
  return out;
}

std::vector<Star> ThetaOrbit::predecessors(const Star& s) const {
  std::vector<Star> out;
  for (const auto& m : members_)
    if (m.right == s) out.push_back(m.left);
  return out;
}

bool ThetaOrbit::full_branching() const {
  return shape_.branches == act_.graph().valency();
}

namespace {

// All k-subsets of pool, in lexicographic index order.
std::vector<std::vector<int>> k_subsets(const std::vector<int>& pool, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> idx(static_cast<std::size_t>(k));
  auto rec = [&](auto&& self, int start, int depth) -> void {
    if (depth == k) {
      std::vector<int> chosen;
      for (int p : idx) chosen.push_back(pool[p]);
      out.push_back(std::move(chosen));
      return;
    }
    for (int p = start; p < static_cast<int>(pool.size()); ++p) {
      idx[depth] = p;
      self(self, p + 1, depth + 1);
    }
  };
  rec(rec, 0, 0);
  return out;
}

// Extends every full-length arc of base by all (r-1)-subsets of its
// continuations; emits each resulting (i+1, r)-star.
void extend_star(const Graph& g, const Star& base, std::size_t cap,
                 std::vector<Star>& out) {
  int r = base.shape.branches;
  std::vector<std::vector<std::vector<Arc>>> choices_per_arc;
  for (const auto& a : base.arcs) {
    std::vector<int> exts;
    for (int w : g.adj[a.back()])
      if (a.size() < 2 || w != a[a.size() - 2]) exts.push_back(w);
    if (static_cast<int>(exts.size()) < r - 1) return;
    std::vector<std::vector<Arc>> packs;
    for (const auto& chosen : k_subsets(exts, r - 1)) {
      std::vector<Arc> pack;
      for (int w : chosen) {
        Arc ext = a;
        ext.push_back(w);
        pack.push_back(std::move(ext));
      }
      packs.push_back(std::move(pack));
    }
    choices_per_arc.push_back(std::move(packs));
  }

  // Cartesian product across arcs.
  std::vector<std::size_t> pick(choices_per_arc.size(), 0);
  while (true) {
    std::vector<Arc> arcs;
    for (std::size_t i = 0; i < choices_per_arc.size(); ++i)
      for (const auto& a : choices_per_arc[i][pick[i]]) arcs.push_back(a);
    std::sort(arcs.begin(), arcs.end());
    out.push_back(Star{base.center, {base.shape.length + 1, r}, std::move(arcs)});
    require(out.size() <= cap, Fault::CapExceeded,
            "star enumeration cap exceeded");

    std::size_t i = 0;
    while (i < pick.size() && ++pick[i] == choices_per_arc[i].size()) {
      pick[i] = 0;
      ++i;
    }
    if (i == pick.size()) break;
  }
}

}  // namespace

std::vector<Star> stars_at(const Graph& g, StarShape shape, int center,
                           std::size_t cap) {
  require(center >= 0 && center < g.n, Fault::VertexOutOfRange,
          "star center out of range");
  const int l = shape.length, r = shape.branches;
  require(l >= 0 && r >= 1, Fault::IndexOutOfRange, "bad star shape");
  if (l == 0) return {Star{center, shape, {{center}}}};
  if (l >= 2 && r == 1) return {};  // residual law forces r >= 2 past l = 1

  // 1-stars: r-subsets of the arcs at the center.
  std::vector<Star> level = {};
  {
    const auto& nbrs = g.adj[center];
    if (static_cast<int>(nbrs.size()) < r) return {};
    std::vector<int> idx(static_cast<std::size_t>(r));
    auto rec = [&](auto&& self, int start, int depth) -> void {
      if (depth == r) {
        std::vector<Arc> arcs;
        for (int k = 0; k < r; ++k) arcs.push_back({center, nbrs[idx[k]]});
        level.push_back(Star{center, {1, r}, std::move(arcs)});
        require(level.size() <= cap, Fault::CapExceeded,
                "star enumeration cap exceeded");
        return;
      }
      for (int p = start; p < static_cast<int>(nbrs.size()); ++p) {
        idx[depth] = p;
        self(self, p + 1, depth + 1);
      }
    };
    rec(rec, 0, 0);
  }

  for (int step = 1; step < l; ++step) {
    std::vector<Star> next;
    for (const auto& s : level) extend_star(g, s, cap, next);
    level = std::move(next);
  }
  std::sort(level.begin(), level.end());
  return level;
}

std::vector<ThetaOrbit> enumerate_double_star_orbits(
    const GraphAction& act, StarShape shape, const EnumerationCaps& caps) {
  const Graph& g = act.graph();
  require(is_arc_transitive(act), Fault::NotArcTransitive,
          "graph is not X-symmetric under the given action");
  require(shape.length >= 1, Fault::IndexOutOfRange,
          "double-stars need l >= 1");
  require(shape.branches >= 1 && shape.branches <= g.valency(),
          Fault::IndexOutOfRange, "branching outside [1, valency]");

  const int base = 0;  // vertex-transitivity lets one base vertex cover all
  std::vector<Star> left_stars =
      stars_at(g, shape, base, caps.max_stars_per_vertex);

  std::set<DoubleStar> seen;
  std::vector<ThetaOrbit> orbits;
  for (const Star& s : left_stars) {
    std::set<int> taus;
    for (const auto& a : s.arcs) taus.insert(a[1]);
    for (int tau : taus) {
      std::vector<Star> candidates;
      if (shape.length == 1) {
        for (const Star& t : stars_at(g, shape, tau, caps.max_stars_per_vertex)) {
          bool has_back = false;
          for (const auto& a : t.arcs)
            if (a[1] == base) has_back = true;
          if (has_back) candidates.push_back(t);
        }
      } else {
        Star stem = make_star(g, {shape.length - 1, shape.branches},
                              branch(g, s, tau));
        std::vector<Star> grown;
        extend_star(g, stem, caps.max_stars_per_vertex, grown);
        candidates = std::move(grown);
      }
      for (const Star& t : candidates) {
        if (!is_double_star(g, s, t)) continue;
        if (seen.count(DoubleStar{s, t})) continue;
        ThetaOrbit orbit = ThetaOrbit::from_pair(act, s, t);
        for (const auto& m : orbit.members()) seen.insert(m);
        orbits.push_back(std::move(orbit));
        require(orbits.size() <= caps.max_orbits, Fault::CapExceeded,
                "orbit enumeration cap exceeded");
      }
    }
  }
  std::sort(orbits.begin(), orbits.end(),
            [](const ThetaOrbit& a, const ThetaOrbit& b) {
              return a.representative() < b.representative();
            });
  return orbits;
}

Star star_from_names(const Graph& g,
                     const std::vector<std::vector<std::string>>& arcs) {
  std::map<std::string, int> by_name;
  for (int v = 0; v < g.n; ++v) by_name[g.names[v]] = v;
  std::vector<Arc> resolved;
  for (const auto& named : arcs) {
    Arc a;
    for (const auto& name : named) {
      auto it = by_name.find(name);
      require(it != by_name.end(), Fault::ParseError,
              "unknown vertex name '" + name + "'");
      a.push_back(it->second);
    }
    resolved.push_back(std::move(a));
  }
  require(!resolved.empty(), Fault::NotAStar, "empty star literal");
  int l = static_cast<int>(resolved[0].size()) - 1;
  std::set<Arc> level1;
  for (const auto& a : resolved) {
    require(static_cast<int>(a.size()) == l + 1, Fault::NotAStar,
            "ragged arc lengths in star literal");
    if (l >= 1) level1.insert({a[0], a[1]});
  }
  int r = l >= 1 ? static_cast<int>(level1.size()) : 1;
  return make_star(g, {l, r}, std::move(resolved));
}

}  // namespace dstar
