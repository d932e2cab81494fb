#include "dstar/partition.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace dstar {

Partition Partition::from_blocks(int n, std::vector<std::vector<int>> blocks) {
  Partition p;
  p.block_of_.assign(n, -1);
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end());
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    require(!blocks[i].empty(), Fault::NotInvariant, "empty block");
    for (int v : blocks[i]) {
      require(v >= 0 && v < n, Fault::VertexOutOfRange, "block member out of range");
      require(p.block_of_[v] < 0, Fault::NotInvariant, "blocks overlap");
      p.block_of_[v] = static_cast<int>(i);
    }
  }
  for (int v = 0; v < n; ++v)
    require(p.block_of_[v] >= 0, Fault::NotInvariant,
            "blocks do not cover the vertex set");
  p.blocks_ = std::move(blocks);
  return p;
}

Partition Partition::from_block_of(const std::vector<int>& block_of) {
  std::map<int, std::vector<int>> grouped;
  for (std::size_t v = 0; v < block_of.size(); ++v)
    grouped[block_of[v]].push_back(static_cast<int>(v));
  std::vector<std::vector<int>> blocks;
  for (auto& [id, members] : grouped) blocks.push_back(std::move(members));
  return from_blocks(static_cast<int>(block_of.size()), std::move(blocks));
}

Partition Partition::singletons(int n) {
  std::vector<std::vector<int>> blocks;
  for (int v = 0; v < n; ++v) blocks.push_back({v});
  return from_blocks(n, std::move(blocks));
}

bool Partition::refines(const Partition& coarse) const {
  if (coarse.ground_size() != ground_size()) return false;
  for (const auto& b : blocks_) {
    int target = coarse.block_of(b[0]);
    for (int v : b)
      if (coarse.block_of(v) != target) return false;
  }
  return true;
}

bool is_invariant(const GraphAction& act, const Partition& p) {
  if (p.ground_size() != act.graph().n) return false;
  std::set<std::vector<int>> block_set(p.blocks().begin(), p.blocks().end());
  for (int gi : act.generator_indices()) {
    const Permutation& vp = act.vertex_perm(gi);
    for (const auto& b : p.blocks())
      if (!block_set.count(apply_vertex_set(vp, b))) return false;
  }
  return true;
}

Graph quotient_graph(const Graph& g, const Partition& p) {
  std::set<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges()) {
    int bu = p.block_of(u), bv = p.block_of(v);
    if (bu != bv) edges.emplace(std::min(bu, bv), std::max(bu, bv));
  }
  Graph q = make_graph(static_cast<int>(p.size()),
                       {edges.begin(), edges.end()});
  for (std::size_t i = 0; i < p.size(); ++i)
    q.names[i] = "B" + std::to_string(i);
  return q;
}

GraphAction quotient_action(const GraphAction& act, const Partition& p,
                            const Graph& quotient) {
  require(is_invariant(act, p), Fault::NotInvariant,
          "partition is not invariant under the action");
  std::vector<Permutation> gen_images;
  for (int gi : act.generator_indices()) {
    const Permutation& vp = act.vertex_perm(gi);
    std::vector<int> img(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
      img[i] = p.block_of(vp[p.block(static_cast<int>(i))[0]]);
    gen_images.push_back(Permutation(std::move(img)));
  }
  return GraphAction::from_generator_images(quotient, act.group(), gen_images);
}

Partition quotient_partition(const Partition& coarse, const Partition& fine) {
  require(fine.refines(coarse), Fault::NotInvariant,
          "partitions are not nested");
  std::vector<int> block_of(fine.size());
  for (std::size_t i = 0; i < fine.size(); ++i)
    block_of[i] = coarse.block_of(fine.block(static_cast<int>(i))[0]);
  return Partition::from_block_of(block_of);
}

PermGroup block_kernel(const GraphAction& act, const Partition& p) {
  std::vector<Permutation> fixing;
  const PermGroup& g = act.group();
  for (std::size_t e = 0; e < g.order(); ++e) {
    const Permutation& vp = act.vertex_perm(static_cast<int>(e));
    bool fixes_all = true;
    for (const auto& b : p.blocks()) {
      if (apply_vertex_set(vp, b) != b) {
        fixes_all = false;
        break;
      }
    }
    if (fixes_all) fixing.push_back(g.element(static_cast<int>(e)));
  }
  return PermGroup::from_elements(g.degree(), std::move(fixing));
}

Graph cross_block_graph(const Graph& g, const Partition& p, int bq, int cq) {
  std::vector<int> left, right;
  for (int v : p.block(bq))
    for (int w : g.adj[v])
      if (p.block_of(w) == cq) {
        left.push_back(v);
        break;
      }
  for (int v : p.block(cq))
    for (int w : g.adj[v])
      if (p.block_of(w) == bq) {
        right.push_back(v);
        break;
      }
  std::vector<int> verts = left;
  verts.insert(verts.end(), right.begin(), right.end());
  std::sort(verts.begin(), verts.end());
  // Induced edges are exactly the cross edges: blocks are independent sets
  // whenever the quotient is nonempty.
  return induced_subgraph(g, verts);
}

ParamVector params(const GraphAction& act, const Partition& p) {
  const Graph& g = act.graph();
  require(is_invariant(act, p), Fault::NotInvariant,
          "partition is not invariant under the action");

  Graph q = quotient_graph(g, p);
  require(q.edge_count() > 0, Fault::EmptyQuotient, "quotient has no edges");

  ParamVector out;
  out.v = static_cast<int>(p.block(0).size());
  for (const auto& b : p.blocks())
    require(static_cast<int>(b.size()) == out.v, Fault::NotInvariant,
            "block sizes differ");

  // Blocks of a nonempty quotient must be independent.
  for (const auto& b : p.blocks())
    for (int u : b)
      for (int w : g.adj[u])
        require(p.block_of(w) != p.block_of(u), Fault::NotInvariant,
                "a block contains an edge");

  require(q.is_regular(), Fault::NotInvariant, "quotient is not regular");
  out.b = q.valency();

  out.r = -1;
  for (int v = 0; v < g.n; ++v) {
    std::set<int> nbr_blocks;
    for (int w : g.adj[v]) nbr_blocks.insert(p.block_of(w));
    if (out.r < 0) out.r = static_cast<int>(nbr_blocks.size());
    require(static_cast<int>(nbr_blocks.size()) == out.r, Fault::NotInvariant,
            "r differs across vertices");
  }

  out.k = -1;
  out.d = -1;
  out.c = -1;
  for (const auto& [bq, cq] : q.edges()) {
    for (int flip = 0; flip < 2; ++flip) {
      int from = flip ? cq : bq;
      int to = flip ? bq : cq;
      std::set<int> touched;
      for (int v : p.block(to))
        for (int w : g.adj[v])
          if (p.block_of(w) == from) touched.insert(v);
      // touched = Gamma(B_from) cap C_to
      if (out.k < 0) out.k = static_cast<int>(touched.size());
      require(static_cast<int>(touched.size()) == out.k, Fault::NotInvariant,
              "k differs across quotient arcs");
    }
    Graph cross = cross_block_graph(g, p, bq, cq);
    require(cross.n > 0 && cross.is_regular(), Fault::NotInvariant,
            "cross-block graph is not regular");
    if (out.d < 0) out.d = cross.valency();
    require(cross.valency() == out.d, Fault::NotInvariant,
            "d differs across quotient arcs");
    int comp = static_cast<int>(components(cross).count());
    if (out.c < 0) out.c = comp;
    require(comp == out.c, Fault::NotInvariant,
            "c differs across quotient arcs");
  }
  return out;
}

bool is_reducible(const GraphAction& act, const Partition& p,
                 std::string* reason) {
  auto report = [&](const std::string& why) {
    if (reason) *reason = why;
    return false;
  };
  if (p.is_trivial()) return report("partition is trivial (v = 1)");
  if (p.size() < 2) return report("partition has a single block");
  ParamVector pv;
  try {
    pv = params(act, p);
  } catch (const Error& e) {
    return report(e.what());
  }
  if (pv.multicover()) return report("graph is a multicover of the quotient");
  if (reason) reason->clear();
  return true;
}

Star vertex_quotient_star(const Graph& g, const Partition& p,
                          const Graph& quotient, int sigma) {
  (void)quotient;
  int home = p.block_of(sigma);
  std::set<int> nbr_blocks;
  for (int w : g.adj[sigma]) nbr_blocks.insert(p.block_of(w));
  require(!nbr_blocks.empty(), Fault::EmptyQuotient, "isolated vertex");
  require(!nbr_blocks.count(home), Fault::NotInvariant,
          "vertex has a neighbor inside its own block");
  std::vector<Arc> arcs;
  for (int cq : nbr_blocks) arcs.push_back({home, cq});
  return Star{home, {1, static_cast<int>(arcs.size())}, std::move(arcs)};
}

std::vector<int> center_intersection(const Graph& g, const Partition& p,
                                     const Graph& quotient, const Star& s) {
  require(s.shape.length == 1, Fault::NotAQuotientStar,
          "center intersection expects a 1-star of the quotient");
  require(s.center >= 0 && s.center < static_cast<int>(p.size()),
          Fault::NotAQuotientStar, "star center is not a block");
  require(is_star(quotient, s.center, s.shape, s.arcs),
          Fault::NotAQuotientStar, "not a star of the quotient");

  std::vector<int> result = p.block(s.center);
  for (const auto& a : s.arcs) {
    int cq = a[1];
    std::set<int> gamma_c;
    for (int v : p.block(cq))
      for (int w : g.adj[v]) gamma_c.insert(w);
    std::vector<int> keep;
    for (int v : result)
      if (gamma_c.count(v)) keep.push_back(v);
    result = std::move(keep);
  }
  return result;
}

}  // namespace dstar
