#ifndef DSTAR_ACTION_HPP
#define DSTAR_ACTION_HPP

#include <functional>
#include <memory>
#include <unordered_set>
#include <vector>

#include "dstar/graph.hpp"
#include "dstar/perm.hpp"

namespace dstar {

// A graph together with a group acting on its vertices, materialized as one
// vertex permutation per group element. Copies share the underlying data.
class GraphAction {
 public:
  GraphAction() = default;

  // Group permutes graph vertices directly (labels are singletons).
  static GraphAction on_points(Graph graph, PermGroup group);
  // Group permutes the points inside each vertex label; a vertex moves to
  // the vertex carrying the image label. Fails (ActionKindMismatch) if the
  // label family is not closed under the group.
  static GraphAction on_labels(Graph graph, PermGroup group);
  // Action given by explicit images of the group's generators; extended to
  // all elements along the closure derivations.
  static GraphAction from_generator_images(Graph graph, PermGroup group,
                                           const std::vector<Permutation>& gen_images);

  const Graph& graph() const { return *graph_; }
  const PermGroup& group() const { return *group_; }
  std::shared_ptr<const Graph> graph_ptr() const { return graph_; }
  std::shared_ptr<const PermGroup> group_ptr() const { return group_; }

  int apply(int element_index, int v) const {
    return (*vertex_perms_)[element_index][v];
  }
  int apply(const Permutation& x, int v) const;
  const Permutation& vertex_perm(int element_index) const {
    return (*vertex_perms_)[element_index];
  }
  const Permutation& vertex_perm(const Permutation& x) const;

  // Indices of the group's generators within the element list.
  const std::vector<int>& generator_indices() const { return gen_indices_; }

  // Elements acting trivially on the vertex set.
  PermGroup kernel() const;
  bool is_faithful() const { return kernel().order() == 1; }

 private:
  static GraphAction build(Graph graph, PermGroup group,
                           std::vector<Permutation> gen_images);

  std::shared_ptr<const Graph> graph_;
  std::shared_ptr<const PermGroup> group_;
  std::shared_ptr<const std::vector<Permutation>> vertex_perms_;
  std::vector<int> gen_indices_;
};

// --- canonical object images under one vertex permutation ----------------

inline Arc apply_arc(const Permutation& vp, const Arc& a) {
  Arc out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = vp[a[i]];
  return out;
}

// Sorted vertex set.
std::vector<int> apply_vertex_set(const Permutation& vp,
                                  const std::vector<int>& set);
// Set of arcs, kept lexicographically sorted.
std::vector<Arc> apply_arc_set(const Permutation& vp,
                               const std::vector<Arc>& arcs);

// --- generic orbit machinery ----------------------------------------------
//
// T must be hashable/equality-comparable and kept canonical by step().
// step(element_index, obj) applies one group element.

template <typename T, typename Hash, typename Step>
std::vector<T> orbit_of(const GraphAction& act, const T& seed, Step step) {
  std::vector<T> frontier = {seed};
  std::unordered_set<T, Hash> seen = {seed};
  std::vector<T> all = {seed};
  while (!frontier.empty()) {
    std::vector<T> next;
    for (const T& obj : frontier) {
      for (int gi : act.generator_indices()) {
        T img = step(gi, obj);
        if (seen.insert(img).second) {
          next.push_back(img);
          all.push_back(std::move(img));
        }
      }
    }
    frontier = std::move(next);
  }
  return all;
}

// Orbit by applying every group element (the filtering route; used to
// cross-check the BFS and to act with stabilizer subgroups that have no
// generator derivations).
template <typename T, typename Hash, typename Step>
std::vector<T> orbit_by_elements(std::size_t group_order, const T& seed,
                                 Step step) {
  std::unordered_set<T, Hash> seen;
  std::vector<T> all;
  for (std::size_t e = 0; e < group_order; ++e) {
    T img = step(static_cast<int>(e), seed);
    if (seen.insert(img).second) all.push_back(std::move(img));
  }
  return all;
}

// Stabilizer by filtering the full element list.
template <typename T, typename Step>
PermGroup stabilizer_of(const GraphAction& act, const T& obj, Step step) {
  std::vector<Permutation> fixing;
  const PermGroup& g = act.group();
  for (std::size_t e = 0; e < g.order(); ++e)
    if (step(static_cast<int>(e), obj) == obj)
      fixing.push_back(g.element(e));
  return PermGroup::from_elements(g.degree(), std::move(fixing));
}

// --- concrete helpers for the object kinds the calculus uses --------------

std::vector<int> vertex_orbit(const GraphAction& act, int v);
std::vector<Arc> arc_orbit(const GraphAction& act, const Arc& seed);

PermGroup vertex_stabilizer(const GraphAction& act, int v);
PermGroup set_stabilizer(const GraphAction& act, const std::vector<int>& set);
PermGroup arc_set_stabilizer(const GraphAction& act,
                             const std::vector<Arc>& arcs);

// True when the objects form a single orbit under the (sub)group acting
// through `act` (subgroup elements are looked up in act's parent group).
bool transitive_on_vertices(const GraphAction& act, const PermGroup& sub,
                            const std::vector<int>& verts);
bool transitive_on_arcs(const GraphAction& act, const PermGroup& sub,
                        const std::vector<Arc>& arcs);

// X-symmetry (= arc-transitivity) of the acted graph.
bool is_arc_transitive(const GraphAction& act);
// Transitivity on Arc_s; vacuously false when there are no s-arcs.
bool is_s_arc_transitive(const GraphAction& act, int s);
// Arc-regular: transitive on arcs with |X| = |Arc|.
bool is_arc_regular(const GraphAction& act);

}  // namespace dstar

#endif
