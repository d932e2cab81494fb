#include "dstar/action.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace dstar {

GraphAction GraphAction::build(Graph graph, PermGroup group,
                               std::vector<Permutation> gen_images) {
  require(group.has_derivations(), Fault::ActionKindMismatch,
          "actions must be built from a closure-generated group");
  GraphAction act;
  act.gen_indices_.reserve(group.generators().size());
  for (const auto& g : group.generators())
    act.gen_indices_.push_back(group.index_of(g));

  auto perms = std::make_shared<std::vector<Permutation>>();
  perms->reserve(group.order());
  perms->push_back(Permutation::identity(graph.n));
  const auto& deriv = group.derivations();
  for (std::size_t e = 1; e < group.order(); ++e) {
    auto [parent, gi] = deriv[e];
    perms->push_back((*perms)[parent] * gen_images[gi]);
  }
  act.graph_ = std::make_shared<const Graph>(std::move(graph));
  act.group_ = std::make_shared<const PermGroup>(std::move(group));
  act.vertex_perms_ = std::move(perms);
  return act;
}

GraphAction GraphAction::on_points(Graph graph, PermGroup group) {
  require(group.degree() == graph.n, Fault::ActionKindMismatch,
          "point action needs group degree == vertex count");
  std::vector<Permutation> gen_images = group.generators();
  return build(std::move(graph), std::move(group), std::move(gen_images));
}

GraphAction GraphAction::on_labels(Graph graph, PermGroup group) {
  std::map<std::vector<int>, int> by_label;
  for (int v = 0; v < graph.n; ++v) {
    require(by_label.emplace(graph.labels[v], v).second,
            Fault::ActionKindMismatch, "duplicate vertex labels");
    for (int p : graph.labels[v])
      require(p >= 0 && p < group.degree(), Fault::ActionKindMismatch,
              "vertex label uses a point outside the group's domain");
  }
  std::vector<Permutation> gen_images;
  for (const auto& g : group.generators()) {
    std::vector<int> img(graph.n);
    for (int v = 0; v < graph.n; ++v) {
      std::vector<int> moved;
      moved.reserve(graph.labels[v].size());
      for (int p : graph.labels[v]) moved.push_back(g[p]);
      std::sort(moved.begin(), moved.end());
      auto it = by_label.find(moved);
      require(it != by_label.end(), Fault::ActionKindMismatch,
              "label family is not closed under the group");
      img[v] = it->second;
    }
    gen_images.push_back(Permutation(std::move(img)));
  }
  return build(std::move(graph), std::move(group), std::move(gen_images));
}

GraphAction GraphAction::from_generator_images(
    Graph graph, PermGroup group, const std::vector<Permutation>& gen_images) {
  require(gen_images.size() == group.generators().size(),
          Fault::ActionKindMismatch, "one image per generator required");
  for (const auto& p : gen_images)
    require(p.degree() == graph.n, Fault::ActionKindMismatch,
            "generator image degree must equal vertex count");
  return build(std::move(graph), std::move(group), gen_images);
}

int GraphAction::apply(const Permutation& x, int v) const {
  return vertex_perm(x)[v];
}

const Permutation& GraphAction::vertex_perm(const Permutation& x) const {
  int e = group_->index_of(x);
  require(e >= 0, Fault::ActionKindMismatch,
          "permutation is not an element of the acting group");
  return (*vertex_perms_)[e];
}

PermGroup GraphAction::kernel() const {
  std::vector<Permutation> fixing;
  for (std::size_t e = 0; e < group_->order(); ++e)
    if ((*vertex_perms_)[e].is_identity())
      fixing.push_back(group_->element(e));
  return PermGroup::from_elements(group_->degree(), std::move(fixing));
}

std::vector<int> apply_vertex_set(const Permutation& vp,
                                  const std::vector<int>& set) {
  std::vector<int> out(set.size());
  for (std::size_t i = 0; i < set.size(); ++i) out[i] = vp[set[i]];
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Arc> apply_arc_set(const Permutation& vp,
                               const std::vector<Arc>& arcs) {
  std::vector<Arc> out(arcs.size());
  for (std::size_t i = 0; i < arcs.size(); ++i) out[i] = apply_arc(vp, arcs[i]);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

struct IntHash {
  std::size_t operator()(int v) const { return std::hash<int>{}(v); }
};

struct VecHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (int x : v) h = h * 0x100000001b3ull ^ static_cast<std::size_t>(x);
    return h;
  }
};

}  // namespace

std::vector<int> vertex_orbit(const GraphAction& act, int v) {
  auto orb = orbit_of<int, IntHash>(
      act, v, [&](int e, int u) { return act.apply(e, u); });
  std::sort(orb.begin(), orb.end());
  return orb;
}

std::vector<Arc> arc_orbit(const GraphAction& act, const Arc& seed) {
  auto orb = orbit_of<Arc, VecHash>(act, seed, [&](int e, const Arc& a) {
    return apply_arc(act.vertex_perm(e), a);
  });
  std::sort(orb.begin(), orb.end());
  return orb;
}

PermGroup vertex_stabilizer(const GraphAction& act, int v) {
  return stabilizer_of(act, v,
                       [&](int e, int u) { return act.apply(e, u); });
}

PermGroup set_stabilizer(const GraphAction& act, const std::vector<int>& set) {
  std::vector<int> canon = set;
  std::sort(canon.begin(), canon.end());
  return stabilizer_of(act, canon, [&](int e, const std::vector<int>& s) {
    return apply_vertex_set(act.vertex_perm(e), s);
  });
}

PermGroup arc_set_stabilizer(const GraphAction& act,
                             const std::vector<Arc>& arcs) {
  std::vector<Arc> canon = arcs;
  std::sort(canon.begin(), canon.end());
  return stabilizer_of(act, canon, [&](int e, const std::vector<Arc>& s) {
    return apply_arc_set(act.vertex_perm(e), s);
  });
}

bool transitive_on_vertices(const GraphAction& act, const PermGroup& sub,
                            const std::vector<int>& verts) {
  require(!verts.empty(), Fault::ActionKindMismatch,
          "transitivity on an empty set");
  std::vector<int> sorted = verts;
  std::sort(sorted.begin(), sorted.end());
  std::unordered_set<int> reached;
  for (const auto& x : sub.elements()) reached.insert(act.apply(x, sorted[0]));
  if (reached.size() != sorted.size()) return false;
  for (int v : sorted)
    if (!reached.count(v)) return false;
  return true;
}

bool transitive_on_arcs(const GraphAction& act, const PermGroup& sub,
                        const std::vector<Arc>& arcs) {
  require(!arcs.empty(), Fault::ActionKindMismatch,
          "transitivity on an empty set");
  std::set<Arc> target(arcs.begin(), arcs.end());
  std::set<Arc> reached;
  for (const auto& x : sub.elements())
    reached.insert(apply_arc(act.vertex_perm(x), arcs[0]));
  return reached == target;
}

bool is_arc_transitive(const GraphAction& act) {
  auto all = act.graph().arcs();
  if (all.empty()) return false;
  return arc_orbit(act, all[0]).size() == all.size();
}

bool is_s_arc_transitive(const GraphAction& act, int s) {
  std::vector<Arc> all;
  for (int v = 0; v < act.graph().n; ++v) {
    auto from = l_arcs_from(act.graph(), s, v);
    all.insert(all.end(), from.begin(), from.end());
  }
  if (all.empty()) return false;
  return arc_orbit(act, all[0]).size() == all.size();
}

bool is_arc_regular(const GraphAction& act) {
  return is_arc_transitive(act) &&
         act.group().order() == act.graph().arcs().size();
}

}  // namespace dstar
