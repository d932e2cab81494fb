#include "dstar/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include "json.hpp"

namespace dstar {

bool Graph::has_edge(int u, int v) const {
  const auto& row = adj[u];
  return std::binary_search(row.begin(), row.end(), v);
}

std::size_t Graph::edge_count() const {
  std::size_t total = 0;
  for (const auto& row : adj) total += row.size();
  return total / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n; ++u)
    for (int v : adj[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::vector<Arc> Graph::arcs() const {
  std::vector<Arc> out;
  for (int u = 0; u < n; ++u)
    for (int v : adj[u]) out.push_back({u, v});
  return out;
}

bool Graph::is_regular() const {
  for (int v = 0; v < n; ++v)
    if (adj[v].size() != adj[0].size()) return false;
  return n > 0;
}

int Graph::valency() const {
  require(is_regular(), Fault::HypothesisViolated, "graph is not regular");
  return degree_of(0);
}

int Graph::vertex_by_label(const std::vector<int>& label) const {
  for (int v = 0; v < n; ++v)
    if (labels[v] == label) return v;
  return -1;
}

namespace {

void default_labels(Graph& g) {
  g.labels.resize(g.n);
  g.names.resize(g.n);
  for (int v = 0; v < g.n; ++v) {
    g.labels[v] = {v};
    g.names[v] = std::to_string(v + 1);
  }
}

}  // namespace

Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
  require(n >= 0, Fault::ParseError, "negative vertex count");
  Graph g;
  g.n = n;
  g.adj.assign(n, {});
  for (auto [u, v] : edges) {
    require(u >= 0 && u < n && v >= 0 && v < n, Fault::VertexOutOfRange,
            "edge endpoint out of range");
    require(u != v, Fault::ParseError, "loops are not allowed");
    g.adj[u].push_back(v);
    g.adj[v].push_back(u);
  }
  for (auto& row : g.adj) {
    std::sort(row.begin(), row.end());
    require(std::adjacent_find(row.begin(), row.end()) == row.end(),
            Fault::ParseError, "multi-edge");
  }
  default_labels(g);
  return g;
}

bool is_l_arc(const Graph& g, const Arc& a) {
  if (a.empty()) return false;
  for (int v : a)
    if (v < 0 || v >= g.n) return false;
  for (std::size_t i = 0; i + 1 < a.size(); ++i)
    if (!g.has_edge(a[i], a[i + 1])) return false;
  for (std::size_t i = 1; i + 1 < a.size(); ++i)
    if (a[i - 1] == a[i + 1]) return false;
  return true;
}

namespace {

void extend_arcs(const Graph& g, int l, Arc& cur, std::vector<Arc>& out) {
  if (static_cast<int>(cur.size()) == l + 1) {
    out.push_back(cur);
    return;
  }
  int last = cur.back();
  int forbidden = cur.size() >= 2 ? cur[cur.size() - 2] : -1;
  for (int w : g.adj[last]) {
    if (w == forbidden) continue;
    cur.push_back(w);
    extend_arcs(g, l, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Arc> l_arcs_from(const Graph& g, int l, int v) {
  require(v >= 0 && v < g.n, Fault::VertexOutOfRange,
          "arc start out of range");
  require(l >= 0, Fault::IndexOutOfRange, "negative arc length");
  std::vector<Arc> out;
  Arc cur = {v};
  extend_arcs(g, l, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t l_arc_count(const Graph& g, int l) {
  std::size_t total = 0;
  for (int v = 0; v < g.n; ++v) total += l_arcs_from(g, l, v).size();
  return total;
}

Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return make_graph(n, edges);
}

Graph complete_bipartite(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) edges.emplace_back(u, n + v);
  Graph g = make_graph(2 * n, edges);
  for (int i = 0; i < n; ++i) {
    g.names[i] = "i" + std::to_string(i + 1);
    g.names[n + i] = "g" + std::to_string(i + 1);
  }
  return g;
}

Graph cycle_graph(int n) {
  require(n >= 3, Fault::ParseError, "cycle needs n >= 3");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return make_graph(n, edges);
}

Graph odd_graph(int n, std::size_t vertex_cap) {
  require(n >= 2, Fault::ParseError, "odd graph needs n >= 2");
  int points = 2 * n - 1;
  int size = n - 1;
  std::vector<std::vector<int>> subsets;
  std::vector<int> cur;
  // Lexicographic (n-1)-subsets of {0,...,2n-2}.
  auto gen = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == size) {
      subsets.push_back(cur);
      return;
    }
    for (int p = start; p < points; ++p) {
      cur.push_back(p);
      self(self, p + 1);
      cur.pop_back();
    }
  };
  gen(gen, 0);
  require(subsets.size() <= vertex_cap, Fault::CapExceeded,
          "odd graph exceeds vertex cap");

  std::vector<std::pair<int, int>> edges;
  auto disjoint = [](const std::vector<int>& a, const std::vector<int>& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
      if (a[i] == b[j]) return false;
      (a[i] < b[j]) ? ++i : ++j;
    }
    return true;
  };
  for (std::size_t u = 0; u < subsets.size(); ++u)
    for (std::size_t v = u + 1; v < subsets.size(); ++v)
      if (disjoint(subsets[u], subsets[v]))
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));

  Graph g = make_graph(static_cast<int>(subsets.size()), edges);
  for (std::size_t v = 0; v < subsets.size(); ++v) {
    g.labels[v] = subsets[v];
    std::string name;
    for (int p : subsets[v]) name += std::to_string(p + 1);
    g.names[v] = name;
  }
  return g;
}

CatalogEntry catalog(const std::string& name, int n) {
  if (name == "complete")
    return {complete_graph(n), alternating_generators(n),
            "alternating " + std::to_string(n)};
  if (name == "complete-bipartite")
    return {complete_bipartite(n), wreath_sym2_generators(n),
            "wreath " + std::to_string(n)};
  if (name == "cycle")
    return {cycle_graph(n), dihedral_generators(n),
            "dihedral " + std::to_string(n)};
  if (name == "odd")
    return {odd_graph(n), alternating_generators(2 * n - 1),
            "alternating " + std::to_string(2 * n - 1)};
  fail(Fault::UnknownName, "no catalog graph named '" + name + "'");
}

Graph bipartite_double_cover(const Graph& g) {
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges()) {
    edges.emplace_back(u, v + g.n);
    edges.emplace_back(v, u + g.n);
  }
  Graph cover = make_graph(2 * g.n, edges);
  for (int v = 0; v < g.n; ++v) {
    cover.names[v] = g.names[v] + "+";
    cover.names[v + g.n] = g.names[v] + "-";
  }
  return cover;
}

ComponentDecomposition components(const Graph& g) {
  ComponentDecomposition out;
  out.component_of.assign(g.n, -1);
  for (int root = 0; root < g.n; ++root) {
    if (out.component_of[root] >= 0) continue;
    int id = static_cast<int>(out.components.size());
    std::vector<int> comp;
    std::deque<int> queue = {root};
    out.component_of[root] = id;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      comp.push_back(v);
      for (int w : g.adj[v])
        if (out.component_of[w] < 0) {
          out.component_of[w] = id;
          queue.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.components.push_back(std::move(comp));
  }
  return out;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& verts) {
  std::vector<int> sorted = verts;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> pos(g.n, -1);
  for (std::size_t i = 0; i < sorted.size(); ++i) pos[sorted[i]] = static_cast<int>(i);
  std::vector<std::pair<int, int>> edges;
  for (int u : sorted)
    for (int v : g.adj[u])
      if (u < v && pos[v] >= 0) edges.emplace_back(pos[u], pos[v]);
  Graph sub = make_graph(static_cast<int>(sorted.size()), edges);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    sub.labels[i] = g.labels[sorted[i]];
    sub.names[i] = g.names[sorted[i]];
  }
  return sub;
}

bool is_connected(const Graph& g) { return components(g).count() <= 1; }

bool is_bipartite(const Graph& g) {
  std::vector<int> color(g.n, -1);
  for (int root = 0; root < g.n; ++root) {
    if (color[root] >= 0) continue;
    color[root] = 0;
    std::deque<int> queue = {root};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int w : g.adj[v]) {
        if (color[w] < 0) {
          color[w] = 1 - color[v];
          queue.push_back(w);
        } else if (color[w] == color[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

int girth(const Graph& g) {
  // BFS from every vertex; a non-tree edge at depth d closes a cycle.
  int best = -1;
  std::vector<int> dist(g.n), parent(g.n);
  for (int root = 0; root < g.n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(parent.begin(), parent.end(), -1);
    dist[root] = 0;
    std::deque<int> queue = {root};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int w : g.adj[v]) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          parent[w] = v;
          queue.push_back(w);
        } else if (w != parent[v]) {
          int len = dist[v] + dist[w] + 1;
          if (best < 0 || len < best) best = len;
        }
      }
    }
  }
  return best;
}

namespace {

// Iterated neighborhood refinement: vertices start colored by degree, then
// are repeatedly split by the multiset of neighbor colors.
std::vector<int> refine_colors(const Graph& g) {
  std::vector<int> color(g.n);
  for (int v = 0; v < g.n; ++v) color[v] = g.degree_of(v);
  for (int round = 0; round < g.n; ++round) {
    std::vector<std::pair<std::vector<int>, int>> sig(g.n);
    for (int v = 0; v < g.n; ++v) {
      std::vector<int> s;
      s.reserve(g.adj[v].size());
      for (int w : g.adj[v]) s.push_back(color[w]);
      std::sort(s.begin(), s.end());
      sig[v] = {std::move(s), color[v]};
    }
    std::vector<std::pair<std::vector<int>, int>> sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> next(g.n);
    for (int v = 0; v < g.n; ++v)
      next[v] = static_cast<int>(
          std::lower_bound(sorted.begin(), sorted.end(), sig[v]) -
          sorted.begin());
    if (next == color) break;
    color = std::move(next);
  }
  return color;
}

std::vector<int> color_histogram(const std::vector<int>& color) {
  std::vector<int> hist;
  for (int c : color) {
    if (c >= static_cast<int>(hist.size())) hist.resize(c + 1, 0);
    ++hist[c];
  }
  return hist;
}

// Backtracking match of connected g1 onto g2 under the given colorings.
// Vertices are ordered so each one (after the first) touches an already
// mapped vertex, which keeps the candidate sets small.
bool match_connected(const Graph& g1, const Graph& g2,
                     const std::vector<int>& c1, const std::vector<int>& c2,
                     std::vector<int>& mapping) {
  std::vector<int> order;
  std::vector<char> placed(g1.n, 0);
  order.reserve(g1.n);
  order.push_back(0);
  placed[0] = 1;
  for (std::size_t head = 0; head < order.size(); ++head)
    for (int w : g1.adj[order[head]])
      if (!placed[w]) {
        placed[w] = 1;
        order.push_back(w);
      }
  if (static_cast<int>(order.size()) != g1.n) return false;  // disconnected

  mapping.assign(g1.n, -1);
  std::vector<int> inv(g2.n, -1);

  // img is feasible for v when colors agree, mapped neighbors of v map onto
  // neighbors of img, and img has no mapped neighbor beyond those (so
  // non-edges are preserved too).
  auto feasible = [&](int v, int img) {
    if (inv[img] >= 0 || c1[v] != c2[img]) return false;
    int mapped = 0;
    for (int w : g1.adj[v])
      if (mapping[w] >= 0) {
        ++mapped;
        if (!g2.has_edge(img, mapping[w])) return false;
      }
    int img_mapped = 0;
    for (int w : g2.adj[img])
      if (inv[w] >= 0) ++img_mapped;
    return img_mapped == mapped;
  };

  auto rec = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == order.size()) return true;
    int v = order[depth];
    for (int img = 0; img < g2.n; ++img) {
      if (!feasible(v, img)) continue;
      mapping[v] = img;
      inv[img] = v;
      if (self(self, depth + 1)) return true;
      mapping[v] = -1;
      inv[img] = -1;
    }
    return false;
  };
  return rec(rec, 0);
}

std::optional<std::vector<int>> connected_isomorphism(const Graph& g1,
                                                      const Graph& g2) {
  if (g1.n != g2.n || g1.edge_count() != g2.edge_count()) return std::nullopt;
  std::vector<int> d1, d2;
  for (int v = 0; v < g1.n; ++v) d1.push_back(g1.degree_of(v));
  for (int v = 0; v < g2.n; ++v) d2.push_back(g2.degree_of(v));
  std::sort(d1.begin(), d1.end());
  std::sort(d2.begin(), d2.end());
  if (d1 != d2) return std::nullopt;
  if (is_bipartite(g1) != is_bipartite(g2)) return std::nullopt;
  if (girth(g1) != girth(g2)) return std::nullopt;

  std::vector<int> c1 = refine_colors(g1);
  std::vector<int> c2 = refine_colors(g2);
  if (color_histogram(c1) != color_histogram(c2)) return std::nullopt;

  std::vector<int> mapping;
  if (match_connected(g1, g2, c1, c2, mapping)) return mapping;
  return std::nullopt;
}

}  // namespace

std::optional<std::vector<int>> isomorphism(const Graph& g1, const Graph& g2,
                                            int cap) {
  if (g1.n != g2.n || g1.edge_count() != g2.edge_count()) return std::nullopt;
  if (g1.n == 0) return std::vector<int>{};

  ComponentDecomposition comp1 = components(g1);
  ComponentDecomposition comp2 = components(g2);
  if (comp1.count() != comp2.count()) return std::nullopt;
  // The size cap applies per connected component.
  for (const auto& c : comp1.components)
    require(static_cast<int>(c.size()) <= cap, Fault::CapExceeded,
            "isomorphism size cap exceeded");
  for (const auto& c : comp2.components)
    require(static_cast<int>(c.size()) <= cap, Fault::CapExceeded,
            "isomorphism size cap exceeded");
  if (comp1.count() == 1) return connected_isomorphism(g1, g2);

  std::vector<Graph> parts1, parts2;
  for (const auto& c : comp1.components) parts1.push_back(induced_subgraph(g1, c));
  for (const auto& c : comp2.components) parts2.push_back(induced_subgraph(g2, c));

  // Match components greedily by explicit pairwise isomorphism; exact
  // because graph isomorphism is an equivalence relation.
  std::vector<int> mapping(g1.n, -1);
  std::vector<char> taken(parts2.size(), 0);
  for (std::size_t i = 0; i < parts1.size(); ++i) {
    bool found = false;
    for (std::size_t j = 0; j < parts2.size() && !found; ++j) {
      if (taken[j] || parts2[j].n != parts1[i].n) continue;
      auto sub = connected_isomorphism(parts1[i], parts2[j]);
      if (!sub) continue;
      taken[j] = 1;
      for (int v = 0; v < parts1[i].n; ++v)
        mapping[comp1.components[i][v]] = comp2.components[j][(*sub)[v]];
      found = true;
    }
    if (!found) return std::nullopt;
  }
  return mapping;
}

bool are_isomorphic(const Graph& g1, const Graph& g2, int cap) {
  return isomorphism(g1, g2, cap).has_value();
}

std::string to_graph6(const Graph& g) {
  require(g.n <= 258047, Fault::CapExceeded, "graph6 size limit");
  std::string out;
  if (g.n <= 62) {
    out += static_cast<char>(g.n + 63);
  } else {
    out += '~';
    out += static_cast<char>(((g.n >> 12) & 63) + 63);
    out += static_cast<char>(((g.n >> 6) & 63) + 63);
    out += static_cast<char>((g.n & 63) + 63);
  }
  std::vector<int> bits;
  for (int v = 1; v < g.n; ++v)
    for (int u = 0; u < v; ++u) bits.push_back(g.has_edge(u, v) ? 1 : 0);
  while (bits.size() % 6) bits.push_back(0);
  for (std::size_t i = 0; i < bits.size(); i += 6) {
    int val = 0;
    for (int b = 0; b < 6; ++b) val = val * 2 + bits[i + b];
    out += static_cast<char>(val + 63);
  }
  return out;
}

std::string to_dot(const Graph& g) {
  std::ostringstream out;
  out << "graph G {\n";
  for (int v = 0; v < g.n; ++v)
    out << "  " << v << " [label=\"" << g.names[v] << "\"];\n";
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

std::string to_json_string(const Graph& g) {
  nlohmann::ordered_json j;
  j["n"] = g.n;
  j["edges"] = g.edges();
  j["labels"] = g.names;
  return j.dump();
}

Graph graph_from_json_string(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    fail(Fault::ParseError, std::string("bad graph JSON: ") + e.what());
  }
  require(j.contains("n") && j.contains("edges"), Fault::ParseError,
          "graph JSON needs \"n\" and \"edges\"");
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j["edges"]) {
    require(e.is_array() && e.size() == 2, Fault::ParseError,
            "each edge must be a pair");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  Graph g = make_graph(j["n"].get<int>(), edges);
  if (j.contains("labels")) {
    auto names = j["labels"].get<std::vector<std::string>>();
    require(static_cast<int>(names.size()) == g.n, Fault::ParseError,
            "label count mismatch");
    g.names = names;
  }
  return g;
}

}  // namespace dstar
