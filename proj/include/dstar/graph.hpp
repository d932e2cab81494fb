#ifndef DSTAR_GRAPH_HPP
#define DSTAR_GRAPH_HPP

#include <optional>
#include <string>
#include <vector>

#include "dstar/perm.hpp"

namespace dstar {

// An arc is a non-backtracking walk (v0,...,vl): consecutive vertices
// adjacent and v[i-1] != v[i+1] at every interior position.
using Arc = std::vector<int>;

// Finite simple undirected graph with sorted neighbor lists and a stable
// vertex order. labels[v] carries the point set a group permutes to move v
// (defaults to {v}); names[v] is the printable form ("123", "i2", "7").
struct Graph {
  int n = 0;
  std::vector<std::vector<int>> adj;
  std::vector<std::vector<int>> labels;
  std::vector<std::string> names;

  bool has_edge(int u, int v) const;
  std::size_t edge_count() const;
  std::vector<std::pair<int, int>> edges() const;  // u < v, sorted
  std::vector<Arc> arcs() const;                   // ordered pairs, sorted
  int degree_of(int v) const { return static_cast<int>(adj[v].size()); }
  bool is_regular() const;
  // Common degree; fails on irregular graphs.
  int valency() const;
  int vertex_by_label(const std::vector<int>& label) const;  // -1 if absent
};

Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges);

// All l-arcs of g starting at v, in lexicographic order.
std::vector<Arc> l_arcs_from(const Graph& g, int l, int v);
bool is_l_arc(const Graph& g, const Arc& a);
std::size_t l_arc_count(const Graph& g, int l);

Graph complete_graph(int n);
// K_{n,n}; vertices 0..n-1 are the left side ("i1".."in"), n..2n-1 the
// right side ("g1".."gn").
Graph complete_bipartite(int n);
Graph cycle_graph(int n);
// Odd graph O_n: vertices are the (n-1)-subsets of [2n-1], adjacent when
// disjoint. Labels are the subsets (0-indexed points), names their
// 1-indexed digit strings ("123").
Graph odd_graph(int n, std::size_t vertex_cap = 100000);

struct CatalogEntry {
  Graph graph;
  std::vector<Permutation> generators;  // natural acting group
  std::string group_name;
};

// Named instances together with the group each worked example acts by:
// "complete" n -> A_n, "complete-bipartite" n -> Sym(n) wr Sym(2),
// "cycle" n -> dihedral, "odd" n -> A_{2n-1}.
CatalogEntry catalog(const std::string& name, int n);

// Vertex set V x {0,1}, (u,0) ~ (v,1) iff u ~ v. Vertex (u,i) gets index
// u + i*n; names are suffixed "+"/"-".
Graph bipartite_double_cover(const Graph& g);

struct ComponentDecomposition {
  std::vector<std::vector<int>> components;  // sorted vertex sets
  std::size_t count() const { return components.size(); }
  std::vector<int> component_of;  // vertex -> component index
};

ComponentDecomposition components(const Graph& g);
Graph induced_subgraph(const Graph& g, const std::vector<int>& verts);

bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);
// Length of a shortest cycle; -1 for forests.
int girth(const Graph& g);

// Isomorphism by refinement-guided backtracking; returns a vertex bijection
// g1 -> g2 when one exists. Disconnected inputs are matched component by
// component. Caps the total vertex count (default 256).
std::optional<std::vector<int>> isomorphism(const Graph& g1, const Graph& g2,
                                            int cap = 256);
bool are_isomorphic(const Graph& g1, const Graph& g2, int cap = 256);

// Serialization.
std::string to_graph6(const Graph& g);
std::string to_dot(const Graph& g);
std::string to_json_string(const Graph& g);
Graph graph_from_json_string(const std::string& text);

}  // namespace dstar

#endif
