#include <numeric>
#include <random>

#include "doctest.h"
#include "dstar/action.hpp"
#include "dstar/graph.hpp"

using namespace dstar;

TEST_CASE("l-arc enumeration") {
  auto k3 = complete_graph(3);
  CHECK(l_arcs_from(k3, 1, 0).size() == 2);
  CHECK(l_arcs_from(k3, 0, 1) == std::vector<Arc>{{1}});

  auto petersen = odd_graph(3);
  CHECK(petersen.n == 10);
  CHECK(petersen.valency() == 3);
  for (int v = 0; v < petersen.n; ++v)
    CHECK(l_arcs_from(petersen, 2, v).size() == 6);  // 3 * 2

  CHECK_THROWS_AS(l_arcs_from(k3, 1, 7), Error);
}

TEST_CASE("odd graphs") {
  auto o2 = odd_graph(2);
  CHECK(o2.n == 3);
  CHECK(o2.edge_count() == 3);  // K3

  auto o4 = odd_graph(4);
  CHECK(o4.n == 35);
  CHECK(o4.valency() == 4);
  CHECK(o4.edge_count() == 70);
  CHECK(o4.vertex_by_label({0, 1, 2}) >= 0);
  CHECK(o4.names[o4.vertex_by_label({0, 1, 2})] == "123");
}

TEST_CASE("catalog entries") {
  auto k5 = catalog("complete", 5);
  CHECK(k5.graph.edge_count() == 10);
  CHECK(PermGroup::closure(k5.generators).order() == 60);

  auto k33 = catalog("complete-bipartite", 3);
  CHECK(k33.graph.edge_count() == 9);
  CHECK(PermGroup::closure(k33.generators).order() == 72);

  auto o4 = catalog("odd", 4);
  CHECK(o4.graph.edge_count() == 70);
  CHECK(PermGroup::closure(o4.generators).order() == 2520);

  CHECK_THROWS_AS(catalog("moebius", 5), Error);
}

TEST_CASE("bipartite double cover") {
  auto k2 = make_graph(2, {{0, 1}});
  auto dk2 = bipartite_double_cover(k2);
  CHECK(dk2.n == 4);
  CHECK(dk2.edge_count() == 2);
  CHECK(components(dk2).count() == 2);  // two disjoint edges

  auto c5 = cycle_graph(5);
  auto dc5 = bipartite_double_cover(c5);
  CHECK(dc5.n == 10);
  CHECK(is_connected(dc5));
  CHECK(dc5.valency() == 2);
  CHECK(are_isomorphic(dc5, cycle_graph(10)));

  auto desargues = bipartite_double_cover(odd_graph(3));
  CHECK(desargues.n == 20);
  CHECK(desargues.valency() == 3);
  CHECK(is_bipartite(desargues));
  CHECK(girth(desargues) == 6);
  CHECK(is_connected(desargues));
}

TEST_CASE("double cover doubles vertices and edges and is bipartite") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    int n = 3 + static_cast<int>(rng() % 8);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 3 == 0) edges.emplace_back(u, v);
    auto g = make_graph(n, edges);
    auto cover = bipartite_double_cover(g);
    CHECK(cover.n == 2 * g.n);
    CHECK(cover.edge_count() == 2 * g.edge_count());
    CHECK(is_bipartite(cover));
  }
}

TEST_CASE("components") {
  CHECK(components(odd_graph(3)).count() == 1);
  std::vector<std::pair<int, int>> edges;
  for (int c = 0; c < 6; ++c)
    for (int i = 0; i < 5; ++i)
      edges.emplace_back(5 * c + i, 5 * c + (i + 1) % 5);
  auto six_c5 = make_graph(30, edges);
  auto decomp = components(six_c5);
  CHECK(decomp.count() == 6);
  for (const auto& comp : decomp.components) CHECK(comp.size() == 5);

  CHECK(components(make_graph(4, {})).count() == 4);
}

TEST_CASE("handshake") {
  auto g = odd_graph(4);
  std::size_t total = 0;
  for (int v = 0; v < g.n; ++v) total += g.adj[v].size();
  CHECK(total == 2 * g.edge_count());
}

TEST_CASE("isomorphism") {
  CHECK(are_isomorphic(cycle_graph(5), cycle_graph(5)));
  CHECK_FALSE(are_isomorphic(odd_graph(3), cycle_graph(10)));

  // K33 minus a perfect matching is the 6-cycle.
  auto k33 = complete_bipartite(3);
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : k33.edges())
    if (v - u != 3) edges.emplace_back(u, v);
  auto pruned = make_graph(6, edges);
  CHECK(pruned.valency() == 2);
  auto witness = isomorphism(cycle_graph(6), pruned);
  REQUIRE(witness.has_value());

  // Witness really maps edges to edges, bijectively.
  std::vector<int> seen(6, 0);
  for (int img : *witness) seen[img] += 1;
  CHECK(std::accumulate(seen.begin(), seen.end(), 0) == 6);
  for (auto [u, v] : cycle_graph(6).edges())
    CHECK(pruned.has_edge((*witness)[u], (*witness)[v]));
}

TEST_CASE("isomorphism on random corpora is reflexive and symmetric") {
  std::mt19937 rng(20240817);
  for (int trial = 0; trial < 8; ++trial) {
    int n = 4 + static_cast<int>(rng() % 8);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 2 == 0) edges.emplace_back(u, v);
    auto g = make_graph(n, edges);
    CHECK(are_isomorphic(g, g));

    // Relabel by a random permutation; must stay isomorphic both ways.
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::pair<int, int>> relabeled;
    for (auto [u, v] : edges) relabeled.emplace_back(perm[u], perm[v]);
    auto h = make_graph(n, relabeled);
    auto w1 = isomorphism(g, h);
    auto w2 = isomorphism(h, g);
    REQUIRE(w1.has_value());
    REQUIRE(w2.has_value());
    for (auto [u, v] : g.edges()) CHECK(h.has_edge((*w1)[u], (*w1)[v]));
    for (auto [u, v] : h.edges()) CHECK(g.has_edge((*w2)[u], (*w2)[v]));
  }
}

TEST_CASE("multi-component isomorphism") {
  // 6 pentagons vs 6 pentagons with scrambled vertex numbering.
  std::vector<std::pair<int, int>> edges1, edges2;
  for (int c = 0; c < 6; ++c)
    for (int i = 0; i < 5; ++i)
      edges1.emplace_back(5 * c + i, 5 * c + (i + 1) % 5);
  std::mt19937 rng(99);
  std::vector<int> perm(30);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  for (auto [u, v] : edges1) edges2.emplace_back(perm[u], perm[v]);
  CHECK(are_isomorphic(make_graph(30, edges1), make_graph(30, edges2)));

  // C5 + C7 is not C6 + C6.
  std::vector<std::pair<int, int>> a, b;
  for (int i = 0; i < 5; ++i) a.emplace_back(i, (i + 1) % 5);
  for (int i = 0; i < 7; ++i) a.emplace_back(5 + i, 5 + (i + 1) % 7);
  for (int i = 0; i < 6; ++i) b.emplace_back(i, (i + 1) % 6);
  for (int i = 0; i < 6; ++i) b.emplace_back(6 + i, 6 + (i + 1) % 6);
  CHECK_FALSE(are_isomorphic(make_graph(12, a), make_graph(12, b)));
}

TEST_CASE("vertex-transitive graphs have constant arc counts") {
  auto o3 = catalog("odd", 3);
  auto X = PermGroup::closure(o3.generators);
  auto act = GraphAction::on_labels(o3.graph, X);
  CHECK(is_arc_transitive(act));
  for (int l = 1; l <= 3; ++l) {
    std::size_t base = l_arcs_from(o3.graph, l, 0).size();
    for (int v = 1; v < o3.graph.n; ++v)
      CHECK(l_arcs_from(o3.graph, l, v).size() == base);
  }
}

TEST_CASE("serialization") {
  auto c5 = cycle_graph(5);
  CHECK(to_graph6(c5) == "Dhc");
  auto round = graph_from_json_string(to_json_string(c5));
  CHECK(round.n == 5);
  CHECK(round.edges() == c5.edges());
  CHECK(to_dot(c5).find("0 -- 1") != std::string::npos);
  CHECK_THROWS_AS(graph_from_json_string("{"), Error);
}
