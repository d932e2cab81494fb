#include "fixtures.hpp"

#include <set>

using namespace dstar;

namespace fixtures {

Instance k5() {
  auto entry = catalog("complete", 5);
  auto X = PermGroup::closure(entry.generators);
  auto act = GraphAction::on_points(entry.graph, X);
  const Graph& g = act.graph();
  Star s = star_from_names(g, {{"1", "5"}, {"1", "4"}, {"1", "3"}});
  Star t = star_from_names(g, {{"5", "1"}, {"5", "2"}, {"5", "3"}});
  return {act, s, t};
}

Instance petersen(int length) {
  auto entry = catalog("odd", 3);
  auto X = PermGroup::closure(entry.generators);
  auto act = GraphAction::on_labels(entry.graph, X);
  const Graph& g = act.graph();

  // S_i = {(sigma, sigma^y, ..., sigma^{y^i}) | y in {x, x^-1}} with
  // x = (13524); likewise T_i from tau.
  Permutation x = parse_cycles("(13524)", 5);
  auto walk = [&](const std::string& start_name) {
    int start = -1;
    for (int u = 0; u < g.n; ++u)
      if (g.names[u] == start_name) start = u;
    std::vector<Arc> arcs;
    for (const Permutation& y : {x, x.inverse()}) {
      const Permutation& vy = act.vertex_perm(y);
      Arc a = {start};
      int v = start;
      for (int i = 0; i < length; ++i) {
        v = vy[v];
        a.push_back(v);
      }
      arcs.push_back(std::move(a));
    }
    return make_star(g, {length, 2}, std::move(arcs));
  };
  Star s = walk("12");
  Star t = walk("34");
  return {act, s, t};
}

Instance o4() {
  auto entry = catalog("odd", 4);
  auto X = PermGroup::closure(entry.generators);
  auto act = GraphAction::on_labels(entry.graph, X);
  const Graph& g = act.graph();
  Star s = star_from_names(g, {{"123", "456", "127"},
                               {"123", "456", "137"},
                               {"123", "457", "126"},
                               {"123", "457", "136"},
                               {"123", "567", "124"},
                               {"123", "567", "134"}});
  // The fourth row reads (456,127,356): the unique completion of the
  // displayed set into a (2,3)-star interlocking with S.
  Star t = star_from_names(g, {{"456", "123", "457"},
                               {"456", "123", "567"},
                               {"456", "127", "345"},
                               {"456", "127", "356"},
                               {"456", "137", "245"},
                               {"456", "137", "256"}});
  return {act, s, t};
}

Instance knn(int n) {
  auto entry = catalog("complete-bipartite", n);
  auto X = PermGroup::closure(entry.generators);
  auto act = GraphAction::on_points(entry.graph, X);
  const Graph& g = act.graph();

  // S = {(iota_1, gamma_i, iota_j) | i != 1, j not in {1, i}};
  // T = {(gamma_2, iota_i, gamma_j) | i != 2, j not in {2, i}}.
  auto iota = [&](int i) { return i - 1; };
  auto gamma = [&](int i) { return n + i - 1; };
  std::vector<Arc> s_arcs, t_arcs;
  for (int i = 1; i <= n; ++i) {
    if (i == 1) continue;
    for (int j = 1; j <= n; ++j) {
      if (j == 1 || j == i) continue;
      s_arcs.push_back({iota(1), gamma(i), iota(j)});
    }
  }
  for (int i = 1; i <= n; ++i) {
    if (i == 2) continue;
    for (int j = 1; j <= n; ++j) {
      if (j == 2 || j == i) continue;
      t_arcs.push_back({gamma(2), iota(i), gamma(j)});
    }
  }
  Star s = make_star(g, {2, n - 1}, std::move(s_arcs));
  Star t = make_star(g, {2, n - 1}, std::move(t_arcs));
  return {act, s, t};
}

}  // namespace fixtures
