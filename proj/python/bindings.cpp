// Python bindings for the double-star calculus. The module mirrors the
// C++ surface thinly: permutations and groups, graphs and the catalog,
// star operations, orbit construction, quotient parameters, the refinement
// series, and the reference-example verifier (as a JSON string).

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dstar/instance.hpp"
#include "dstar/quotient.hpp"
#include "dstar/verify.hpp"

namespace py = pybind11;
using namespace dstar;

namespace {

ordered_json params_json(const ParamVector& pv) {
  return ordered_json{{"v", pv.v}, {"k", pv.k}, {"r", pv.r},
                      {"b", pv.b}, {"d", pv.d}, {"c", pv.c}};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "double-star graphs of finite symmetric graphs";

  py::register_exception<Error>(m, "DstarError");

  py::class_<Permutation>(m, "Permutation")
      .def(py::init([](const std::string& cycles, int degree) {
             return parse_cycles(cycles, degree);
           }),
           py::arg("cycles"), py::arg("degree"))
      .def_static("identity", &Permutation::identity)
      .def("degree", &Permutation::degree)
      .def("inverse", &Permutation::inverse)
      .def("is_identity", &Permutation::is_identity)
      .def("images", &Permutation::images)
      .def("cycles", &Permutation::cycles)
      .def("__mul__", &Permutation::operator*)
      .def("__getitem__",
           [](const Permutation& p, int i) {
             if (i < 0 || i >= p.degree()) throw py::index_error();
             return p[i];
           })
      .def("__eq__", [](const Permutation& a, const Permutation& b) {
        return a == b;
      })
      .def("__repr__", [](const Permutation& p) { return p.cycles(); });

  py::class_<PermGroup>(m, "PermGroup")
      .def_static(
          "closure",
          [](const std::vector<Permutation>& gens, std::size_t cap) {
            return PermGroup::closure(gens, cap);
          },
          py::arg("generators"), py::arg("cap") = PermGroup::kDefaultClosureCap)
      .def("order", &PermGroup::order)
      .def("degree", &PermGroup::degree)
      .def("elements", &PermGroup::elements)
      .def("contains", &PermGroup::contains)
      .def("is_subgroup_of", &PermGroup::is_subgroup_of)
      .def("__len__", &PermGroup::order);

  m.def("alternating_generators", &alternating_generators);
  m.def("symmetric_generators", &symmetric_generators);
  m.def("cyclic_generators", &cyclic_generators);
  m.def("dihedral_generators", &dihedral_generators);
  m.def("wreath_sym2_generators", &wreath_sym2_generators);

  py::class_<Graph>(m, "Graph")
      .def_readonly("n", &Graph::n)
      .def_readonly("names", &Graph::names)
      .def("edges", &Graph::edges)
      .def("arcs", &Graph::arcs)
      .def("has_edge", &Graph::has_edge)
      .def("degree_of", &Graph::degree_of)
      .def("is_regular", &Graph::is_regular)
      .def("valency", &Graph::valency)
      .def("graph6", [](const Graph& g) { return to_graph6(g); })
      .def("dot", [](const Graph& g) { return to_dot(g); })
      .def("json", [](const Graph& g) { return to_json_string(g); });

  m.def("make_graph", &make_graph, py::arg("n"), py::arg("edges"));
  m.def("graph_from_json", &graph_from_json_string);
  m.def("complete_graph", &complete_graph);
  m.def("complete_bipartite", &complete_bipartite);
  m.def("cycle_graph", &cycle_graph);
  m.def("odd_graph", &odd_graph, py::arg("n"), py::arg("vertex_cap") = 100000);
  m.def("bipartite_double_cover", &bipartite_double_cover);
  m.def("l_arcs_from", &l_arcs_from, py::arg("g"), py::arg("l"), py::arg("v"));
  m.def("girth", &girth);
  m.def("is_bipartite", &is_bipartite);
  m.def("is_connected", &is_connected);
  m.def(
      "components",
      [](const Graph& g) { return components(g).components; });
  m.def("isomorphism", &isomorphism, py::arg("g1"), py::arg("g2"),
        py::arg("cap") = 256);
  m.def("are_isomorphic", &are_isomorphic, py::arg("g1"), py::arg("g2"),
        py::arg("cap") = 256);

  py::class_<CatalogEntry>(m, "CatalogEntry")
      .def_readonly("graph", &CatalogEntry::graph)
      .def_readonly("generators", &CatalogEntry::generators)
      .def_readonly("group_name", &CatalogEntry::group_name);
  m.def("catalog", &catalog, py::arg("name"), py::arg("n"));

  py::class_<GraphAction>(m, "GraphAction")
      .def_static("on_points", &GraphAction::on_points)
      .def_static("on_labels", &GraphAction::on_labels)
      .def("graph", &GraphAction::graph, py::return_value_policy::copy)
      .def("group", &GraphAction::group, py::return_value_policy::copy)
      .def("apply",
           [](const GraphAction& a, const Permutation& x, int v) {
             return a.apply(x, v);
           })
      .def("is_arc_transitive",
           [](const GraphAction& a) { return is_arc_transitive(a); })
      .def("is_s_arc_transitive",
           [](const GraphAction& a, int s) { return is_s_arc_transitive(a, s); })
      .def("is_arc_regular",
           [](const GraphAction& a) { return is_arc_regular(a); })
      .def("vertex_orbit",
           [](const GraphAction& a, int v) { return vertex_orbit(a, v); })
      .def("vertex_stabilizer", [](const GraphAction& a, int v) {
        return vertex_stabilizer(a, v);
      });

  py::class_<StarShape>(m, "StarShape")
      .def(py::init([](int l, int r) { return StarShape{l, r}; }),
           py::arg("length"), py::arg("branches"))
      .def_readonly("length", &StarShape::length)
      .def_readonly("branches", &StarShape::branches);

  py::class_<Star>(m, "Star")
      .def_readonly("center", &Star::center)
      .def_readonly("shape", &Star::shape)
      .def_readonly("arcs", &Star::arcs)
      .def("__eq__", [](const Star& a, const Star& b) { return a == b; });

  m.def("make_star",
        [](const Graph& g, int l, int r, std::vector<Arc> arcs) {
          return make_star(g, StarShape{l, r}, std::move(arcs));
        });
  m.def("star_from_names", &star_from_names);
  m.def("is_star", [](const Graph& g, int center, int l, int r,
                      const std::vector<Arc>& arcs) {
    return is_star(g, center, StarShape{l, r}, arcs);
  });
  m.def("is_double_star", &is_double_star);
  m.def("project", &project);
  m.def("residual", &residual);
  m.def("branch", &branch);
  m.def("star_stabilizer", [](const GraphAction& act, const Star& s) {
    return arc_set_stabilizer(act, s.arcs);
  });

  py::class_<DoubleStar>(m, "DoubleStar")
      .def_readonly("left", &DoubleStar::left)
      .def_readonly("right", &DoubleStar::right);

  py::class_<ThetaOrbit>(m, "ThetaOrbit")
      .def_static("from_pair", &ThetaOrbit::from_pair)
      .def("members", &ThetaOrbit::members)
      .def("stars", &ThetaOrbit::stars)
      .def("self_paired", &ThetaOrbit::self_paired)
      .def("transitivity_level", &ThetaOrbit::transitivity_level)
      .def("x_symmetric", &ThetaOrbit::x_symmetric)
      .def("full_branching", &ThetaOrbit::full_branching)
      .def("pairing_witness", &ThetaOrbit::pairing_witness)
      .def("shape", &ThetaOrbit::shape);

  m.def(
      "enumerate_double_star_orbits",
      [](const GraphAction& act, int l, int r, std::size_t max_stars,
         std::size_t max_orbits) {
        return enumerate_double_star_orbits(
            act, StarShape{l, r}, EnumerationCaps{max_stars, max_orbits});
      },
      py::arg("action"), py::arg("l"), py::arg("r"),
      py::arg("max_stars") = 100000, py::arg("max_orbits") = 1000);

  py::class_<Partition>(m, "Partition")
      .def_static("from_blocks", &Partition::from_blocks)
      .def_static("singletons", &Partition::singletons)
      .def("blocks", &Partition::blocks)
      .def("block_of", &Partition::block_of)
      .def("is_trivial", &Partition::is_trivial)
      .def("__len__", &Partition::size);

  py::class_<DoubleStarGraph>(m, "DoubleStarGraph")
      .def_readonly("pi", &DoubleStarGraph::pi)
      .def_readonly("vertex_stars", &DoubleStarGraph::vertex_stars)
      .def_readonly("center_blocks", &DoubleStarGraph::center_blocks);
  m.def("double_star_graph", &double_star_graph);
  m.def("truncate", &dstar::truncate);  // the POSIX truncate also exists

  py::class_<StabilizerChain>(m, "StabilizerChain")
      .def_readonly("orders", &StabilizerChain::orders)
      .def_readonly("h", &StabilizerChain::h);
  m.def("stabilizer_chain", &stabilizer_chain);

  py::class_<GrowthResult>(m, "GrowthResult")
      .def_readonly("successors", &GrowthResult::successors)
      .def_readonly("predecessors", &GrowthResult::predecessors)
      .def_readonly("extended_plus", &GrowthResult::extended_plus)
      .def_readonly("extended_minus", &GrowthResult::extended_minus)
      .def_readonly("plus_is_star", &GrowthResult::plus_is_star)
      .def_readonly("minus_is_star", &GrowthResult::minus_is_star)
      .def_readonly("criterion", &GrowthResult::criterion);
  m.def("grow", &grow);
  m.def("grow_orbit", &grow_orbit);

  py::class_<CosetGraph>(m, "CosetGraph")
      .def_readonly("action", &CosetGraph::action)
      .def_readonly("coset_reps", &CosetGraph::coset_reps);
  m.def("coset_graph", &coset_graph);

  m.def("quotient_graph", &quotient_graph);
  m.def("params", [](const GraphAction& act, const Partition& p) {
    return params_json(params(act, p)).dump();
  });
  m.def("is_reducible", [](const GraphAction& act, const Partition& p) {
    return is_reducible(act, p);
  });
  m.def("center_intersection", &center_intersection);
  m.def("vertex_quotient_star", &vertex_quotient_star);

  m.def("refinement_series", [](const GraphAction& act, const Partition& b) {
    RefinementSeries series = refinement_series(act, b);
    ordered_json j;
    j["m"] = series.m;
    j["terminal_case"] = series.terminal == 't' ? "trivial" : "multicover";
    j["h"] = series.h;
    j["factor_bound"] = series.factor_bound;
    ordered_json levels = ordered_json::array();
    for (const auto& lvl : series.levels)
      levels.push_back(params_json(lvl.pv));
    j["levels"] = levels;
    return j.dump();
  });

  m.def(
      "verify_paper",
      [](const std::string& which) { return verify_paper(which).to_json().dump(); },
      py::arg("which") = "all");
  m.def("run_instance", [](const std::string& json_text) {
    auto result = run_instance(InstanceSpec::parse(json_text));
    return result.report.to_json().dump();
  });
}
