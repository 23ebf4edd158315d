#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <iterator>
#include <string>
#include <utility>
#include <vector>

#include "commgraph/abelian.hpp"
#include "commgraph/detour.hpp"
#include "commgraph/errors.hpp"
#include "commgraph/graph.hpp"
#include "commgraph/invariants.hpp"
#include "commgraph/report.hpp"
#include "commgraph/resolving.hpp"
#include "commgraph/sweep.hpp"

namespace py = pybind11;
using namespace commgraph;

namespace {

// Via bytes: decimal text trips Python's limit on long int-string conversions.
py::int_ to_py(const BigInt& value) {
  std::string bytes;
  const BigInt magnitude_value = value < 0 ? BigInt(-value) : value;
  boost::multiprecision::export_bits(magnitude_value, std::back_inserter(bytes), 8);
  py::object magnitude = py::module_::import("builtins")
                             .attr("int")
                             .attr("from_bytes")(py::bytes(bytes), "big");
  return value < 0 ? py::int_(-magnitude) : py::int_(magnitude);
}

py::dict polynomial_to_dict(const ResolvingPolynomial& p) {
  py::dict out;
  for (std::size_t i = p.beta(); i <= p.vertex_count(); ++i) {
    out[py::int_(i)] = to_py(p.coefficient(i));
  }
  return out;
}

Part part_from_name(const std::string& name) {
  if (name == "omega1") return Part::Omega1;
  if (name == "omega2") return Part::Omega2;
  if (name == "omega3") return Part::Omega3;
  throw InvalidParameters("unknown part '" + name + "', expected omega1, omega2 or omega3");
}

ReportOptions make_options(bool skip_oracles, std::size_t max_detour, std::size_t max_resolving,
                           std::size_t max_chromatic, std::size_t max_graph) {
  ReportOptions options;
  options.skip_oracles = skip_oracles;
  options.caps.detour_vertices = max_detour;
  options.caps.resolving_vertices = max_resolving;
  options.caps.chromatic_vertices = max_chromatic;
  options.caps.graph_vertices = max_graph;
  return options;
}

std::vector<std::pair<std::size_t, std::size_t>> edge_list(const CommutingGraph& g) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t u = 0; u < g.vertex_count(); ++u) {
    for (std::size_t v = u + 1; v < g.vertex_count(); ++v) {
      if (g.adjacent(u, v)) {
        edges.emplace_back(u, v);
      }
    }
  }
  return edges;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Commuting graphs of generalized dihedral groups D(G)";

  py::register_exception<Error>(m, "CommgraphError", PyExc_ValueError);

  py::class_<AbelianGroup>(m, "AbelianGroup")
      .def(py::init<std::vector<std::int64_t>>(), py::arg("moduli"))
      .def_property_readonly("moduli",
                             [](const AbelianGroup& g) {
                               return std::vector<std::int64_t>(g.moduli().begin(),
                                                                g.moduli().end());
                             })
      .def_property_readonly("order", &AbelianGroup::order)
      .def_property_readonly("two_rank", &AbelianGroup::two_rank)
      .def_property_readonly("involution_count", &AbelianGroup::involution_count)
      .def_property_readonly("spec", &AbelianGroup::spec)
      .def("__repr__", [](const AbelianGroup& g) { return "AbelianGroup('" + g.spec() + "')"; });

  m.def("parse_group", &parse_group_spec, py::arg("spec"));

  py::class_<CommutingGraph>(m, "CommutingGraph")
      .def_property_readonly("vertex_count", &CommutingGraph::vertex_count)
      .def("adjacent", &CommutingGraph::adjacent, py::arg("u"), py::arg("v"))
      .def("label", &CommutingGraph::vertex_label, py::arg("v"))
      .def_property_readonly("labels",
                             [](const CommutingGraph& g) {
                               std::vector<std::string> out;
                               for (std::size_t v = 0; v < g.vertex_count(); ++v) {
                                 out.push_back(g.vertex_label(v));
                               }
                               return out;
                             })
      .def_property_readonly("parts",
                             [](const CommutingGraph& g) {
                               std::vector<std::string> out;
                               for (const auto& label : g.part_labels()) {
                                 out.push_back(to_string(label.part));
                               }
                               return out;
                             })
      .def("edges", &edge_list)
      .def("degree", [](const CommutingGraph& g, std::size_t v) { return degree(g, v); },
           py::arg("v"))
      .def("edge_count", [](const CommutingGraph& g) { return edge_count(g); })
      .def("__eq__", [](const CommutingGraph& a, const CommutingGraph& b) {
        return a.vertex_count() == b.vertex_count() && edge_sets_equal(a, b);
      });

  m.def(
      "commuting_graph",
      [](const std::string& spec) { return build_commuting_graph(parse_group_spec(spec)); },
      py::arg("spec"), "Brute-force commuting graph of D(G) in canonical vertex order.");
  m.def("structural_graph", &build_structural_graph, py::arg("n"), py::arg("r"));

  // Closed formulas.
  m.def(
      "degree_formula",
      [](std::uint64_t n, int r, const std::string& part) {
        return degree_formula(n, r, part_from_name(part));
      },
      py::arg("n"), py::arg("r"), py::arg("part"));
  m.def("edge_count_formula", &edge_count_formula, py::arg("n"), py::arg("r"));
  m.def("chromatic_number_formula", &chromatic_number_formula, py::arg("n"), py::arg("r"));
  m.def(
      "detour_ecc_formula",
      [](std::uint64_t n, int r, const std::string& part) {
        return detour_ecc_formula(n, r, part_from_name(part));
      },
      py::arg("n"), py::arg("r"), py::arg("part"));
  m.def(
      "detour_radius_diameter_formula",
      [](std::uint64_t n, int r) {
        const auto e = detour_radius_diameter_formula(n, r);
        return std::make_pair(e.radius, e.diameter);
      },
      py::arg("n"), py::arg("r"));
  m.def("metric_dimension_formula", &metric_dimension_formula, py::arg("n"), py::arg("r"));
  m.def(
      "resolving_polynomial_formula",
      [](std::uint64_t n, int r) { return polynomial_to_dict(resolving_polynomial_formula(n, r)); },
      py::arg("n"), py::arg("r"));
  m.def(
      "resolving_set_total_formula",
      [](std::uint64_t n, int r) { return to_py(resolving_set_total_formula(n, r)); },
      py::arg("n"), py::arg("r"));

  // Oracles.
  m.def("chromatic_number_oracle", &chromatic_number_oracle, py::arg("graph"),
        py::arg("max_vertices") = kDefaultMaxChromaticVertices);
  m.def(
      "detour_profile",
      [](const CommutingGraph& g, std::size_t max_vertices) {
        const auto p = detour_profile(g, max_vertices);
        py::dict out;
        out["eccentricity"] = p.eccentricity;
        out["radius"] = p.radius;
        out["diameter"] = p.diameter;
        return out;
      },
      py::arg("graph"), py::arg("max_vertices") = kDefaultMaxDetourVertices);
  m.def(
      "metric_dimension_oracle",
      [](const CommutingGraph& g, std::size_t max_vertices) {
        const auto result = metric_dimension_oracle(g, max_vertices);
        return std::make_pair(result.beta, result.witness);
      },
      py::arg("graph"), py::arg("max_vertices") = kDefaultMaxResolvingVertices);
  m.def(
      "resolving_polynomial_oracle",
      [](const CommutingGraph& g, std::size_t max_vertices) {
        return polynomial_to_dict(resolving_polynomial_oracle(g, max_vertices));
      },
      py::arg("graph"), py::arg("max_vertices") = kDefaultMaxResolvingVertices);

  // Reports come back as JSON text; the Python wrapper decodes them.
  m.def(
      "report_json",
      [](const std::string& spec, bool skip_oracles, std::size_t max_detour,
         std::size_t max_resolving, std::size_t max_chromatic, std::size_t max_graph,
         const std::string& inject) {
        const auto options =
            make_options(skip_oracles, max_detour, max_resolving, max_chromatic, max_graph);
        const auto formulas =
            inject.empty() ? FormulaSet::standard() : FormulaSet::with_off_by_one(inject);
        py::gil_scoped_release release;
        return report_to_json(make_report(parse_group_spec(spec), options, formulas)).dump();
      },
      py::arg("spec"), py::arg("skip_oracles") = false,
      py::arg("max_detour_vertices") = kDefaultMaxDetourVertices,
      py::arg("max_resolving_vertices") = kDefaultMaxResolvingVertices,
      py::arg("max_chromatic_vertices") = kDefaultMaxChromaticVertices,
      py::arg("max_graph_vertices") = kDefaultMaxGraphVertices, py::arg("inject") = "");
  m.def(
      "sweep_json",
      [](const std::string& family, std::optional<std::int64_t> max_order, bool skip_oracles,
         const std::string& inject, std::size_t threads) {
        const auto groups = parse_family(family, max_order);
        const auto formulas =
            inject.empty() ? FormulaSet::standard() : FormulaSet::with_off_by_one(inject);
        ReportOptions options;
        options.skip_oracles = skip_oracles;
        py::gil_scoped_release release;
        auto doc = Json::array();
        for (const auto& report : run_sweep(groups, options, formulas, nullptr, threads)) {
          doc.push_back(report_to_json(report));
        }
        return doc.dump();
      },
      py::arg("family"), py::arg("max_order") = py::none(), py::arg("skip_oracles") = false,
      py::arg("inject") = "", py::arg("threads") = 0);
  m.def("mutation_targets", &FormulaSet::mutation_targets);
}
