#include "commgraph/report.hpp"

#include <algorithm>
#include <chrono>
#include <optional>

#include "commgraph/errors.hpp"

namespace commgraph {

namespace {

class PhaseTimer {
 public:
  PhaseTimer(InvariantReport& report, std::string phase)
      : report_(report), phase_(std::move(phase)), start_(std::chrono::steady_clock::now()) {}
  PhaseTimer(const PhaseTimer&) = delete;
  PhaseTimer& operator=(const PhaseTimer&) = delete;
  ~PhaseTimer() {
    const std::chrono::duration<double, std::milli> elapsed =
        std::chrono::steady_clock::now() - start_;
    report_.timings_ms.emplace_back(std::move(phase_), elapsed.count());
  }

 private:
  InvariantReport& report_;
  std::string phase_;
  std::chrono::steady_clock::time_point start_;
};

Check unchecked(std::string field, Json formula, std::string note) {
  Check c;
  c.field = std::move(field);
  c.formula = std::move(formula);
  c.agreement = Agreement::Unchecked;
  c.note = std::move(note);
  return c;
}

Check checked(std::string field, Json formula, Json oracle, bool agree, std::string witness = {}) {
  Check c;
  c.field = std::move(field);
  c.formula = std::move(formula);
  c.oracle = std::move(oracle);
  c.agreement = agree ? Agreement::Agree : Agreement::Disagree;
  if (!agree) {
    c.witness = std::move(witness);
  }
  return c;
}

std::string cap_note(bool skipped, const char* flag, std::size_t cap, std::uint64_t vertices) {
  if (skipped) {
    return "oracles skipped";
  }
  return std::to_string(vertices) + " vertices exceed " + flag + "=" + std::to_string(cap);
}

std::string set_text(const CommutingGraph& g, const std::vector<std::size_t>& members) {
  std::string out = "{";
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i > 0) {
      out += ',';
    }
    out += g.vertex_label(members[i]);
  }
  return out + "}";
}

std::string decomposition_text(std::uint64_t n, int r) {
  const auto center = std::uint64_t{1} << r;
  return "K_" + std::to_string(center) + " v (K_" + std::to_string(n - center) + " u " +
         std::to_string(n / center) + "K_" + std::to_string(center) + ")";
}

Json polynomial_json(const ResolvingPolynomial& poly) {
  Json out = Json::object();
  for (auto i = poly.beta(); i <= poly.vertex_count(); ++i) {
    out[std::to_string(i)] = to_string(poly.coefficient(i));
  }
  return out;
}

std::optional<std::size_t> first_coefficient_difference(const ResolvingPolynomial& a,
                                                        const ResolvingPolynomial& b) {
  const auto top = std::max(a.vertex_count(), b.vertex_count());
  for (std::size_t i = 0; i <= top; ++i) {
    if (a.coefficient(i) != b.coefficient(i)) {
      return i;
    }
  }
  return std::nullopt;
}

std::vector<std::size_t> part_members(const CommutingGraph& g, Part part) {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (g.part_labels()[v].part == part) {
      out.push_back(v);
    }
  }
  return out;
}

// Oracle value for a whole part: the first vertex that disagrees with the
// formula, or the shared value when none does.
template <typename ValueOf>
Check part_check(std::string field, const CommutingGraph& g, Part part, std::uint64_t formula,
                 ValueOf&& value_of, const char* what) {
  const auto members = part_members(g, part);
  for (const auto v : members) {
    const auto measured = static_cast<std::uint64_t>(value_of(v));
    if (measured != formula) {
      return checked(std::move(field), formula, measured, false,
                     "vertex " + g.vertex_label(v) + " has " + what + " " +
                         std::to_string(measured));
    }
  }
  const auto shared = members.empty() ? formula : static_cast<std::uint64_t>(value_of(members[0]));
  return checked(std::move(field), formula, shared, true);
}

void add_abelian_checks(InvariantReport& report, const AbelianGroup& group,
                        const ReportOptions& options) {
  const auto vertices = 2 * report.n;
  const auto complete = "K_" + std::to_string(vertices);
  const auto edges = vertices * (vertices - 1) / 2;
  if (options.skip_oracles || vertices > options.caps.graph_vertices) {
    const auto note = cap_note(options.skip_oracles, "--max-graph-vertices",
                               options.caps.graph_vertices, vertices);
    report.checks.push_back(unchecked("complete", complete, note));
    report.checks.push_back(unchecked("edges", edges, note));
    report.checks.push_back(unchecked("degree", vertices - 1, note));
    return;
  }
  std::optional<CommutingGraph> graph;
  {
    PhaseTimer timer(report, "graph");
    graph.emplace(build_commuting_graph(group));
  }
  const auto measured_edges = static_cast<std::uint64_t>(edge_count(*graph));
  const bool is_complete = measured_edges == edges;
  report.checks.push_back(checked("complete", complete,
                                  is_complete ? Json(complete) : Json("not complete"), is_complete,
                                  "missing edges in the measured graph"));
  report.checks.push_back(checked("edges", edges, measured_edges, is_complete,
                                  "measured |E| = " + std::to_string(measured_edges)));
  std::uint64_t low_degree = vertices - 1;
  std::string witness;
  for (std::size_t v = 0; v < graph->vertex_count(); ++v) {
    const auto d = static_cast<std::uint64_t>(degree(*graph, v));
    if (d != vertices - 1) {
      low_degree = d;
      witness = "vertex " + graph->vertex_label(v) + " has degree " + std::to_string(d);
      break;
    }
  }
  report.checks.push_back(
      checked("degree", vertices - 1, low_degree, witness.empty(), witness));
}

void add_structure_checks(InvariantReport& report, const CommutingGraph* graph,
                          const ReportOptions& options, const FormulaSet& formulas) {
  const auto n = report.n;
  const auto r = report.r;
  const auto vertices = 2 * n;
  const auto note =
      cap_note(options.skip_oracles, "--max-graph-vertices", options.caps.graph_vertices, vertices);
  const auto decomposition = decomposition_text(n, r);

  if (graph == nullptr) {
    report.checks.push_back(unchecked("structure", decomposition, note));
    report.checks.push_back(unchecked("edges", formulas.edge_count(n, r), note));
    for (const auto part : {Part::Omega1, Part::Omega2, Part::Omega3}) {
      report.checks.push_back(
          unchecked("degree." + to_string(part), formulas.degree(n, r, part), note));
    }
    report.checks.push_back(unchecked("coloring", formulas.chromatic_number(n, r), note));
    return;
  }

  {
    PhaseTimer timer(report, "structure");
    const auto structural = build_structural_graph(n, r);
    const auto diff = first_edge_difference(*graph, structural);
    std::string witness;
    if (diff) {
      witness = "pair " + graph->vertex_label(diff->first) + " " +
                graph->vertex_label(diff->second) + " is " +
                (graph->adjacent(diff->first, diff->second) ? "adjacent" : "not adjacent") +
                " in the commuting graph but not in the decomposition";
    }
    report.checks.push_back(checked("structure", decomposition,
                                    diff ? Json("differs") : Json(decomposition), !diff, witness));
  }

  const auto edges_f = formulas.edge_count(n, r);
  const auto edges_o = static_cast<std::uint64_t>(edge_count(*graph));
  report.checks.push_back(checked("edges", edges_f, edges_o, edges_f == edges_o,
                                  "measured |E| = " + std::to_string(edges_o) +
                                      " (half the degree sum)"));
  for (const auto part : {Part::Omega1, Part::Omega2, Part::Omega3}) {
    report.checks.push_back(part_check(
        "degree." + to_string(part), *graph, part, formulas.degree(n, r, part),
        [&](std::size_t v) { return degree(*graph, v); }, "degree"));
  }

  const auto chi_f = formulas.chromatic_number(n, r);
  const auto colors = construct_coloring(*graph);
  std::string improper;
  for (std::size_t u = 0; u < graph->vertex_count() && improper.empty(); ++u) {
    for (std::size_t v = u + 1; v < graph->vertex_count(); ++v) {
      if (graph->adjacent(u, v) && colors[u] == colors[v]) {
        improper = "adjacent " + graph->vertex_label(u) + " and " + graph->vertex_label(v) +
                   " share colour " + std::to_string(colors[u]);
        break;
      }
    }
  }
  if (!improper.empty()) {
    report.checks.push_back(checked("coloring", chi_f, "improper", false, improper));
  } else {
    const auto used = static_cast<std::uint64_t>(color_count(colors));
    report.checks.push_back(checked("coloring", chi_f, used, used == chi_f,
                                    "the constructed colouring uses " + std::to_string(used) +
                                        " colours"));
  }
}

void add_chromatic_check(InvariantReport& report, const CommutingGraph* graph,
                         const ReportOptions& options, const FormulaSet& formulas) {
  const auto n = report.n;
  const auto vertices = 2 * n;
  const auto chi_f = formulas.chromatic_number(n, report.r);
  if (graph == nullptr || vertices > options.caps.chromatic_vertices) {
    report.checks.push_back(unchecked("chromatic", chi_f,
                                      cap_note(options.skip_oracles, "--max-chromatic-vertices",
                                               options.caps.chromatic_vertices, vertices)));
    return;
  }
  PhaseTimer timer(report, "chromatic");
  const auto chi_o =
      static_cast<std::uint64_t>(chromatic_number_oracle(*graph, options.caps.chromatic_vertices));
  const auto witness = chi_o < chi_f ? "exact search finds a proper colouring with " +
                                           std::to_string(chi_o) + " colours"
                                     : "exact search finds no proper colouring with " +
                                           std::to_string(chi_f) + " colours";
  report.checks.push_back(checked("chromatic", chi_f, chi_o, chi_f == chi_o, witness));
}

void add_detour_checks(InvariantReport& report, const CommutingGraph* graph,
                       const ReportOptions& options, const FormulaSet& formulas) {
  const auto n = report.n;
  const auto r = report.r;
  const auto vertices = 2 * n;
  const auto extremes = formulas.detour_extremes(n, r);
  if (graph == nullptr || vertices > options.caps.detour_vertices) {
    const auto note = cap_note(options.skip_oracles, "--max-detour-vertices",
                               options.caps.detour_vertices, vertices);
    for (const auto part : {Part::Omega1, Part::Omega2, Part::Omega3}) {
      report.checks.push_back(
          unchecked("detour.ecc." + to_string(part), formulas.detour_ecc(n, r, part), note));
    }
    report.checks.push_back(unchecked("detour.radius", extremes.radius, note));
    report.checks.push_back(unchecked("detour.diameter", extremes.diameter, note));
    return;
  }
  PhaseTimer timer(report, "detour");
  const auto profile = detour_profile(*graph, options.caps.detour_vertices);
  for (const auto part : {Part::Omega1, Part::Omega2, Part::Omega3}) {
    report.checks.push_back(part_check(
        "detour.ecc." + to_string(part), *graph, part, formulas.detour_ecc(n, r, part),
        [&](std::size_t v) { return profile.eccentricity[v]; }, "detour eccentricity"));
  }
  const auto& ecc = profile.eccentricity;
  const auto arg_min = static_cast<std::size_t>(std::min_element(ecc.begin(), ecc.end()) - ecc.begin());
  const auto arg_max = static_cast<std::size_t>(std::max_element(ecc.begin(), ecc.end()) - ecc.begin());
  report.checks.push_back(checked(
      "detour.radius", extremes.radius, profile.radius, extremes.radius == profile.radius,
      "vertex " + graph->vertex_label(arg_min) + " has the least eccentricity " +
          std::to_string(profile.radius)));
  report.checks.push_back(checked(
      "detour.diameter", extremes.diameter, profile.diameter,
      extremes.diameter == profile.diameter,
      "vertex " + graph->vertex_label(arg_max) + " has the greatest eccentricity " +
          std::to_string(profile.diameter)));
}

void add_resolving_checks(InvariantReport& report, const CommutingGraph* graph,
                          const ReportOptions& options, const FormulaSet& formulas) {
  const auto n = report.n;
  const auto r = report.r;
  const auto vertices = 2 * n;
  const auto beta_f = formulas.metric_dimension(n, r);
  const bool poly_small = vertices <= kMaxPolynomialVertices;
  std::optional<ResolvingPolynomial> poly_f;
  if (poly_small) {
    poly_f = formulas.resolving_polynomial(n, r);
  }
  const auto total_f = formulas.resolving_total(n, r);

  if (graph == nullptr || vertices > options.caps.resolving_vertices) {
    const auto note = cap_note(options.skip_oracles, "--max-resolving-vertices",
                               options.caps.resolving_vertices, vertices);
    report.checks.push_back(unchecked("resolving.beta", beta_f, note));
    report.checks.push_back(unchecked(
        "resolving.poly", poly_f ? polynomial_json(*poly_f) : Json("omitted"),
        poly_f ? note : "polynomial formula omitted above " +
                            std::to_string(kMaxPolynomialVertices) + " vertices"));
    report.checks.push_back(unchecked("resolving.total", to_string(total_f), note));
    return;
  }

  PhaseTimer timer(report, "resolving");
  const auto beta = metric_dimension_oracle(*graph, options.caps.resolving_vertices);
  std::string beta_witness;
  if (beta.beta < beta_f) {
    beta_witness = "resolving set " + set_text(*graph, beta.witness) + " of size " +
                   std::to_string(beta.beta);
  } else {
    beta_witness = "no resolving set below size " + std::to_string(beta.beta) +
                   "; smallest found " + set_text(*graph, beta.witness);
  }
  report.checks.push_back(checked("resolving.beta", beta_f, static_cast<std::uint64_t>(beta.beta),
                                  beta.beta == beta_f, beta_witness));

  const auto poly_o = resolving_polynomial_oracle(*graph, options.caps.resolving_vertices);
  const auto diff = first_coefficient_difference(*poly_f, poly_o);
  std::string poly_witness;
  if (diff) {
    poly_witness = "s_" + std::to_string(*diff) + ": formula " +
                   to_string(poly_f->coefficient(*diff)) + ", counted " +
                   to_string(poly_o.coefficient(*diff));
  }
  report.checks.push_back(checked("resolving.poly", polynomial_json(*poly_f),
                                  polynomial_json(poly_o), !diff, poly_witness));

  const auto total_o = poly_o.total();
  report.checks.push_back(checked("resolving.total", to_string(total_f), to_string(total_o),
                                  total_f == total_o,
                                  "counted " + to_string(total_o) + " resolving sets"));
}

Json check_to_json(const Check& c) {
  Json out;
  out["formula"] = c.formula;
  if (c.agreement == Agreement::Unchecked) {
    out["oracle"] = "unchecked";
    out["agree"] = "unchecked";
  } else {
    out["oracle"] = c.oracle;
    out["agree"] = c.agreement == Agreement::Agree;
  }
  if (!c.witness.empty()) {
    out["witness"] = c.witness;
  }
  if (!c.note.empty()) {
    out["note"] = c.note;
  }
  return out;
}

Agreement agreement_from_string(const std::string& text) {
  if (text == "agree") {
    return Agreement::Agree;
  }
  if (text == "disagree") {
    return Agreement::Disagree;
  }
  if (text == "unchecked") {
    return Agreement::Unchecked;
  }
  throw StructuralError("unknown agreement value '" + text + "'");
}

}  // namespace

FormulaSet FormulaSet::with_off_by_one(std::string_view target) {
  FormulaSet set;
  set.mutation = std::string(target);
  if (target == "degree") {
    set.degree = [](std::uint64_t n, int r, Part p) { return degree_formula(n, r, p) + 1; };
  } else if (target == "edges") {
    set.edge_count = [](std::uint64_t n, int r) { return edge_count_formula(n, r) + 1; };
  } else if (target == "chromatic") {
    set.chromatic_number = [](std::uint64_t n, int r) {
      return chromatic_number_formula(n, r) + 1;
    };
  } else if (target == "detour-ecc") {
    set.detour_ecc = [](std::uint64_t n, int r, Part p) {
      return detour_ecc_formula(n, r, p) + 1;
    };
  } else if (target == "detour-extremes") {
    set.detour_extremes = [](std::uint64_t n, int r) {
      auto e = detour_radius_diameter_formula(n, r);
      ++e.radius;
      return e;
    };
  } else if (target == "metric-dimension") {
    set.metric_dimension = [](std::uint64_t n, int r) {
      return metric_dimension_formula(n, r) + 1;
    };
  } else if (target == "resolving-polynomial") {
    set.resolving_polynomial = [](std::uint64_t n, int r) {
      const auto poly = resolving_polynomial_formula(n, r);
      auto coeffs = poly.coefficients();
      coeffs.front() += 1;
      return ResolvingPolynomial(poly.beta(), poly.vertex_count(), std::move(coeffs));
    };
  } else if (target == "resolving-total") {
    set.resolving_total = [](std::uint64_t n, int r) {
      return resolving_set_total_formula(n, r) + 1;
    };
  } else {
    throw InvalidParameters("unknown formula '" + std::string(target) + "' for mutation");
  }
  return set;
}

const std::vector<std::string>& FormulaSet::mutation_targets() {
  static const std::vector<std::string> targets{
      "degree",           "edges",           "chromatic",
      "detour-ecc",       "detour-extremes", "metric-dimension",
      "resolving-polynomial", "resolving-total"};
  return targets;
}

const Check* InvariantReport::find(std::string_view field) const {
  const auto it = std::find_if(checks.begin(), checks.end(),
                               [&](const Check& c) { return c.field == field; });
  return it == checks.end() ? nullptr : &*it;
}

std::size_t InvariantReport::count(Agreement agreement) const {
  return static_cast<std::size_t>(std::count_if(
      checks.begin(), checks.end(), [&](const Check& c) { return c.agreement == agreement; }));
}

Agreement InvariantReport::overall() const {
  if (count(Agreement::Disagree) > 0) {
    return Agreement::Disagree;
  }
  if (count(Agreement::Unchecked) > 0) {
    return Agreement::Unchecked;
  }
  return Agreement::Agree;
}

InvariantReport make_report(const AbelianGroup& group, const ReportOptions& options,
                            const FormulaSet& formulas) {
  InvariantReport report;
  report.spec = group.spec();
  report.moduli.assign(group.moduli().begin(), group.moduli().end());
  report.n = static_cast<std::uint64_t>(group.order());
  report.r = group.two_rank();
  report.abelian = is_elementary_abelian_2(group);

  if (report.abelian) {
    add_abelian_checks(report, group, options);
    return report;
  }

  const auto vertices = report.vertex_count();
  std::optional<CommutingGraph> graph;
  if (!options.skip_oracles && vertices <= options.caps.graph_vertices) {
    PhaseTimer timer(report, "graph");
    graph.emplace(build_commuting_graph(group));
  }
  const CommutingGraph* g = graph ? &*graph : nullptr;
  add_structure_checks(report, g, options, formulas);
  add_chromatic_check(report, g, options, formulas);
  add_detour_checks(report, g, options, formulas);
  add_resolving_checks(report, g, options, formulas);
  return report;
}

Json report_to_json(const InvariantReport& report, bool include_timings) {
  Json doc;
  doc["spec"] = report.spec;
  doc["moduli"] = report.moduli;
  doc["n"] = report.n;
  doc["r"] = report.r;
  doc["abelian"] = report.abelian;
  if (report.abelian) {
    doc["graph"] = "K_" + std::to_string(report.vertex_count());
  } else {
    doc["blocks"] = report.blocks();
  }
  doc["vertices"] = report.vertex_count();

  for (const auto& c : report.checks) {
    std::string pointer = "/" + c.field;
    std::replace(pointer.begin(), pointer.end(), '.', '/');
    doc[Json::json_pointer(pointer)] = check_to_json(c);
  }

  doc["summary"] = {{"agree", report.count(Agreement::Agree)},
                    {"disagree", report.count(Agreement::Disagree)},
                    {"unchecked", report.count(Agreement::Unchecked)}};
  switch (report.overall()) {
    case Agreement::Agree:
      doc["agree_all"] = true;
      break;
    case Agreement::Disagree:
      doc["agree_all"] = false;
      break;
    case Agreement::Unchecked:
      doc["agree_all"] = "unchecked";
      break;
  }
  Json disagreements = Json::array();
  for (const auto& c : report.checks) {
    if (c.agreement == Agreement::Disagree) {
      disagreements.push_back(
          {{"field", c.field}, {"formula", c.formula}, {"oracle", c.oracle}, {"witness", c.witness}});
    }
  }
  if (!disagreements.empty()) {
    doc["disagreements"] = std::move(disagreements);
  }
  if (include_timings) {
    Json timings = Json::object();
    for (const auto& [phase, ms] : report.timings_ms) {
      timings[phase] = ms;
    }
    doc["timings_ms"] = std::move(timings);
  }
  return doc;
}

Json report_to_record(const InvariantReport& report) {
  Json record;
  record["spec"] = report.spec;
  record["moduli"] = report.moduli;
  record["n"] = report.n;
  record["r"] = report.r;
  record["abelian"] = report.abelian;
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"field", c.field},
                      {"formula", c.formula},
                      {"oracle", c.oracle},
                      {"agree", to_string(c.agreement)},
                      {"witness", c.witness},
                      {"note", c.note}});
  }
  record["checks"] = std::move(checks);
  return record;
}

InvariantReport report_from_record(const Json& record) {
  InvariantReport report;
  report.spec = record.at("spec").get<std::string>();
  report.moduli = record.at("moduli").get<std::vector<std::int64_t>>();
  report.n = record.at("n").get<std::uint64_t>();
  report.r = record.at("r").get<int>();
  report.abelian = record.at("abelian").get<bool>();
  for (const auto& item : record.at("checks")) {
    Check c;
    c.field = item.at("field").get<std::string>();
    c.formula = item.at("formula");
    c.oracle = item.at("oracle");
    c.agreement = agreement_from_string(item.at("agree").get<std::string>());
    c.witness = item.at("witness").get<std::string>();
    c.note = item.at("note").get<std::string>();
    report.checks.push_back(std::move(c));
  }
  return report;
}

std::string to_string(Agreement agreement) {
  switch (agreement) {
    case Agreement::Agree:
      return "agree";
    case Agreement::Disagree:
      return "disagree";
    case Agreement::Unchecked:
      return "unchecked";
  }
  return "?";
}

}  // namespace commgraph
