// commgraph: formula-vs-oracle reports for commuting graphs of D(G).

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "commgraph/abelian.hpp"
#include "commgraph/cache.hpp"
#include "commgraph/errors.hpp"
#include "commgraph/graph.hpp"
#include "commgraph/invariants.hpp"
#include "commgraph/report.hpp"
#include "commgraph/sweep.hpp"

namespace {

constexpr int kExitAgree = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDisagree = 2;

struct CommonFlags {
  commgraph::ReportOptions options;
  bool no_cache = false;
  bool json = false;
  std::string inject;
};

void add_common_flags(CLI::App* cmd, CommonFlags& flags) {
  auto& caps = flags.options.caps;
  cmd->add_flag("--json", flags.json, "Emit JSON");
  cmd->add_flag("--no-cache", flags.no_cache, "Neither read nor write the report cache");
  cmd->add_flag("--skip-oracles", flags.options.skip_oracles,
                "Evaluate formulas only; oracle columns become unchecked");
  cmd->add_option("--max-detour-vertices", caps.detour_vertices, "Detour oracle cap")
      ->capture_default_str();
  cmd->add_option("--max-resolving-vertices", caps.resolving_vertices,
                  "Metric dimension and resolving polynomial oracle cap")
      ->capture_default_str();
  cmd->add_option("--max-chromatic-vertices", caps.chromatic_vertices, "Chromatic oracle cap")
      ->capture_default_str();
  cmd->add_option("--max-graph-vertices", caps.graph_vertices,
                  "Largest graph built for the structural and degree checks")
      ->capture_default_str();
  cmd->add_option("--inject-off-by-one", flags.inject,
                  "Add one to a formula (harness self-test)")
      ->check(CLI::IsMember(commgraph::FormulaSet::mutation_targets()));
}

commgraph::FormulaSet formulas_for(const CommonFlags& flags) {
  return flags.inject.empty() ? commgraph::FormulaSet::standard()
                              : commgraph::FormulaSet::with_off_by_one(flags.inject);
}

std::unique_ptr<commgraph::ReportCache> open_cache(const CommonFlags& flags) {
  if (flags.no_cache) {
    return nullptr;
  }
  return std::make_unique<commgraph::ReportCache>(commgraph::ReportCache::default_path(),
                                                  &std::cerr);
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw commgraph::Error("cannot open " + path + " for writing");
  }
  return out;
}

int exit_code(commgraph::Agreement overall) {
  return overall == commgraph::Agreement::Disagree ? kExitDisagree : kExitAgree;
}

void write_text_report(std::ostream& out, const commgraph::InvariantReport& report) {
  out << "group " << report.spec << "  n=" << report.n << "  r=" << report.r;
  if (report.abelian) {
    out << "  D(G) abelian, graph K_" << report.vertex_count() << '\n';
  } else {
    out << "  blocks=" << report.blocks() << "  vertices=" << report.vertex_count() << '\n';
  }
  auto text = [](const commgraph::Json& v) {
    return v.is_string() ? v.get<std::string>() : v.is_null() ? std::string("-") : v.dump();
  };
  for (const auto& c : report.checks) {
    out << "  " << std::left << std::setw(20) << c.field << ' ' << std::setw(10)
        << commgraph::to_string(c.agreement) << " formula=" << text(c.formula);
    if (c.agreement != commgraph::Agreement::Unchecked) {
      out << " oracle=" << text(c.oracle);
    }
    if (!c.witness.empty()) {
      out << "  witness: " << c.witness;
    }
    if (!c.note.empty()) {
      out << "  (" << c.note << ')';
    }
    out << '\n';
  }
  out << "agree " << report.count(commgraph::Agreement::Agree) << "  disagree "
      << report.count(commgraph::Agreement::Disagree) << "  unchecked "
      << report.count(commgraph::Agreement::Unchecked) << '\n';
}

struct ReportCommand {
  std::string spec;
  std::string output;
  std::string dot;
  std::string adjacency;
  std::string coloring;
  bool timings = false;
  CommonFlags common;

  int run() const {
    const auto group = commgraph::parse_group_spec(spec);
    const auto formulas = formulas_for(common);
    std::optional<commgraph::InvariantReport> report;
    if (timings) {
      // Cached reports carry no timings.
      report = commgraph::make_report(group, common.options, formulas);
    } else {
      auto cache = open_cache(common);
      report = commgraph::cached_report(group, common.options, formulas, cache.get());
    }

    std::ostringstream text;
    if (common.json) {
      text << commgraph::report_to_json(*report, timings).dump(2) << '\n';
    } else {
      write_text_report(text, *report);
    }
    if (output.empty()) {
      std::cout << text.str();
    } else {
      open_output(output) << text.str();
    }

    if (!dot.empty() || !adjacency.empty() || !coloring.empty()) {
      if (static_cast<std::size_t>(group.order()) * 2 > common.options.caps.graph_vertices) {
        throw commgraph::CapExceeded("graph exports need " + std::to_string(group.order() * 2) +
                                     " vertices; raise --max-graph-vertices");
      }
      const auto graph = commgraph::build_commuting_graph(group);
      if (!dot.empty()) {
        auto out = open_output(dot);
        commgraph::write_dot(out, graph);
      }
      if (!adjacency.empty()) {
        auto out = open_output(adjacency);
        commgraph::write_adjacency_csv(out, graph);
      }
      if (!coloring.empty()) {
        auto out = open_output(coloring);
        commgraph::write_coloring_json(out, graph, commgraph::construct_coloring(graph));
      }
    }
    return exit_code(report->overall());
  }
};

struct SweepCommand {
  std::string family;
  std::optional<std::int64_t> max_order;
  std::string csv;
  std::size_t threads = 0;
  CommonFlags common;

  int run() const {
    const auto groups = commgraph::parse_family(family, max_order);
    auto cache = open_cache(common);
    const auto reports =
        commgraph::run_sweep(groups, common.options, formulas_for(common), cache.get(), threads);

    if (common.json) {
      auto doc = commgraph::Json::array();
      for (const auto& report : reports) {
        doc.push_back(commgraph::report_to_json(report));
      }
      std::cout << doc.dump(2) << '\n';
    } else if (csv.empty()) {
      commgraph::write_sweep_csv(std::cout, reports);
    }
    if (!csv.empty()) {
      auto out = open_output(csv);
      commgraph::write_sweep_csv(out, reports);
    }
    // Keep stdout machine-readable when it already carries CSV or JSON.
    std::ostream& summary = (common.json || csv.empty()) ? std::cerr : std::cout;
    commgraph::write_sweep_summary(summary, reports);
    return commgraph::summarize(reports).rows_disagree > 0 ? kExitDisagree : kExitAgree;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Commuting graphs of generalized dihedral groups: closed formulas vs exact oracles"};
  app.require_subcommand(1);

  ReportCommand report;
  auto* report_cmd = app.add_subcommand("report", "Check every invariant of D(G) for one group");
  report_cmd->add_option("spec", report.spec, "Group, e.g. Z6 or Z2xZ4")->required();
  report_cmd->add_option("-o,--output", report.output, "Write the report here instead of stdout");
  report_cmd->add_option("--export-dot", report.dot, "Write the graph as Graphviz DOT");
  report_cmd->add_option("--export-adj", report.adjacency, "Write the adjacency matrix as CSV");
  report_cmd->add_option("--export-coloring", report.coloring,
                         "Write the constructed n-colouring as JSON");
  report_cmd->add_flag("--timings", report.timings, "Include per-phase timings (implies no cache)");
  add_common_flags(report_cmd, report.common);

  SweepCommand sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "Report on a family of groups");
  sweep_cmd->add_option("family", sweep.family, "all-abelian or a comma list such as Z3,Z4,Z6")
      ->required();
  sweep_cmd->add_option("--max-order", sweep.max_order, "Largest |G| for all-abelian");
  sweep_cmd->add_option("--csv", sweep.csv, "Write the sweep table here");
  sweep_cmd->add_option("--threads", sweep.threads, "Worker count (0 = hardware concurrency)")
      ->capture_default_str();
  add_common_flags(sweep_cmd, sweep.common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*report_cmd) {
      return report.run();
    }
    return sweep.run();
  } catch (const commgraph::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
