#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "commgraph/abelian.hpp"
#include "commgraph/detour.hpp"
#include "commgraph/graph.hpp"
#include "commgraph/invariants.hpp"
#include "commgraph/resolving.hpp"
#include "json.hpp"

namespace commgraph {

using Json = nlohmann::ordered_json;

/// Size limits (in vertices) above which an oracle is reported as unchecked.
struct OracleCaps {
  std::size_t detour_vertices = kDefaultMaxDetourVertices;
  std::size_t resolving_vertices = kDefaultMaxResolvingVertices;
  std::size_t chromatic_vertices = kDefaultMaxChromaticVertices;
  std::size_t graph_vertices = kDefaultMaxGraphVertices;
};

/// The resolving polynomial formula has n/2^r + 3 big coefficients; past this
/// many vertices it is left out of reports.
inline constexpr std::uint64_t kMaxPolynomialVertices = 1024;

struct ReportOptions {
  OracleCaps caps;
  bool skip_oracles = false;
};

/// The closed formulas a report checks against. Swappable so the harness
/// itself can be mutation-tested.
struct FormulaSet {
  std::string mutation;  ///< empty for the unmodified set

  std::function<std::uint64_t(std::uint64_t, int, Part)> degree = degree_formula;
  std::function<std::uint64_t(std::uint64_t, int)> edge_count = edge_count_formula;
  std::function<std::uint64_t(std::uint64_t, int)> chromatic_number = chromatic_number_formula;
  std::function<std::uint64_t(std::uint64_t, int, Part)> detour_ecc = detour_ecc_formula;
  std::function<DetourExtremes(std::uint64_t, int)> detour_extremes =
      detour_radius_diameter_formula;
  std::function<std::uint64_t(std::uint64_t, int)> metric_dimension = metric_dimension_formula;
  std::function<ResolvingPolynomial(std::uint64_t, int)> resolving_polynomial =
      resolving_polynomial_formula;
  std::function<BigInt(std::uint64_t, int)> resolving_total = resolving_set_total_formula;

  static FormulaSet standard() { return {}; }
  /// Adds one to the named formula: degree, edges, chromatic, detour-ecc,
  /// detour-extremes, metric-dimension, resolving-polynomial or resolving-total.
  static FormulaSet with_off_by_one(std::string_view target);
  static const std::vector<std::string>& mutation_targets();

  bool is_standard() const noexcept { return mutation.empty(); }
};

enum class Agreement { Agree, Disagree, Unchecked };

/// One invariant computed twice: by closed formula and by an independent oracle.
struct Check {
  std::string field;  ///< dotted report path, e.g. "detour.ecc.omega1"
  Json formula;
  Json oracle;  ///< null when unchecked
  Agreement agreement = Agreement::Unchecked;
  std::string witness;  ///< concrete vertex/subset/coefficient behind a disagreement
  std::string note;     ///< why a check is unchecked
};

struct InvariantReport {
  std::string spec;
  std::vector<std::int64_t> moduli;
  std::uint64_t n = 0;
  int r = 0;
  bool abelian = false;
  std::vector<Check> checks;
  std::vector<std::pair<std::string, double>> timings_ms;

  std::uint64_t blocks() const noexcept { return abelian ? 0 : n >> r; }
  std::uint64_t vertex_count() const noexcept { return 2 * n; }
  const Check* find(std::string_view field) const;
  std::size_t count(Agreement agreement) const;
  /// Disagree if any check disagrees, else Unchecked if any is unchecked, else Agree.
  Agreement overall() const;
};

/// Runs every formula and, within the caps, every oracle for D(G).
InvariantReport make_report(const AbelianGroup& group, const ReportOptions& options = {},
                            const FormulaSet& formulas = FormulaSet::standard());

/// Nested report document; checks become {"formula", "oracle", "agree"} objects.
Json report_to_json(const InvariantReport& report, bool include_timings = false);

/// Flat form used by the cache.
Json report_to_record(const InvariantReport& report);
InvariantReport report_from_record(const Json& record);

std::string to_string(Agreement agreement);

}  // namespace commgraph
