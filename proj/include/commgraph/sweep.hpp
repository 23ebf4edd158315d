#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "commgraph/abelian.hpp"
#include "commgraph/report.hpp"

namespace commgraph {

class ReportCache;

/// Largest `--max-order` accepted by the all-abelian generator.
inline constexpr std::int64_t kMaxSweepOrder = 256;

/// Every ordered factorisation m1 x ... x mk (all mi >= 2) of every order
/// 2..max_order, so isomorphic respellings such as Z2xZ4 and Z4xZ2 both
/// appear. Ordered by order, then factor count, then lexicographically.
std::vector<AbelianGroup> all_abelian_groups(std::int64_t max_order);

/// `all-abelian` (needs max_order) or a comma-separated list of group specs.
std::vector<AbelianGroup> parse_family(std::string_view family,
                                       std::optional<std::int64_t> max_order);

/// Column names of the sweep CSV, in order.
const std::vector<std::string>& sweep_columns();
std::vector<std::string> sweep_row(const InvariantReport& report);
void write_sweep_csv(std::ostream& out, const std::vector<InvariantReport>& reports);

struct SweepSummary {
  std::size_t rows = 0;
  std::size_t rows_agree = 0;
  std::size_t rows_disagree = 0;
  std::size_t rows_unchecked = 0;
  std::size_t checks_agree = 0;
  std::size_t checks_disagree = 0;
  std::size_t checks_unchecked = 0;
};

SweepSummary summarize(const std::vector<InvariantReport>& reports);

/// Human-readable totals plus one line per disagreement naming its witness.
void write_sweep_summary(std::ostream& out, const std::vector<InvariantReport>& reports);

/// Report for one group, served from `cache` when possible. Mutated formula
/// sets never touch the cache.
InvariantReport cached_report(const AbelianGroup& group, const ReportOptions& options,
                              const FormulaSet& formulas, ReportCache* cache);

/// One report per group, in input order, computed by at most `threads` workers.
std::vector<InvariantReport> run_sweep(const std::vector<AbelianGroup>& groups,
                                       const ReportOptions& options, const FormulaSet& formulas,
                                       ReportCache* cache, std::size_t threads = 0);

}  // namespace commgraph
