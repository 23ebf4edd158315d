#include "commgraph/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <ostream>
#include <thread>

#include "commgraph/cache.hpp"
#include "commgraph/errors.hpp"

namespace commgraph {

namespace {

void ordered_factorizations(std::int64_t n, std::vector<std::int64_t>& prefix,
                            std::vector<std::vector<std::int64_t>>& out) {
  if (n == 1) {
    out.push_back(prefix);
    return;
  }
  for (std::int64_t d = 2; d <= n; ++d) {
    if (n % d == 0) {
      prefix.push_back(d);
      ordered_factorizations(n / d, prefix, out);
      prefix.pop_back();
    }
  }
}

std::string value_text(const Json& value) {
  if (value.is_string()) {
    return value.get<std::string>();
  }
  if (value.is_null()) {
    return "";
  }
  return value.dump();
}

std::string formula_text(const Check* c) { return c == nullptr ? "n/a" : value_text(c->formula); }

std::string oracle_text(const Check* c) {
  if (c == nullptr) {
    return "n/a";
  }
  return c->agreement == Agreement::Unchecked ? "unchecked" : value_text(c->oracle);
}

std::string agreement_text(const Check* c) {
  if (c == nullptr) {
    return "n/a";
  }
  switch (c->agreement) {
    case Agreement::Agree:
      return "true";
    case Agreement::Disagree:
      return "false";
    case Agreement::Unchecked:
      return "unchecked";
  }
  return "?";
}

std::string formula_with_mismatch(const Check* c) {
  if (c == nullptr) {
    return "n/a";
  }
  if (c->agreement == Agreement::Disagree) {
    return value_text(c->formula) + "!=" + value_text(c->oracle);
  }
  return value_text(c->formula);
}

}  // namespace

std::vector<AbelianGroup> all_abelian_groups(std::int64_t max_order) {
  if (max_order > kMaxSweepOrder) {
    throw InvalidParameters("--max-order " + std::to_string(max_order) +
                            " exceeds the sweep limit of " + std::to_string(kMaxSweepOrder));
  }
  std::vector<AbelianGroup> groups;
  for (std::int64_t n = 2; n <= max_order; ++n) {
    std::vector<std::vector<std::int64_t>> factorizations;
    std::vector<std::int64_t> prefix;
    ordered_factorizations(n, prefix, factorizations);
    std::sort(factorizations.begin(), factorizations.end(), [](const auto& a, const auto& b) {
      return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    for (auto& moduli : factorizations) {
      groups.emplace_back(std::move(moduli));
    }
  }
  return groups;
}

std::vector<AbelianGroup> parse_family(std::string_view family,
                                       std::optional<std::int64_t> max_order) {
  if (family == "all-abelian") {
    if (!max_order) {
      throw InvalidParameters("all-abelian needs --max-order");
    }
    return all_abelian_groups(*max_order);
  }
  std::vector<AbelianGroup> groups;
  std::size_t pos = 0;
  while (pos <= family.size()) {
    const auto end = family.find(',', pos);
    const auto token = family.substr(pos, end == std::string_view::npos ? end : end - pos);
    groups.push_back(parse_group_spec(token));
    if (end == std::string_view::npos) {
      break;
    }
    pos = end + 1;
  }
  return groups;
}

const std::vector<std::string>& sweep_columns() {
  static const std::vector<std::string> columns{
      "spec",     "n",        "r",        "blocks",    "edges_f", "edges_o",
      "chi_f",    "chi_o",    "eccO1_f",  "eccO1_o",   "eccO23_f", "eccO23_o",
      "radD",     "diamD",    "beta_f",   "beta_o",    "poly_agree", "agree_all"};
  return columns;
}

std::vector<std::string> sweep_row(const InvariantReport& report) {
  const auto* edges = report.find("edges");
  const auto* chi = report.find("chromatic");
  const auto* ecc1 = report.find("detour.ecc.omega1");
  const auto* ecc2 = report.find("detour.ecc.omega2");
  const auto* ecc3 = report.find("detour.ecc.omega3");
  // Omega2 and Omega3 share a formula; show whichever part disagrees.
  const auto* ecc23 = (ecc3 != nullptr && ecc3->agreement == Agreement::Disagree) ? ecc3 : ecc2;
  const auto* beta = report.find("resolving.beta");

  std::string overall;
  switch (report.overall()) {
    case Agreement::Agree:
      overall = "true";
      break;
    case Agreement::Disagree:
      overall = "false";
      break;
    case Agreement::Unchecked:
      overall = "unchecked";
      break;
  }
  return {report.spec,
          std::to_string(report.n),
          std::to_string(report.r),
          std::to_string(report.blocks()),
          formula_text(edges),
          oracle_text(edges),
          formula_text(chi),
          oracle_text(chi),
          formula_text(ecc1),
          oracle_text(ecc1),
          formula_text(ecc23),
          oracle_text(ecc23),
          formula_with_mismatch(report.find("detour.radius")),
          formula_with_mismatch(report.find("detour.diameter")),
          formula_text(beta),
          oracle_text(beta),
          agreement_text(report.find("resolving.poly")),
          overall};
}

void write_sweep_csv(std::ostream& out, const std::vector<InvariantReport>& reports) {
  const auto& columns = sweep_columns();
  for (std::size_t i = 0; i < columns.size(); ++i) {
    out << (i > 0 ? "," : "") << columns[i];
  }
  out << '\n';
  for (const auto& report : reports) {
    const auto row = sweep_row(report);
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << (i > 0 ? "," : "") << row[i];
    }
    out << '\n';
  }
}

SweepSummary summarize(const std::vector<InvariantReport>& reports) {
  SweepSummary s;
  for (const auto& report : reports) {
    ++s.rows;
    switch (report.overall()) {
      case Agreement::Agree:
        ++s.rows_agree;
        break;
      case Agreement::Disagree:
        ++s.rows_disagree;
        break;
      case Agreement::Unchecked:
        ++s.rows_unchecked;
        break;
    }
    s.checks_agree += report.count(Agreement::Agree);
    s.checks_disagree += report.count(Agreement::Disagree);
    s.checks_unchecked += report.count(Agreement::Unchecked);
  }
  return s;
}

void write_sweep_summary(std::ostream& out, const std::vector<InvariantReport>& reports) {
  const auto s = summarize(reports);
  out << "rows: " << s.rows << "  agree: " << s.rows_agree << "  disagree: " << s.rows_disagree
      << "  unchecked: " << s.rows_unchecked << '\n';
  out << "checks: agree " << s.checks_agree << "  disagree " << s.checks_disagree
      << "  unchecked " << s.checks_unchecked << '\n';
  for (const auto& report : reports) {
    for (const auto& c : report.checks) {
      if (c.agreement == Agreement::Disagree) {
        out << "DISAGREE " << report.spec << ' ' << c.field << ": formula=" << value_text(c.formula)
            << " oracle=" << value_text(c.oracle) << " witness: " << c.witness << '\n';
      }
    }
  }
}

InvariantReport cached_report(const AbelianGroup& group, const ReportOptions& options,
                              const FormulaSet& formulas, ReportCache* cache) {
  const bool use_cache = cache != nullptr && formulas.is_standard();
  if (use_cache) {
    if (auto hit = cache->get(group, options)) {
      return std::move(*hit);
    }
  }
  auto report = make_report(group, options, formulas);
  if (use_cache) {
    cache->put(group, options, report);
  }
  return report;
}

std::vector<InvariantReport> run_sweep(const std::vector<AbelianGroup>& groups,
                                       const ReportOptions& options, const FormulaSet& formulas,
                                       ReportCache* cache, std::size_t threads) {
  std::vector<InvariantReport> reports(groups.size());
  if (groups.empty()) {
    return reports;
  }
  if (threads == 0) {
    threads = std::max(1U, std::thread::hardware_concurrency());
  }
  threads = std::min(threads, groups.size());

  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(threads);
  auto worker = [&](std::size_t id) {
    try {
      for (auto i = next.fetch_add(1); i < groups.size(); i = next.fetch_add(1)) {
        reports[i] = cached_report(groups[i], options, formulas, cache);
      }
    } catch (...) {
      errors[id] = std::current_exception();
      next.store(groups.size());
    }
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t id = 0; id < threads; ++id) {
      pool.emplace_back(worker, id);
    }
  }
  for (const auto& e : errors) {
    if (e) {
      std::rethrow_exception(e);
    }
  }
  return reports;
}

}  // namespace commgraph
