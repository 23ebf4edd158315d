#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>

#include "commgraph/abelian.hpp"
#include "commgraph/report.hpp"

namespace commgraph {

/// Append-only JSON-lines store of reports.
///
/// Entries are keyed by (n, r) and the oracle settings rather than by the
/// spelling of the group, so `Z6` and `Z2xZ3` share an entry. Unreadable lines
/// are skipped with a warning.
class ReportCache {
 public:
  explicit ReportCache(std::filesystem::path path, std::ostream* warnings = nullptr);

  /// `$COMMGRAPH_CACHE`, or `.commgraph-cache.jsonl` in the working directory.
  static std::filesystem::path default_path();

  static std::string signature(const AbelianGroup& group, const ReportOptions& options);

  /// A hit is relabelled with the queried group's spec and moduli.
  std::optional<InvariantReport> get(const AbelianGroup& group, const ReportOptions& options);
  void put(const AbelianGroup& group, const ReportOptions& options, const InvariantReport& report);

  std::size_t size() const;
  std::size_t skipped_lines() const noexcept { return skipped_; }
  const std::filesystem::path& path() const noexcept { return path_; }

 private:
  std::filesystem::path path_;
  std::ostream* warnings_;
  mutable std::mutex mutex_;
  std::unordered_map<std::string, Json> entries_;
  std::size_t skipped_ = 0;
};

}  // namespace commgraph
