#include "commgraph/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <ostream>

namespace commgraph {

namespace {

constexpr const char* kDefaultCacheFile = ".commgraph-cache.jsonl";

}  // namespace

ReportCache::ReportCache(std::filesystem::path path, std::ostream* warnings)
    : path_(std::move(path)), warnings_(warnings) {
  std::ifstream in(path_);
  if (!in) {
    return;
  }
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty()) {
      continue;
    }
    try {
      auto entry = Json::parse(line);
      const auto key = entry.at("key").get<std::string>();
      // Validate the payload now so a bad record is never served later.
      (void)report_from_record(entry.at("report"));
      entries_[key] = std::move(entry.at("report"));
    } catch (const std::exception& e) {
      ++skipped_;
      if (warnings_ != nullptr) {
        *warnings_ << "warning: skipping corrupt cache line " << line_number << " in "
                   << path_.string() << ": " << e.what() << '\n';
      }
    }
  }
}

std::filesystem::path ReportCache::default_path() {
  if (const char* env = std::getenv("COMMGRAPH_CACHE"); env != nullptr && *env != '\0') {
    return env;
  }
  return kDefaultCacheFile;
}

std::string ReportCache::signature(const AbelianGroup& group, const ReportOptions& options) {
  const auto& caps = options.caps;
  return "v1;n=" + std::to_string(group.order()) + ";r=" + std::to_string(group.two_rank()) +
         ";caps=" + std::to_string(caps.detour_vertices) + "," +
         std::to_string(caps.resolving_vertices) + "," + std::to_string(caps.chromatic_vertices) +
         "," + std::to_string(caps.graph_vertices) +
         ";oracles=" + (options.skip_oracles ? "off" : "on");
}

std::optional<InvariantReport> ReportCache::get(const AbelianGroup& group,
                                                const ReportOptions& options) {
  const auto key = signature(group, options);
  std::lock_guard lock(mutex_);
  const auto it = entries_.find(key);
  if (it == entries_.end()) {
    return std::nullopt;
  }
  auto report = report_from_record(it->second);
  report.spec = group.spec();
  report.moduli.assign(group.moduli().begin(), group.moduli().end());
  return report;
}

void ReportCache::put(const AbelianGroup& group, const ReportOptions& options,
                      const InvariantReport& report) {
  const auto key = signature(group, options);
  auto record = report_to_record(report);
  Json line;
  line["key"] = key;
  line["report"] = record;
  std::lock_guard lock(mutex_);
  entries_[key] = std::move(record);
  std::ofstream out(path_, std::ios::app);
  if (!out) {
    if (warnings_ != nullptr) {
      *warnings_ << "warning: cannot write cache file " << path_.string() << '\n';
    }
    return;
  }
  out << line.dump() << '\n';
}

std::size_t ReportCache::size() const {
  std::lock_guard lock(mutex_);
  return entries_.size();
}

}  // namespace commgraph
