#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace fibcat {

/// Outcome of one check: shared by every module and by the CLI.
struct Report {
  std::string check;
  bool verdict = true;
  std::vector<std::string> witnesses;
  std::vector<std::pair<std::string, std::int64_t>> counts;
  std::vector<Report> children;
  double elapsed_ms = 0.0;  // text output only

  Report() = default;
  explicit Report(std::string name) : check(std::move(name)) {}

  void fail(std::string witness);
  void count(std::string key, std::int64_t value);
  /// Appends `child` and folds its verdict into this report.
  void add(Report child);
  /// Appends `child` without touching this verdict.
  void attach(Report child);
  std::int64_t count_of(const std::string& key) const;  // -1 when absent
  const Report* find(const std::string& name) const;    // depth-first

  /// Structured form; deterministic (no timing).
  nlohmann::ordered_json to_json() const;
  std::string to_text() const;
};

}  // namespace fibcat
