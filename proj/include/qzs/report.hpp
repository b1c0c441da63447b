#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace qzs {

/// Outcome of a verification run. Failures are data, not exceptions.
struct Report {
  std::string name;
  long checks = 0;
  long failures = 0;
  std::optional<std::string> first_failure;
  std::vector<std::string> notes;

  explicit Report(std::string n = {}) : name(std::move(n)) {}

  bool passed() const { return failures == 0; }
  /// `describe` runs only on failure.
  void expect(bool ok, const std::function<std::string()>& describe);
  void merge(const Report& sub);
  nlohmann::ordered_json to_json() const;
};

}  // namespace qzs
