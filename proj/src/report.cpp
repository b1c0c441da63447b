#include "qzs/report.hpp"

namespace qzs {

void Report::expect(bool ok, const std::function<std::string()>& describe) {
  ++checks;
  if (ok) return;
  ++failures;
  if (!first_failure) first_failure = describe();
}

void Report::merge(const Report& sub) {
  checks += sub.checks;
  failures += sub.failures;
  if (!first_failure && sub.first_failure) first_failure = sub.name + ": " + *sub.first_failure;
  for (const auto& n : sub.notes) notes.push_back(n);
}

nlohmann::ordered_json Report::to_json() const {
  nlohmann::ordered_json j;
  j["name"] = name;
  j["passed"] = passed();
  j["checks"] = checks;
  j["failures"] = failures;
  j["first_failure"] = first_failure ? nlohmann::ordered_json(*first_failure) : nlohmann::ordered_json(nullptr);
  if (!notes.empty()) j["notes"] = notes;
  return j;
}

}  // namespace qzs
