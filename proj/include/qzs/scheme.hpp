#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qzs/report.hpp"
#include "qzs/verdestar.hpp"
#include "qzs/zhedanov.hpp"

namespace qzs {

struct SchemeNode {
  std::string label;  // "1a".."6a"
  int row = 0;        // 1 = top
  VanishingPattern pattern;
  std::vector<std::string> families;  // catalog titles, main family first

  friend bool operator==(const SchemeNode&, const SchemeNode&) = default;
};

struct SchemeGraph {
  std::vector<SchemeNode> nodes;
  std::vector<std::pair<std::string, std::string>> edges;

  const SchemeNode* find(const std::string& label) const;
  friend bool operator==(const SchemeGraph&, const SchemeGraph&) = default;
};

/// The hard-coded nodes and arrows, without any recomputation.
SchemeGraph scheme_transcription();
/// Transcription checked against two seeded draws of every catalog family
/// attached to a node; TranscriptionMismatch on any disagreement.
SchemeGraph build_scheme();

struct Classification {
  VanishingPattern pattern;
  std::vector<std::string> nodes;  // empty when the pattern is off-scheme
};
Classification classify(const VerdeStarData& d);
Classification classify(const VerdeStarData& d, const SchemeGraph& g);

/// Self-dual nodes and dual pairs under pattern reflection; 5a and 5b are
/// checked to reflect onto off-scheme patterns matching their dual data.
Report duality_check(const SchemeGraph& g);
/// zeros(u) is a strict subset of zeros(v) for every arrow u -> v.
Report monotonicity_check(const SchemeGraph& g);
/// Maps every arrow through the dual relabeling; each arrow without an image is a failure.
Report reflection_report(const SchemeGraph& g);

std::string export_dot(const SchemeGraph& g);
nlohmann::ordered_json export_json(const SchemeGraph& g);
/// InvalidParameters on malformed input.
SchemeGraph graph_from_json(const nlohmann::json& j);

}  // namespace qzs
