#include "qzs/scheme.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

#include "qzs/catalog.hpp"
#include "qzs/error.hpp"

namespace qzs {

namespace {

struct NodeRow {
  const char* label;
  int row;
  const char* pattern;
};

constexpr NodeRow kNodes[] = {
    {"1a", 1, "BB/B/BB"}, {"2a", 2, "Bo/B/BB"}, {"2b", 2, "oB/B/BB"}, {"3a", 3, "BB/o/oB"}, {"3b", 3, "BB/o/Bo"},
    {"3c", 3, "Bo/B/Bo"}, {"3d", 3, "oo/B/BB"}, {"3e", 3, "oB/B/oB"}, {"4a", 4, "Bo/o/oB"}, {"4b", 4, "BB/o/oo"},
    {"4c", 4, "Bo/o/Bo"}, {"4d", 4, "oo/B/Bo"}, {"4e", 4, "oB/o/Bo"}, {"4f", 4, "oo/B/oB"}, {"4g", 4, "oB/o/oB"},
    {"5a", 5, "Bo/o/oo"}, {"5b", 5, "oo/o/Bo"}, {"5c", 5, "oo/B/oo"}, {"6a", 6, "oo/o/oo"},
};

constexpr const char* kEdges[][2] = {
    {"1a", "2a"}, {"1a", "2b"}, {"1a", "3a"}, {"1a", "3b"}, {"2a", "3c"}, {"2a", "3d"}, {"2b", "3d"}, {"2b", "4e"},
    {"2b", "3e"}, {"3a", "4a"}, {"3a", "4b"}, {"3b", "4b"}, {"3b", "4c"}, {"3b", "4e"}, {"3c", "4c"}, {"3c", "4d"},
    {"3d", "4d"}, {"3d", "4f"}, {"3e", "4f"}, {"3e", "4g"}, {"4a", "5a"}, {"4b", "5a"}, {"4c", "5a"}, {"4c", "5b"},
    {"4d", "5b"}, {"4d", "5c"}, {"4e", "5b"}, {"4f", "5c"}, {"5a", "6a"}, {"5b", "6a"}, {"5c", "6a"},
};

const char* const kSelfDual[] = {"1a", "3d", "4b", "5c", "6a"};
const char* const kDualPairs[][2] = {{"2a", "2b"}, {"3a", "3b"}, {"3c", "3e"}, {"4a", "4e"}, {"4c", "4g"}, {"4d", "4f"}};
// Nodes whose duals are off-scheme, with the catalog entry holding the dual family.
const char* const kOffSchemeDuals[][2] = {{"5a", "off-12"}, {"5b", "off-13"}};

constexpr std::uint64_t kBuildSeed = 1914;

std::vector<const FamilySpec*> node_specs(const std::string& label) {
  std::vector<const FamilySpec*> v;
  for (const auto* list : {&node_families(), &variant_families()}) {
    for (const auto& s : *list) {
      if (s.node == label) v.push_back(&s);
    }
  }
  return v;
}

std::string edge_str(const std::string& u, const std::string& v) { return u + " -> " + v; }

}  // namespace

const SchemeNode* SchemeGraph::find(const std::string& label) const {
  for (const auto& n : nodes) {
    if (n.label == label) return &n;
  }
  return nullptr;
}

SchemeGraph scheme_transcription() {
  SchemeGraph g;
  for (const auto& r : kNodes) {
    SchemeNode n{r.label, r.row, VanishingPattern::parse(r.pattern), {}};
    for (const auto* s : node_specs(n.label)) n.families.push_back(s->title);
    g.nodes.push_back(std::move(n));
  }
  for (const auto& e : kEdges) g.edges.emplace_back(e[0], e[1]);
  return g;
}

SchemeGraph build_scheme() {
  SchemeGraph g = scheme_transcription();
  std::mt19937_64 rng(kBuildSeed);
  for (const auto& n : g.nodes) {
    const auto specs = node_specs(n.label);
    if (specs.empty()) throw Error(Errc::TranscriptionMismatch, "no catalog family for node " + n.label);
    for (const auto* s : specs) {
      if (s->expected != n.pattern) {
        throw Error(Errc::TranscriptionMismatch, s->id + " is catalogued as " + s->expected.str() + ", node " +
                                                     n.label + " is " + n.pattern.str());
      }
      for (int draw = 0; draw < 2; ++draw) {
        const FamilyDraw fd = random_family_draw(*s, rng);
        const VanishingPattern got = vanishing_pattern(closed_form_coeffs(fd.data));
        if (got != n.pattern) {
          throw Error(Errc::TranscriptionMismatch,
                      s->id + " computes " + got.str() + ", node " + n.label + " is " + n.pattern.str());
        }
      }
    }
  }
  for (const auto& [u, v] : g.edges) {
    if (!g.find(u) || !g.find(v)) throw Error(Errc::TranscriptionMismatch, "dangling arrow " + edge_str(u, v));
  }
  return g;
}

Classification classify(const VerdeStarData& d, const SchemeGraph& g) {
  Classification c{vanishing_pattern(closed_form_coeffs(d)), {}};
  for (const auto& n : g.nodes) {
    if (n.pattern == c.pattern) c.nodes.push_back(n.label);
  }
  return c;
}

Classification classify(const VerdeStarData& d) {
  static const SchemeGraph g = scheme_transcription();
  return classify(d, g);
}

Report duality_check(const SchemeGraph& g) {
  Report rep("scheme duality");
  auto node = [&](const std::string& label) -> const SchemeNode& {
    const SchemeNode* n = g.find(label);
    if (!n) throw Error(Errc::TranscriptionMismatch, "missing node " + label);
    return *n;
  };
  for (const char* l : kSelfDual) {
    const auto& n = node(l);
    rep.expect(pattern_dual(n.pattern) == n.pattern, [&] { return n.label + " is not self-dual"; });
  }
  for (const auto& pr : kDualPairs) {
    const auto& u = node(pr[0]);
    const auto& v = node(pr[1]);
    rep.expect(pattern_dual(u.pattern) == v.pattern && pattern_dual(v.pattern) == u.pattern,
               [&] { return u.label + " and " + v.label + " are not a dual pair"; });
  }
  std::mt19937_64 rng(kBuildSeed);
  for (const auto& pr : kOffSchemeDuals) {
    const auto& n = node(pr[0]);
    const VanishingPattern reflected = pattern_dual(n.pattern);
    const bool off = std::none_of(g.nodes.begin(), g.nodes.end(), [&](const SchemeNode& m) { return m.pattern == reflected; });
    rep.expect(off, [&] { return n.label + " reflects onto a node"; });
    const FamilySpec& dual_spec = find_family(pr[1]);
    rep.expect(dual_spec.expected == reflected,
               [&] { return n.label + " reflects to " + reflected.str() + ", " + dual_spec.id + " is " + dual_spec.expected.str(); });
    const FamilySpec& spec = find_family(pr[0]);
    const FamilyDraw fd = random_family_draw(spec, rng);
    const Classification c = classify(dual_data(fd.data), g);
    rep.expect(c.pattern == reflected && c.nodes.empty(),
               [&] { return "dual data of " + n.label + " classifies as " + c.pattern.str(); });
    rep.notes.push_back(n.label + ": dual " + reflected.str() + " is off-scheme (" + dual_spec.title + ")");
  }
  return rep;
}

Report monotonicity_check(const SchemeGraph& g) {
  Report rep("arrow monotonicity");
  for (const auto& [u, v] : g.edges) {
    const SchemeNode* a = g.find(u);
    const SchemeNode* b = g.find(v);
    rep.expect(a && b && a->pattern.zeros_subset_of(b->pattern) && b->pattern.zero_count() > a->pattern.zero_count(),
               [&] { return edge_str(u, v) + " does not add zeros"; });
  }
  return rep;
}

Report reflection_report(const SchemeGraph& g) {
  Report rep("arrow reflection");
  std::map<std::string, std::string> dual;
  for (const char* l : kSelfDual) dual[l] = l;
  for (const auto& pr : kDualPairs) {
    dual[pr[0]] = pr[1];
    dual[pr[1]] = pr[0];
  }
  for (const auto& [u, v] : g.edges) {
    const auto du = dual.find(u);
    const auto dv = dual.find(v);
    const bool mapped = du != dual.end() && dv != dual.end() &&
                        std::find(g.edges.begin(), g.edges.end(), std::make_pair(du->second, dv->second)) != g.edges.end();
    rep.expect(mapped, [&] { return edge_str(u, v) + " has no reflected arrow"; });
    if (!mapped) {
      const std::string image = du != dual.end() && dv != dual.end() ? edge_str(du->second, dv->second) : "(no dual node)";
      rep.notes.push_back(edge_str(u, v) + " reflects to " + image);
    }
  }
  return rep;
}

std::string export_dot(const SchemeGraph& g) {
  auto row = [](const VanishingPattern& p, std::size_t from, std::size_t to) {
    std::string s;
    for (std::size_t i = from; i < to; ++i) s += p.flags[i] ? "&#9679;" : "&#9675;";
    return s;
  };
  std::ostringstream os;
  os << "digraph qzhedanov {\n";
  if (!g.nodes.empty()) os << "  node [shape=record];\n";
  for (const auto& n : g.nodes) {
    os << "  \"" << n.label << "\" [label=\"{" << n.label << "|" << row(n.pattern, 0, 2) << "|" << row(n.pattern, 2, 3)
       << "|" << row(n.pattern, 3, 5) << "}\"];\n";
  }
  for (const auto& [u, v] : g.edges) os << "  \"" << u << "\" -> \"" << v << "\";\n";
  os << "}\n";
  return os.str();
}

nlohmann::ordered_json export_json(const SchemeGraph& g) {
  nlohmann::ordered_json j;
  j["nodes"] = nlohmann::ordered_json::array();
  for (const auto& n : g.nodes) {
    nlohmann::ordered_json e;
    e["label"] = n.label;
    e["row"] = n.row;
    e["pattern"] = n.pattern.str();
    e["families"] = n.families;
    j["nodes"].push_back(e);
  }
  j["edges"] = nlohmann::ordered_json::array();
  for (const auto& [u, v] : g.edges) j["edges"].push_back({u, v});
  return j;
}

SchemeGraph graph_from_json(const nlohmann::json& j) {
  try {
    SchemeGraph g;
    for (const auto& e : j.at("nodes")) {
      g.nodes.push_back(SchemeNode{e.at("label").get<std::string>(), e.at("row").get<int>(),
                                   VanishingPattern::parse(e.at("pattern").get<std::string>()),
                                   e.at("families").get<std::vector<std::string>>()});
    }
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw Error(Errc::InvalidParameters, "edge must be a pair of labels");
      g.edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::InvalidParameters, std::string("malformed graph JSON: ") + e.what());
  }
}

}  // namespace qzs
