#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "qzs/catalog.hpp"
#include "qzs/error.hpp"
#include "qzs/scheme.hpp"

using namespace qzs;

namespace {

Errc code_of(const auto& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return Errc::ParseError;
}

Rational r(long long p, long long q = 1) { return Rational(p, q); }

const QValue kHalf = QValue::of(r(1, 2));

std::vector<std::string> targets(const SchemeGraph& g, const std::string& u) {
  std::vector<std::string> v;
  for (const auto& [a, b] : g.edges) {
    if (a == u) v.push_back(b);
  }
  return v;
}

std::vector<std::string> sources(const SchemeGraph& g, const std::string& v) {
  std::vector<std::string> u;
  for (const auto& [a, b] : g.edges) {
    if (b == v) u.push_back(a);
  }
  return u;
}

using Labels = std::vector<std::string>;

}  // namespace

TEST_CASE("transcription") {
  const SchemeGraph g = scheme_transcription();
  CHECK(g.nodes.size() == 19);
  CHECK(g.edges.size() == 31);
  CHECK(targets(g, "1a") == Labels{"2a", "2b", "3a", "3b"});
  CHECK(sources(g, "6a") == Labels{"5a", "5b", "5c"});
  CHECK(g.find("2b")->pattern.str() == "oB/B/BB");
  CHECK(g.find("6a")->pattern.str() == "oo/o/oo");
  CHECK(g.find("7z") == nullptr);

  // row-major, rows 1..6 holding 1, 2, 5, 7, 3, 1 nodes
  std::vector<int> per_row(7, 0);
  int last = 0;
  for (const auto& n : g.nodes) {
    CHECK(n.row >= last);
    last = n.row;
    ++per_row[n.row];
    CHECK(n.pattern.zero_count() == n.row - 1);
  }
  CHECK(per_row == std::vector<int>{0, 1, 2, 5, 7, 3, 1});

  std::set<std::string> patterns;
  for (const auto& n : g.nodes) patterns.insert(n.pattern.str());
  CHECK(patterns.size() == 19);
  std::set<std::pair<std::string, std::string>> unique(g.edges.begin(), g.edges.end());
  CHECK(unique.size() == 31);
  for (const auto& n : g.nodes) CHECK_MESSAGE(!n.families.empty(), n.label);
}

TEST_CASE("build recomputes every node") {
  const SchemeGraph g = build_scheme();
  CHECK(g == scheme_transcription());
  CHECK(g == build_scheme());
  CHECK(g.find("3c")->families.front() == find_family("3c").title);
}

TEST_CASE("monotone arrows") {
  const SchemeGraph g = scheme_transcription();
  const Report rep = monotonicity_check(g);
  CHECK(rep.checks == 31);
  CHECK(rep.passed());

  SchemeGraph bad = g;
  bad.edges.emplace_back("2a", "2b");
  bad.edges.emplace_back("3a", "1a");
  const Report b = monotonicity_check(bad);
  CHECK(b.failures == 2);
  CHECK(b.first_failure.value_or("") == "2a -> 2b does not add zeros");
}

TEST_CASE("duality") {
  const SchemeGraph g = scheme_transcription();
  const Report rep = duality_check(g);
  INFO(rep.first_failure.value_or(""));
  CHECK(rep.passed());
  CHECK(rep.notes.size() == 2);
  CHECK(pattern_dual(g.find("3c")->pattern) == g.find("3e")->pattern);
  CHECK(pattern_dual(g.find("4c")->pattern) == g.find("4g")->pattern);
  CHECK(pattern_dual(g.find("5c")->pattern) == g.find("5c")->pattern);

  // swapping two nodes breaks the pair lists
  SchemeGraph bad = g;
  std::swap(bad.nodes[1].pattern, bad.nodes[3].pattern);
  CHECK_FALSE(duality_check(bad).passed());
  SchemeGraph missing = g;
  missing.nodes.pop_back();
  CHECK(code_of([&] { duality_check(missing); }) == Errc::TranscriptionMismatch);
}

TEST_CASE("reflection of arrows") {
  const Report rep = reflection_report(scheme_transcription());
  CHECK(rep.checks == 31);
  CHECK(rep.failures == 10);
  CHECK(rep.notes == Labels{
                         "2b -> 4e reflects to 2a -> 4a",
                         "3b -> 4c reflects to 3a -> 4g",
                         "4a -> 5a reflects to (no dual node)",
                         "4b -> 5a reflects to (no dual node)",
                         "4c -> 5a reflects to (no dual node)",
                         "4c -> 5b reflects to (no dual node)",
                         "4d -> 5b reflects to (no dual node)",
                         "4e -> 5b reflects to (no dual node)",
                         "5a -> 6a reflects to (no dual node)",
                         "5b -> 6a reflects to (no dual node)",
                     });
}

TEST_CASE("classification") {
  const Classification bqj = classify(big_q_jacobi_data(BigQJacobiParams{3, 5, 7, kHalf}));
  CHECK(bqj.pattern.str() == "oB/B/BB");
  CHECK(bqj.nodes == Labels{"2b"});

  const Rational a = 2, b = 3;
  const Classification sym = classify(askey_wilson_data(AWParams{a, b, -a, -b, kHalf}));
  CHECK(sym.nodes == Labels{"3b"});

  std::mt19937_64 rng(7);
  const FamilyDraw off1 = random_family_draw(find_family("off-1"), rng);
  const Classification c = classify(off1.data);
  CHECK(c.pattern.str() == "BB/o/BB");
  CHECK(c.nodes.empty());

  // the graph argument restricts the lookup
  SchemeGraph only1a;
  only1a.nodes.push_back(*scheme_transcription().find("1a"));
  CHECK(classify(big_q_jacobi_data(BigQJacobiParams{3, 5, 7, kHalf}), only1a).nodes.empty());
}

TEST_CASE("every node family lands on its node") {
  std::mt19937_64 rng(2024);
  for (const auto* list : {&node_families(), &variant_families()}) {
    for (const auto& spec : *list) {
      if (spec.node.empty()) continue;
      for (int draw = 0; draw < 2; ++draw) {
        const FamilyDraw fd = random_family_draw(spec, rng);
        INFO(spec.id << " q=" << fd.q.q);
        CHECK(classify(fd.data).nodes == Labels{spec.node});
      }
    }
  }
}

TEST_CASE("off-scheme families stay off the graph") {
  std::mt19937_64 rng(99);
  CHECK(off_scheme_families().size() == 13);
  for (const auto& spec : off_scheme_families()) {
    const FamilyDraw fd = random_family_draw(spec, rng);
    const Classification c = classify(fd.data);
    INFO(spec.id);
    CHECK(c.pattern == spec.expected);
    CHECK(c.nodes.empty());
  }
}

TEST_CASE("DOT export") {
  const SchemeGraph g = scheme_transcription();
  const std::string dot = export_dot(g);
  CHECK(dot == export_dot(scheme_transcription()));
  CHECK(dot.rfind("digraph qzhedanov {\n", 0) == 0);
  CHECK(dot.find("  \"1a\" [label=\"{1a|&#9679;&#9679;|&#9679;|&#9679;&#9679;}\"];\n") != std::string::npos);
  CHECK(dot.find("  \"2b\" [label=\"{2b|&#9675;&#9679;|&#9679;|&#9679;&#9679;}\"];\n") != std::string::npos);
  CHECK(dot.find("  \"5c\" -> \"6a\";\n") != std::string::npos);
  std::size_t arrows = 0;
  for (std::size_t p = dot.find("\" -> \""); p != std::string::npos; p = dot.find("\" -> \"", p + 1)) ++arrows;
  CHECK(arrows == 31);
  // 1a is listed before 2a, and edges follow the nodes
  CHECK(dot.find("\"1a\" [") < dot.find("\"2a\" ["));
  CHECK(dot.find("\"6a\" [") < dot.find("->"));

  CHECK(export_dot(SchemeGraph{}) == "digraph qzhedanov {\n}\n");
}

TEST_CASE("JSON export") {
  const SchemeGraph g = scheme_transcription();
  const auto j = export_json(g);
  CHECK(j["nodes"].size() == 19);
  CHECK(j["edges"].size() == 31);
  CHECK(j["nodes"][0]["label"] == "1a");
  CHECK(j["nodes"][0]["pattern"] == "BB/B/BB");
  CHECK(j["edges"][0] == nlohmann::json::array({"1a", "2a"}));
  CHECK(j.dump() == export_json(g).dump());
  CHECK(j.dump().find("\"label\":\"1a\",\"row\":1,\"pattern\"") != std::string::npos);

  const SchemeGraph back = graph_from_json(nlohmann::json::parse(j.dump()));
  CHECK(back == g);
  CHECK(graph_from_json(nlohmann::json::parse(export_json(SchemeGraph{}).dump())) == SchemeGraph{});

  CHECK(code_of([] { graph_from_json(nlohmann::json::parse(R"({"nodes": []})")); }) == Errc::InvalidParameters);
  CHECK(code_of([] { graph_from_json(nlohmann::json::parse(R"({"nodes": [], "edges": [["1a"]]})")); }) ==
        Errc::InvalidParameters);
  CHECK(code_of([] {
          graph_from_json(nlohmann::json::parse(R"({"nodes": [{"label": 3}], "edges": []})"));
        }) == Errc::InvalidParameters);
}
