#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qzs/catalog.hpp"
#include "qzs/cli.hpp"
#include "qzs/scheme.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = qzs::cli::run(args, out, err);
  return Result{code, out.str(), err.str()};
}

nlohmann::json json_of(const Result& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST_CASE("classify a big q-Jacobi point") {
  const Result r = call({"classify", "--family", "big-q-jacobi", "--q", "1/2", "--params", "a=3,b=5,c=7"});
  REQUIRE(r.code == 0);
  CHECK(r.err.empty());
  const auto j = json_of(r);
  CHECK(j["pattern"] == "oB/B/BB");
  CHECK(j["nodes"] == nlohmann::json::array({"2b"}));
  CHECK(j["family"] == "2b");
  CHECK(j["random_draw"] == false);
  CHECK(j["coefficients"]["C1"] == "0");

  const Result t = call({"classify", "--family", "2b", "--q", "1/2", "--params", "a=3,b=5,c=7", "--format", "text"});
  CHECK(t.code == 0);
  CHECK(t.out == "oB/B/BB 2b\n");
}

TEST_CASE("classify off-scheme and sqrt-q families") {
  const Result r = call({"classify", "--family", "off-9", "--q", "1/2", "--params", "a=3", "--format", "text"});
  CHECK(r.code == 0);
  CHECK(r.out == "Bo/B/oo off-scheme\n");

  const Result s = call({"classify", "--family", "3a", "--sqrt-q", "1/3", "--params", "a=2,b=5", "--format", "text"});
  CHECK(s.code == 0);
  CHECK(s.out == "BB/o/oB 3a\n");
  CHECK(call({"classify", "--family", "3a", "--q", "1/9", "--params", "a=2,b=5"}).code == 2);
}

TEST_CASE("classify reads data files") {
  const std::string path = "qzs_cli_test_data.json";
  const qzs::VerdeStarData d = qzs::big_q_jacobi_data(qzs::BigQJacobiParams{3, 5, 7, qzs::QValue::of(qzs::Rational(1, 2))});
  {
    std::ofstream f(path);
    f << qzs::to_json(d).dump();
  }
  const Result r = call({"classify", "--data", path, "--format", "text"});
  CHECK(r.code == 0);
  CHECK(r.out == "oB/B/BB 2b\n");
  std::remove(path.c_str());
  CHECK(call({"classify", "--data", "/nonexistent/qzs.json"}).code == 2);
}

TEST_CASE("verification suites") {
  const Result r = call({"verify", "relations", "--family", "askey-wilson", "--q", "1/2", "--params", "a=2,b=3,c=5,d=7",
                         "--degree", "8"});
  REQUIRE(r.code == 0);
  const auto j = json_of(r);
  CHECK(j["report"]["passed"] == true);
  CHECK(j["report"]["first_failure"].is_null());
  CHECK(j["suite"] == "relations");

  const std::vector<std::vector<std::string>> ok{
      {"verify", "casimir", "--family", "3c", "--degree", "4"},
      {"verify", "eigen", "--family", "askey-wilson", "--q", "1/2", "--params", "a=2,b=3,c=5,d=7", "--degree", "5"},
      {"verify", "eigen", "--family", "big-q-jacobi", "--q", "1/2", "--params", "a=3,b=5,c=7", "--degree", "4"},
      {"verify", "recurrence", "--family", "big-q-jacobi", "--q", "1/2", "--params", "a=3,b=5,c=7"},
      {"verify", "duality", "--family", "2a", "--degree", "3"},
      {"verify", "duality", "--id", "askey-wilson", "--q", "1/2", "--params", "a=2,b=3,c=5,d=3/5,s=6"},
      // dual abcd is a^2 q, so a = 2 would hit 1/q
      {"verify", "d4", "--q", "1/2", "--params", "a=3,b=2,c=5,d=3/5"},
      {"verify", "identity", "--id", "aw-parity", "--q", "1/2", "--params", "a=2,b=3,c=5,d=7"},
      {"verify", "quadratic", "--id", "q2-hermite", "--sqrt-q", "1/3", "--degree", "3"},
  };
  for (const auto& args : ok) {
    const Result v = call(args);
    INFO(args[1] << ": " << v.err << v.out);
    CHECK(v.code == 0);
  }
}

TEST_CASE("scheme verbs") {
  const Result dot = call({"scheme", "export", "--format", "dot"});
  CHECK(dot.code == 0);
  CHECK(dot.out == qzs::export_dot(qzs::scheme_transcription()));
  CHECK(call({"scheme", "export"}).out == dot.out);

  const Result js = call({"scheme", "export", "--format", "json"});
  CHECK(js.code == 0);
  CHECK(qzs::graph_from_json(json_of(js)) == qzs::scheme_transcription());

  const Result chk = call({"scheme", "check"});
  CHECK(chk.code == 0);
  const auto j = json_of(chk);
  CHECK(j["report"]["passed"] == true);
  CHECK(j["reflection"]["failures"] == 10);
  CHECK(call({"verify", "scheme", "--format", "text"}).out.rfind("PASS scheme", 0) == 0);
}

TEST_CASE("catalog verbs") {
  const Result list = call({"catalog", "list"});
  CHECK(list.code == 0);
  const auto j = json_of(list);
  CHECK(j["nodes"].size() == 18);
  CHECK(j["off-scheme"].size() == 13);

  const Result show = call({"catalog", "show", "al-salam-chihara"});
  CHECK(show.code == 0);
  CHECK(json_of(show)["node"] == "3c");
  CHECK(call({"catalog", "show", "nope"}).code == 2);
}

TEST_CASE("usage and parameter errors exit with 2") {
  const std::vector<std::vector<std::string>> bad{
      {},
      {"frobnicate"},
      {"verify"},
      {"classify", "--family"},
      {"classify", "--family", "nope"},
      {"classify", "--family", "askey-wilson", "--q", "1/2", "--params", "a=2"},
      {"classify", "--family", "askey-wilson", "--q", "1/x", "--params", "a=2,b=3,c=5,d=7"},
      {"classify", "--family", "askey-wilson", "--params", "a=2,b=3,c=5,d=7"},
      {"classify", "--family", "askey-wilson", "--q", "1/2", "--sqrt-q", "1/3", "--params", "a=2,b=3,c=5,d=7"},
      {"classify", "--family", "askey-wilson", "--q", "1/2", "--params", "a2"},
      {"classify", "--family", "2b", "--format", "xml"},
      {"classify", "--family", "2b", "--format", "dot"},
      {"verify", "relations", "--family", "2b", "--degree", "41"},
      {"verify", "identity", "--q", "1/2"},
      {"verify", "identity", "--id", "no-such-id", "--q", "1/2"},
      {"verify", "d4", "--q", "1/2", "--params", "a=2,b=3,c=5,d=7"},
      {"verify", "recurrence", "--family", "3c"},
      {"scheme", "export", "--format", "text"},
  };
  for (const auto& args : bad) {
    const Result r = call(args);
    std::string joined;
    for (const auto& a : args) joined += a + " ";
    INFO(joined);
    CHECK(r.code == 2);
    CHECK(!r.err.empty());
  }
  const Result flag = call({"classify", "--family", "2b", "--format", "xml"});
  CHECK(flag.err.find("--format") != std::string::npos);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> drawn{"classify", "--family", "askey-wilson"};
  const Result a = call(drawn);
  CHECK(a.code == 0);
  CHECK(json_of(a)["random_draw"] == true);
  CHECK(call(drawn).out == a.out);

  std::vector<std::string> seeded = drawn;
  seeded.insert(seeded.end(), {"--seed", std::to_string(qzs::cli::kDefaultSeed)});
  CHECK(call(seeded).out == a.out);
  seeded.back() = "7";
  CHECK(call(seeded).out != a.out);

  CHECK(call({"catalog", "list"}).out == call({"catalog", "list"}).out);
  CHECK(call({"scheme", "check"}).out == call({"scheme", "check"}).out);
}
