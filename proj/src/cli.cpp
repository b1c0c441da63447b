#include "qzs/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>

#include <CLI11.hpp>
#include <json.hpp>

#include "qzs/catalog.hpp"
#include "qzs/classical.hpp"
#include "qzs/error.hpp"
#include "qzs/scheme.hpp"
#include "qzs/suites.hpp"
#include "qzs/symmetry.hpp"

namespace qzs::cli {

namespace {

using nlohmann::ordered_json;

struct Options {
  std::string family;
  std::string q;
  std::string sqrt_q;
  std::string params;
  std::string id;
  std::string data;
  std::string format;
  long degree = -1;
  std::uint64_t seed = kDefaultSeed;
};

// Usage errors detected after CLI11 parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void add_common(CLI::App* sub, Options& o, bool with_id = false) {
  sub->add_option("--family", o.family, "family id or name");
  sub->add_option("--q", o.q, "base q as p/q");
  sub->add_option("--sqrt-q", o.sqrt_q, "q^(1/2) as p/q; q is its square");
  sub->add_option("--params", o.params, "k=v,... with rational values");
  sub->add_option("--degree", o.degree, "largest degree or index checked");
  sub->add_option("--seed", o.seed, "seed for random parameter draws");
  sub->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text", "dot"}));
  if (with_id) sub->add_option("--id", o.id, "identity, transform or pair id");
}

Params parse_params(const std::string& text) {
  Params p;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string::npos) end = text.size();
    const std::string item = text.substr(pos, end - pos);
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("--params: expected k=v, got '" + item + "'");
    p[item.substr(0, eq)] = Rational::parse(item.substr(eq + 1));
    pos = end + 1;
  }
  return p;
}

std::optional<QValue> parse_q(const Options& o) {
  if (!o.q.empty() && !o.sqrt_q.empty()) throw UsageError("--q and --sqrt-q are exclusive");
  if (!o.sqrt_q.empty()) return QValue::from_sqrt(Rational::parse(o.sqrt_q));
  if (!o.q.empty()) return QValue::of(Rational::parse(o.q));
  return std::nullopt;
}

ordered_json params_json(const Params& p) {
  ordered_json j = ordered_json::object();
  for (const auto& [k, v] : p) j[k] = v.str();
  return j;
}

ordered_json q_json(const QValue& q) {
  ordered_json j;
  j["q"] = q.q.str();
  j["sqrt_q"] = q.sqrt_q ? ordered_json(q.sqrt_q->str()) : ordered_json(nullptr);
  return j;
}

struct Resolved {
  const FamilySpec* spec = nullptr;
  QValue q;
  Params params;
  VerdeStarData data;
  bool random = false;
};

// Explicit --q/--sqrt-q and --params, or a seeded draw when both are absent.
Resolved resolve_family(const Options& o, const std::string& fallback = {}) {
  const std::string key = o.family.empty() ? fallback : o.family;
  if (key.empty()) throw UsageError("--family is required");
  Resolved r;
  r.spec = &find_family(key);
  std::optional<QValue> q = parse_q(o);
  if (!q && o.params.empty()) {
    std::mt19937_64 rng(o.seed);
    FamilyDraw fd = random_family_draw(*r.spec, rng);
    r.q = fd.q;
    r.params = std::move(fd.params);
    r.data = std::move(fd.data);
    r.random = true;
    return r;
  }
  r.params = parse_params(o.params);
  if (!q) {
    if (!r.spec->derives_q) throw UsageError("--q or --sqrt-q is required with --params");
    q = QValue::of(2);  // ignored: the constraint fixes q
  }
  if (r.spec->needs_sqrt_q && !q->sqrt_q) throw UsageError("family " + r.spec->id + " needs --sqrt-q");
  r.data = family_data(*r.spec, *q, r.params);
  r.q = r.spec->derives_q ? QValue::of(r.data.q) : *q;
  return r;
}

ordered_json family_json(const Resolved& r) {
  ordered_json j;
  j["family"] = r.spec->id;
  j["q"] = r.q.q.str();
  if (r.q.sqrt_q) j["sqrt_q"] = r.q.sqrt_q->str();
  j["params"] = params_json(r.params);
  j["random_draw"] = r.random;
  return j;
}

AWParams aw_params(const Resolved& r) {
  if (r.spec->id != "1a") throw UsageError("this suite needs --family askey-wilson");
  const Params& p = r.params;
  return AWParams{param(p, "a"), param(p, "b"), param(p, "c"), param(p, "d"), r.q};
}

BigQJacobiParams bqj_params(const Resolved& r) {
  if (r.spec->id != "2b") throw UsageError("this suite needs --family big-q-jacobi");
  const Params& p = r.params;
  return BigQJacobiParams{param(p, "a"), param(p, "b"), param(p, "c"), r.q};
}

long degree_or(const Options& o, long fallback) {
  if (o.degree < 0) return fallback;
  if (o.degree > 40) throw UsageError("--degree must be at most 40");
  return o.degree;
}

const std::vector<Rational>& sample_points() {
  static const std::vector<Rational> pts{3, Rational(-5, 2), Rational(7, 3), Rational(-11, 4), Rational(13, 5)};
  return pts;
}

int emit_report(const Report& rep, ordered_json meta, const Options& o, std::ostream& out) {
  if (o.format == "text") {
    out << (rep.passed() ? "PASS " : "FAIL ") << rep.name << " (" << rep.checks << " checks)";
    if (rep.first_failure) out << ": " << *rep.first_failure;
    out << '\n';
    for (const auto& n : rep.notes) out << "  note: " << n << '\n';
  } else {
    meta["report"] = rep.to_json();
    out << meta.dump(2) << '\n';
  }
  return rep.passed() ? 0 : 1;
}

int do_classify(const Options& o, std::ostream& out) {
  ordered_json j;
  VerdeStarData d;
  if (!o.data.empty()) {
    std::ifstream in(o.data);
    if (!in) throw UsageError("--data: cannot read '" + o.data + "'");
    try {
      d = data_from_json(nlohmann::json::parse(in));
    } catch (const nlohmann::json::exception& e) {
      throw UsageError(std::string("--data: ") + e.what());
    }
    j["data"] = to_json(d);
  } else {
    const Resolved r = resolve_family(o);
    d = r.data;
    j = family_json(r);
  }
  const Classification c = classify(d);
  const ZhedanovCoefficients k = closed_form_coeffs(d);
  if (o.format == "text") {
    out << c.pattern.str() << ' ';
    if (c.nodes.empty()) out << "off-scheme";
    for (std::size_t i = 0; i < c.nodes.size(); ++i) out << (i ? "," : "") << c.nodes[i];
    out << '\n';
    return 0;
  }
  j["pattern"] = c.pattern.str();
  j["nodes"] = c.nodes;
  j["coefficients"] = to_json(k);
  j["canonical_class"] = to_json(canonical_class(k));
  out << j.dump(2) << '\n';
  return 0;
}

int do_verify(const std::string& suite, const Options& o, std::ostream& out) {
  if (suite == "scheme") {
    Report rep("scheme");
    const SchemeGraph g = build_scheme();
    rep.merge(monotonicity_check(g));
    rep.merge(duality_check(g));
    ordered_json meta;
    meta["suite"] = suite;
    meta["reflection"] = reflection_report(g).to_json();
    return emit_report(rep, meta, o, out);
  }
  if (suite == "identity" || suite == "quadratic") {
    if (o.id.empty()) throw UsageError("--id is required");
    const std::optional<QValue> q = parse_q(o);
    if (!q) throw UsageError(suite == "quadratic" ? "--sqrt-q is required" : "--q or --sqrt-q is required");
    const Params p = parse_params(o.params);
    ordered_json meta{{"suite", suite}, {"id", o.id}};
    meta["q"] = q_json(*q);
    meta["params"] = params_json(p);
    const Report rep = suite == "identity" ? verify_classical_identity(o.id, *q, p, sample_points(), degree_or(o, 6))
                                           : quadratic_transform_check(o.id, *q, p, sample_points(), degree_or(o, 4));
    return emit_report(rep, meta, o, out);
  }
  if (suite == "duality" && !o.id.empty()) {
    const std::optional<QValue> q = parse_q(o);
    if (!q) throw UsageError("--q or --sqrt-q is required");
    const Params p = parse_params(o.params);
    ordered_json meta{{"suite", suite}, {"id", o.id}};
    meta["q"] = q_json(*q);
    meta["params"] = params_json(p);
    const long n = degree_or(o, 4);
    return emit_report(duality_pair_check(o.id, *q, p, n, n), meta, o, out);
  }
  if (suite == "d4") {
    const Resolved r = resolve_family(o, "askey-wilson");
    const AWParams w = aw_params(r);
    const Rational prod = w.a * w.b * w.c * w.d / w.q.q;
    Rational root;
    if (!rational_sqrt(prod, root)) throw Error(Errc::NotASquare, "abcd/q = " + prod.str() + " is not a rational square");
    std::vector<D4Element> elems;
    for (const auto& g : d4_group()) {
      try {
        d4_action(g, w);
        elems.push_back(g);
      } catch (const Error& e) {
        if (e.code() != Errc::FlipOfZero) throw;
      }
    }
    Report rep("d4");
    rep.merge(d4_invariance_check(w, root, elems));
    rep.merge(dual_parameter_compat_check(w, root));
    ordered_json meta = family_json(r);
    meta["suite"] = suite;
    return emit_report(rep, meta, o, out);
  }

  const Resolved r = resolve_family(o);
  ordered_json meta = family_json(r);
  meta["suite"] = suite;
  Report rep(suite);
  if (suite == "relations") {
    rep = relations_check(r.data, degree_or(o, 10));
  } else if (suite == "casimir") {
    rep = casimir_check(r.data, degree_or(o, 8), 6);
  } else if (suite == "eigen") {
    rep = eigen_check(r.data, degree_or(o, 10));
    const long n = std::min<long>(degree_or(o, 6), 6);
    if (r.spec->id == "1a") rep.merge(aw_operator_agreement(aw_params(r), n, sample_points()));
    if (r.spec->id == "2b") rep.merge(bigqj_operator_agreement(bqj_params(r), n, sample_points()));
  } else if (suite == "recurrence") {
    if (r.spec->id == "1a") {
      rep = aw_recurrence_check(aw_params(r), degree_or(o, 6), sample_points());
    } else {
      rep = bigqj_recurrence_check(bqj_params(r), degree_or(o, 6), sample_points());
    }
  } else if (suite == "duality") {
    const long n = degree_or(o, 6);
    rep = duality_grid_check(r.data, n, n);
  }
  return emit_report(rep, meta, o, out);
}

void list_catalog(const Options& o, std::ostream& out) {
  const std::vector<std::pair<const char*, const std::vector<FamilySpec>*>> groups{
      {"nodes", &node_families()}, {"variants", &variant_families()}, {"off-scheme", &off_scheme_families()}};
  if (o.format == "text") {
    for (const auto& [name, list] : groups) {
      for (const auto& s : *list) {
        out << s.id << '\t' << s.name << '\t' << s.expected.str() << '\t' << (s.node.empty() ? "-" : s.node) << '\t'
            << s.title << '\n';
      }
    }
    return;
  }
  ordered_json j;
  for (const auto& [name, list] : groups) {
    j[name] = ordered_json::array();
    for (const auto& s : *list) j[name].push_back(to_json(s));
  }
  out << j.dump(2) << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact q-Zhedanov scheme engine", "qzs"};
  app.require_subcommand(1);
  Options o;

  CLI::App* classify_cmd = app.add_subcommand("classify", "vanishing pattern and scheme node of a family");
  add_common(classify_cmd, o);
  classify_cmd->add_option("--data", o.data, "JSON file with Verde-Star data");

  CLI::App* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd->require_subcommand(1);
  const std::vector<std::string> suites{"relations", "eigen", "casimir",   "recurrence", "duality",
                                        "d4",        "quadratic", "identity", "scheme"};
  std::string suite;
  for (const auto& s : suites) {
    CLI::App* sub = verify_cmd->add_subcommand(s);
    add_common(sub, o, s == "identity" || s == "quadratic" || s == "duality");
    sub->callback([&suite, s] { suite = s; });
  }

  CLI::App* scheme_cmd = app.add_subcommand("scheme", "the scheme graph");
  scheme_cmd->require_subcommand(1);
  CLI::App* export_cmd = scheme_cmd->add_subcommand("export", "print the graph as DOT or JSON");
  export_cmd->add_option("--format", o.format, "dot or json")->check(CLI::IsMember({"dot", "json"}));
  CLI::App* check_cmd = scheme_cmd->add_subcommand("check", "recompute node patterns and check the arrows");
  check_cmd->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));

  CLI::App* catalog_cmd = app.add_subcommand("catalog", "list or show families");
  catalog_cmd->require_subcommand(1);
  CLI::App* list_cmd = catalog_cmd->add_subcommand("list", "all families");
  list_cmd->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  CLI::App* show_cmd = catalog_cmd->add_subcommand("show", "one family");
  std::string show_key;
  show_cmd->add_option("family", show_key, "family id or name")->required();

  try {
    std::vector<const char*> argv{"qzs"};
    for (const auto& a : args) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (classify_cmd->parsed()) {
      if (o.format == "dot") throw UsageError("--format dot is only valid for scheme export");
      return do_classify(o, out);
    }
    if (verify_cmd->parsed()) {
      if (o.format == "dot") throw UsageError("--format dot is only valid for scheme export");
      return do_verify(suite, o, out);
    }
    if (export_cmd->parsed()) {
      const SchemeGraph g = scheme_transcription();
      if (o.format == "json") {
        out << export_json(g).dump(2) << '\n';
      } else {
        out << export_dot(g);
      }
      return 0;
    }
    if (check_cmd->parsed()) {
      return do_verify("scheme", o, out);
    }
    if (list_cmd->parsed()) {
      list_catalog(o, out);
      return 0;
    }
    if (show_cmd->parsed()) {
      out << to_json(find_family(show_key)).dump(2) << '\n';
      return 0;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace qzs::cli
