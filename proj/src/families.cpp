#include "qzs/catalog.hpp"

#include "qzs/error.hpp"

namespace qzs {

std::array<Rational, 4> AWParams::e() const {
  return {a + b + c + d, a * b + a * c + a * d + b * c + b * d + c * d,
          a * b * c + a * b * d + a * c * d + b * c * d, a * b * c * d};
}

namespace {

// true if v = q^{-j} for some first <= j <= last
bool in_neg_powers(const Rational& v, const Rational& q, int first, int last) {
  const Rational qi = q.inverse();
  Rational p = qi.pow(first);
  for (int j = first; j <= last; ++j, p *= qi) {
    if (v == p) return true;
  }
  return false;
}

}  // namespace

void validate(const AWParams& p, int max_degree) {
  if (p.a.is_zero()) throw Error(Errc::InvalidParameters, "Askey-Wilson needs a != 0");
  const Rational& q = p.q.q;
  const std::pair<const char*, Rational> checks[] = {
      {"ab", p.a * p.b}, {"ac", p.a * p.c}, {"ad", p.a * p.d}, {"abcd", p.a * p.b * p.c * p.d}};
  for (const auto& [name, v] : checks) {
    if (in_neg_powers(v, q, 0, max_degree)) {
      throw Error(Errc::InvalidParameters, std::string(name) + " = " + v.str() + " is a forbidden power of q");
    }
  }
}

void validate(const BigQJacobiParams& p, int max_degree) {
  const Rational& q = p.q.q;
  const std::pair<const char*, Rational> checks[] = {{"ab", p.a * p.b}, {"a", p.a}, {"c", p.c}};
  for (const auto& [name, v] : checks) {
    if (in_neg_powers(v, q, 1, max_degree + 1)) {
      throw Error(Errc::InvalidParameters, std::string(name) + " = " + v.str() + " is a forbidden power of q");
    }
  }
}

VerdeStarData askey_wilson_data(const AWParams& p) {
  validate(p);
  const Rational& q = p.q.q;
  const Rational& a = p.a;
  const Rational abcd = a * p.b * p.c * p.d;
  const Rational d1 = -a * (abcd + q * (p.b * p.c + p.b * p.d + p.c * p.d)) / (q * q);
  const Rational d2 = -(p.b + p.c + p.d + q / a);
  return make_data(q, abcd / q, 1, a, a.inverse(), d1, d2);
}

VerdeStarData cdqhahn_data(const Rational& a, const Rational& b, const Rational& c, const QValue& q) {
  return askey_wilson_data(AWParams{a, b, c, 0, q});
}

VerdeStarData big_q_jacobi_data(const BigQJacobiParams& p) {
  validate(p);
  const Rational& q = p.q.q;
  return make_data(q, q * p.a * p.b, 1, 0, 1, -q * p.a * p.c, -q * (p.a + p.c + 1));
}

VerdeStarData asc1_data(const Rational& a, const Rational& q) { return make_data(q, 0, 1, 1, 0, 0, a, a.is_zero()); }

VerdeStarData q2laguerre_data(const Rational& a, const QValue& q) {
  const Rational& s = q.half();
  return make_data(q.q, 0, 1, s, s.inverse(), a, -a);
}

const Rational& param(const Params& p, const std::string& key) {
  const auto it = p.find(key);
  if (it == p.end()) throw Error(Errc::InvalidParameters, "missing parameter '" + key + "'");
  return it->second;
}

namespace {

using Build = std::function<VerdeStarData(const QValue&, const Params&)>;

FamilySpec spec(std::string id, std::string name, std::string title, std::string node, std::vector<std::string> params,
                const char* pattern, Build build, bool sqrt_q = false, std::string constraint = {}) {
  FamilySpec s;
  s.id = std::move(id);
  s.name = std::move(name);
  s.title = std::move(title);
  s.node = std::move(node);
  s.params = std::move(params);
  s.expected = VanishingPattern::parse(pattern);
  s.build = std::move(build);
  s.needs_sqrt_q = sqrt_q;
  s.constraint = std::move(constraint);
  return s;
}

VerdeStarData aw(const QValue& q, const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
  return askey_wilson_data(AWParams{a, b, c, d, q});
}

VerdeStarData bqj(const QValue& q, const Rational& a, const Rational& b, const Rational& c) {
  return big_q_jacobi_data(BigQJacobiParams{a, b, c, q});
}

// A solved parameter that is singular or forbidden makes the constraint unusable.
VerdeStarData constrained(const std::function<VerdeStarData()>& f) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.code() == Errc::ConstraintUnsolvable) throw;
    throw Error(Errc::ConstraintUnsolvable, e.what());
  }
}

Rational solve_ratio(const Rational& num, const Rational& den) {
  if (den.is_zero()) throw Error(Errc::ConstraintUnsolvable, "constraint has no finite solution");
  // a zero solution drops to a smaller family (c = 0 turns big q-Jacobi into little q-Jacobi)
  if (num.is_zero()) throw Error(Errc::ConstraintUnsolvable, "constraint is solved by zero");
  return num / den;
}

std::vector<FamilySpec> make_nodes() {
  std::vector<FamilySpec> v;
  auto P = [](const Params& p, const char* k) -> const Rational& { return param(p, k); };
  v.push_back(spec("1a", "askey-wilson", "Askey-Wilson R_n(z;a,b,c,d|q)", "1a", {"a", "b", "c", "d"}, "BB/B/BB",
                   [P](const QValue& q, const Params& p) { return aw(q, P(p, "a"), P(p, "b"), P(p, "c"), P(p, "d")); }));
  v.push_back(spec("2a", "continuous-dual-q-hahn", "continuous dual q-Hahn R_n(z;a,b,c,0|q)", "2a", {"a", "b", "c"},
                   "Bo/B/BB", [P](const QValue& q, const Params& p) { return aw(q, P(p, "a"), P(p, "b"), P(p, "c"), 0); }));
  v.push_back(spec("2b", "big-q-jacobi", "big q-Jacobi P_n(x;a,b,c;q)", "2b", {"a", "b", "c"}, "oB/B/BB",
                   [P](const QValue& q, const Params& p) { return bqj(q, P(p, "a"), P(p, "b"), P(p, "c")); }));
  v.push_back(spec(
      "3a", "continuous-q2-jacobi", "continuous q^2-Jacobi R_n(z;a,b,q^(1/2),-q^(1/2)|q)", "3a", {"a", "b"}, "BB/o/oB",
      [P](const QValue& q, const Params& p) { return aw(q, P(p, "a"), P(p, "b"), q.half(), -q.half()); }, true));
  v.push_back(spec("3b", "symmetric-askey-wilson", "symmetric Askey-Wilson R_n(z;a,b,-a,-b|q)", "3b", {"a", "b"},
                   "BB/o/Bo", [P](const QValue& q, const Params& p) {
                     return aw(q, P(p, "a"), P(p, "b"), -P(p, "a"), -P(p, "b"));
                   }));
  v.push_back(spec("3c", "al-salam-chihara", "Al-Salam-Chihara R_n(z;a,b,0,0|q)", "3c", {"a", "b"}, "Bo/B/Bo",
                   [P](const QValue& q, const Params& p) { return aw(q, P(p, "a"), P(p, "b"), 0, 0); }));
  v.push_back(spec("3d", "big-q-laguerre", "big q-Laguerre P_n(x;a,0,c;q)", "3d", {"a", "c"}, "oo/B/BB",
                   [P](const QValue& q, const Params& p) { return bqj(q, P(p, "a"), 0, P(p, "c")); }));
  v.push_back(spec("3e", "little-q-jacobi", "little q-Jacobi P_n(x;a,b,0;q)", "3e", {"a", "b"}, "oB/B/oB",
                   [P](const QValue& q, const Params& p) { return bqj(q, P(p, "a"), P(p, "b"), 0); }));
  v.push_back(spec(
      "4a", "continuous-q2-laguerre", "continuous q^2-Laguerre R_n(z;q^(1/2),-q^(1/2),a,0|q)", "4a", {"a"}, "Bo/o/oB",
      [P](const QValue& q, const Params& p) { return aw(q, q.half(), -q.half(), P(p, "a"), 0); }, true));
  v.push_back(spec(
      "4b", "continuous-q2-ultraspherical", "continuous q^2-ultraspherical R_n(z;q^(1/2),-q^(1/2),a,-a|q)", "4b", {"a"},
      "BB/o/oo", [P](const QValue& q, const Params& p) { return aw(q, q.half(), -q.half(), P(p, "a"), -P(p, "a")); },
      true));
  v.push_back(spec("4c", "symmetric-al-salam-chihara", "symmetric Al-Salam-Chihara R_n(z;a,-a,0,0|q)", "4c", {"a"},
                   "Bo/o/Bo", [P](const QValue& q, const Params& p) { return aw(q, P(p, "a"), -P(p, "a"), 0, 0); }));
  v.push_back(spec("4d", "al-salam-carlitz-1", "Al-Salam-Carlitz I: x_k=q^k, h_k=q^-k, g_k=a(q^-k - 1)", "4d", {"a"},
                   "oo/B/Bo", [P](const QValue& q, const Params& p) { return asc1_data(P(p, "a"), q.q); }));
  v.push_back(spec("4e", "symmetric-big-q-jacobi", "symmetric big q-Jacobi P_n(x;a,a,-a;q)", "4e", {"a"}, "oB/o/Bo",
                   [P](const QValue& q, const Params& p) { return bqj(q, P(p, "a"), P(p, "a"), -P(p, "a")); }));
  v.push_back(spec("4g", "special-little-q-jacobi", "special little q-Jacobi P_n(x;a,-1,0;q)", "4g", {"a"}, "oB/o/oB",
                   [P](const QValue& q, const Params& p) { return bqj(q, P(p, "a"), -1, 0); }));
  v.push_back(spec(
      "5a", "continuous-q2-hermite", "continuous q^2-Hermite R_n(z;q^(1/2),-q^(1/2),0,0|q)", "5a", {}, "Bo/o/oo",
      [](const QValue& q, const Params&) { return aw(q, q.half(), -q.half(), 0, 0); }, true));
  v.push_back(spec("5b", "discrete-q-hermite-1", "discrete q-Hermite I: Al-Salam-Carlitz I data with a=1", "5b", {},
                   "oo/o/Bo", [](const QValue& q, const Params&) { return asc1_data(1, q.q); }));
  v.push_back(spec("5c", "degenerate-5c", "x^n (1/x;q)_n (degenerate)", "5c", {}, "oo/B/oo",
                   [](const QValue& q, const Params&) { return make_data(q.q, 0, 1, 1, 0, 0, 0, true); }));
  v.push_back(spec("6a", "monomials", "x^n (degenerate)", "6a", {}, "oo/o/oo",
                   [](const QValue& q, const Params&) { return make_data(q.q, 0, 1, 0, 0, 0, 0, true); }));
  return v;
}

std::vector<FamilySpec> make_variants() {
  std::vector<FamilySpec> v;
  auto P = [](const Params& p, const char* k) -> const Rational& { return param(p, k); };
  v.push_back(spec("3b-alt", "symmetric-askey-wilson-alt", "R_n(z;a,b,-q/a,-q/b|q)", "3b", {"a", "b"}, "BB/o/Bo",
                   [P](const QValue& q, const Params& p) {
                     return aw(q, P(p, "a"), P(p, "b"), -q.q / P(p, "a"), -q.q / P(p, "b"));
                   }));
  v.push_back(spec(
      "4a-direct", "continuous-q2-laguerre-direct",
      "x_k=q^(k+1/2)+q^(-k-1/2), h_k=q^-k, g_k=(q^(1/2)-a q^k)(q^-2k - 1)", "4a", {"a"}, "Bo/o/oB",
      [P](const QValue& q, const Params& p) { return q2laguerre_data(P(p, "a"), q); }, true));
  v.push_back(spec(
      "4b-alt", "continuous-q2-ultraspherical-alt", "R_n(z;q^(1/2),-q^(1/2),a,-q/a|q)", "4b", {"a"}, "BB/o/oo",
      [P](const QValue& q, const Params& p) { return aw(q, q.half(), -q.half(), P(p, "a"), -q.q / P(p, "a")); },
      true));
  v.push_back(spec("4e-alt", "special-big-q-jacobi", "P_n(x;-1,-1,c;q)", "4e", {"c"}, "oB/o/Bo",
                   [P](const QValue& q, const Params& p) { return bqj(q, -1, -1, P(p, "c")); }));
  v.push_back(spec("4f-q-charlier", "q-charlier", "q-Charlier: dual of the Al-Salam-Carlitz I data", "4f", {"a"},
                   "oo/B/oB", [P](const QValue& q, const Params& p) { return dual_data(asc1_data(P(p, "a"), q.q)); }));
  return v;
}

std::vector<FamilySpec> make_remark4() {
  std::vector<FamilySpec> v;
  auto P = [](const Params& p, const char* k) -> const Rational& { return param(p, k); };
  v.push_back(spec("off-1", "askey-wilson-d-zero", "Askey-Wilson with D = 0", "", {"a", "b", "c"}, "BB/o/BB",
                   [P](const QValue& q, const Params& p) {
                     return constrained([&] {
                       const Rational &a = P(p, "a"), &b = P(p, "b"), &c = P(p, "c");
                       const Rational d = solve_ratio(-(a * b * c + q.q * (a + b + c)), a * b + a * c + b * c + q.q);
                       return aw(q, a, b, c, d);
                     });
                   },
                   false, "abc+abd+acd+bcd+q(a+b+c+d)=0, solved for d"));
  v.push_back(spec("off-2", "askey-wilson-g1-zero", "Askey-Wilson with G1 = 0", "", {"a", "b", "c"}, "BB/B/oB",
                   [P](const QValue& q, const Params& p) {
                     return constrained([&] {
                       const Rational &a = P(p, "a"), &b = P(p, "b"), &c = P(p, "c");
                       const Rational& Q = q.q;
                       const Rational d =
                           solve_ratio(-(Q * (a * b + a * c + b * c) + Q * Q), a * b * c + Q * (a + b + c));
                       return aw(q, a, b, c, d);
                     });
                   },
                   false, "abcd+q(ab+ac+ad+bc+bd+cd)+q^2=0, solved for d"));
  FamilySpec r3 = spec("off-3", "askey-wilson-g2-zero", "Askey-Wilson with G2 = 0", "", {"a", "b", "c", "d"},
                       "BB/B/Bo",
                       [P](const QValue&, const Params& p) {
                         return constrained([&] {
                           AWParams w{P(p, "a"), P(p, "b"), P(p, "c"), P(p, "d"), QValue::of(2)};
                           const auto e = w.e();
                           w.q = QValue::of(solve_ratio(-e[0] * e[3], e[2]));
                           return askey_wilson_data(w);
                         });
                       },
                       false, "abcd(a+b+c+d)+q(abc+abd+acd+bcd)=0, solved for q");
  r3.derives_q = true;
  v.push_back(r3);
  v.push_back(spec("off-4", "askey-wilson-g-zero", "Askey-Wilson R_n(z;a,-q/a,c,-c|q) with G1 = G2 = 0", "",
                   {"a", "c"}, "BB/B/oo",
                   [P](const QValue& q, const Params& p) {
                     return constrained([&] { return aw(q, P(p, "a"), -q.q / P(p, "a"), P(p, "c"), -P(p, "c")); });
                   },
                   false, "both previous constraints: b = -q/a, d = -c"));
  v.push_back(spec("off-5", "continuous-dual-q-hahn-d-zero", "continuous dual q-Hahn with D = 0", "", {"a", "b"},
                   "Bo/o/BB",
                   [P](const QValue& q, const Params& p) {
                     return constrained([&] {
                       const Rational &a = P(p, "a"), &b = P(p, "b");
                       return aw(q, a, b, solve_ratio(-q.q * (a + b), a * b + q.q), 0);
                     });
                   },
                   false, "abc+q(a+b+c)=0, solved for c"));
  v.push_back(spec("off-6", "continuous-dual-q-hahn-g1-zero", "continuous dual q-Hahn with G1 = 0", "", {"a", "b"},
                   "Bo/B/oB",
                   [P](const QValue& q, const Params& p) {
                     return constrained([&] {
                       const Rational &a = P(p, "a"), &b = P(p, "b");
                       return aw(q, a, b, solve_ratio(-(a * b + q.q), a + b), 0);
                     });
                   },
                   false, "ab+ac+bc+q=0, solved for c"));
  v.push_back(spec("off-7", "big-q-jacobi-d-zero", "big q-Jacobi with D = 0", "", {"a", "b"}, "oB/o/BB",
                   [P](const QValue& q, const Params& p) {
                     return constrained([&] {
                       const Rational &a = P(p, "a"), &b = P(p, "b");
                       return bqj(q, a, b, solve_ratio(-a * (1 + b), 1 + a));
                     });
                   },
                   false, "a+c+a(b+c)=0, solved for c"));
  v.push_back(spec("off-8", "big-q-jacobi-g2-zero", "big q-Jacobi with G2 = 0", "", {"a", "b"}, "oB/B/Bo",
                   [P](const QValue& q, const Params& p) {
                     return constrained([&] {
                       const Rational &a = P(p, "a"), &b = P(p, "b");
                       return bqj(q, a, b, solve_ratio(-b * (1 + a), 1 + b));
                     });
                   },
                   false, "b+c+b(a+c)=0, solved for c"));
  v.push_back(spec("off-9", "al-salam-chihara-g1-zero", "Al-Salam-Chihara R_n(z;a,-q/a,0,0|q)", "", {"a"}, "Bo/B/oo",
                   [P](const QValue& q, const Params& p) {
                     return constrained([&] { return aw(q, P(p, "a"), -q.q / P(p, "a"), 0, 0); });
                   },
                   false, "ab+q=0, solved for b"));
  v.push_back(spec("off-10", "special-little-q-jacobi-b", "special little q-Jacobi P_n(x;-1,b,0;q)", "", {"b"},
                   "oB/B/oo",
                   [P](const QValue& q, const Params& p) { return constrained([&] { return bqj(q, -1, P(p, "b"), 0); }); }));
  v.push_back(spec("off-11", "big-q-laguerre-d-zero", "big q-Laguerre with a+c+ac=0", "", {"a"}, "oo/o/BB",
                   [P](const QValue& q, const Params& p) {
                     return constrained([&] {
                       const Rational& a = P(p, "a");
                       return bqj(q, a, 0, solve_ratio(-a, 1 + a));
                     });
                   },
                   false, "a+c+ac=0, solved for c"));
  v.push_back(spec("off-12", "dual-continuous-q2-hermite", "dual continuous q^2-Hermite P_n(x;-1,-1,0;q)", "", {},
                   "oB/o/oo", [](const QValue& q, const Params&) { return bqj(q, -1, -1, 0); }));
  v.push_back(spec("off-13", "special-q-charlier", "special q-Charlier: dual of the discrete q-Hermite I data", "", {},
                   "oo/o/oB", [](const QValue& q, const Params&) { return make_data(q.q, 1, 0, 0, 1, 0, 1); }));
  return v;
}

}  // namespace

const std::vector<FamilySpec>& node_families() {
  static const std::vector<FamilySpec> v = make_nodes();
  return v;
}

const std::vector<FamilySpec>& variant_families() {
  static const std::vector<FamilySpec> v = make_variants();
  return v;
}

const std::vector<FamilySpec>& off_scheme_families() {
  static const std::vector<FamilySpec> v = make_remark4();
  return v;
}

const FamilySpec& find_family(std::string_view key) {
  for (const auto* list : {&node_families(), &variant_families(), &off_scheme_families()}) {
    for (const auto& s : *list) {
      if (s.id == key || s.name == key) return s;
    }
  }
  throw Error(Errc::UnknownFamily, "no family '" + std::string(key) + "'");
}

VerdeStarData family_data(const FamilySpec& spec, const QValue& q, const Params& p) { return spec.build(q, p); }

VerdeStarData off_scheme_family(int index, const QValue& q, const Params& p) {
  const auto& list = off_scheme_families();
  if (index < 1 || index > static_cast<int>(list.size())) {
    throw Error(Errc::UnknownFamily, "off-scheme index " + std::to_string(index));
  }
  return list[static_cast<std::size_t>(index - 1)].build(q, p);
}

FamilyDraw random_family_draw(const FamilySpec& spec, std::mt19937_64& rng) {
  for (;;) {
    try {
      // wide range so that draws avoid the special constraints
      const Rational r = random_rational(rng, kFamilyDrawBound);
      const QValue q = spec.needs_sqrt_q ? QValue::from_sqrt(r) : QValue::of(r);
      Params p;
      for (const auto& name : spec.params) p[name] = random_rational(rng, kFamilyDrawBound);
      VerdeStarData d = spec.build(q, p);
      return FamilyDraw{spec.derives_q ? QValue::of(d.q) : q, std::move(p), std::move(d)};
    } catch (const Error&) {
    }
  }
}

nlohmann::ordered_json to_json(const FamilySpec& spec) {
  nlohmann::ordered_json j;
  j["id"] = spec.id;
  j["name"] = spec.name;
  j["title"] = spec.title;
  j["node"] = spec.node.empty() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(spec.node);
  j["params"] = spec.params;
  j["needs_sqrt_q"] = spec.needs_sqrt_q;
  j["derives_q"] = spec.derives_q;
  j["constraint"] = spec.constraint;
  j["expected_pattern"] = spec.expected.str();
  return j;
}

}  // namespace qzs
