#include "qzs/zhedanov.hpp"

#include <numeric>

#include "qzs/error.hpp"

namespace qzs {

namespace {

void strip(CoeffSequence& f) {
  while (!f.empty() && f.back().is_zero()) f.pop_back();
}

}  // namespace

CoeffSequence delta(long m) {
  CoeffSequence f(static_cast<std::size_t>(m + 1));
  f.back() = 1;
  return f;
}

CoeffSequence seq_add(const CoeffSequence& a, const CoeffSequence& b) {
  CoeffSequence r = a.size() >= b.size() ? a : b;
  const CoeffSequence& s = a.size() >= b.size() ? b : a;
  for (std::size_t i = 0; i < s.size(); ++i) r[i] += s[i];
  strip(r);
  return r;
}

CoeffSequence seq_sub(const CoeffSequence& a, const CoeffSequence& b) { return seq_add(a, seq_scale(-1, b)); }

CoeffSequence seq_scale(const Rational& c, const CoeffSequence& a) {
  if (c.is_zero()) return {};
  CoeffSequence r = a;
  for (auto& v : r) v *= c;
  strip(r);
  return r;
}

CoeffSequence k1_apply(const VerdeStarData& d, const CoeffSequence& f) {
  CoeffSequence r(f.size());
  for (std::size_t n = 0; n < f.size(); ++n) {
    const long k = static_cast<long>(n);
    r[n] = eigen_h(d, k) * f[n];
    if (n + 1 < f.size()) r[n] += coupling_g(d, k + 1) * f[n + 1];
  }
  strip(r);
  return r;
}

CoeffSequence k2_apply(const VerdeStarData& d, const CoeffSequence& f) {
  if (f.empty()) return {};
  CoeffSequence r(f.size() + 1);
  for (std::size_t n = 0; n < r.size(); ++n) {
    if (n < f.size()) r[n] = node_x(d, static_cast<long>(n)) * f[n];
    if (n > 0) r[n] += f[n - 1];
  }
  strip(r);
  return r;
}

ZhedanovCoefficients closed_form_coeffs(const VerdeStarData& d) {
  const Rational& q = d.q;
  const Rational qi = q.inverse();
  const Rational qq = q + qi;
  const Rational s2 = q - 2 + qi;  // (q^{1/2} - q^{-1/2})^2
  const Rational qm = q - qi;
  const Rational &a1 = d.a1, &a2 = d.a2, &b1 = d.b1, &b2 = d.b2, &d1 = d.d1, &d2 = d.d2;

  ZhedanovCoefficients c;
  c.C1 = qm * qm * b1 * b2;
  c.C2 = qm * qm * a1 * a2;
  c.D = -s2 * (a1 * b1 * qi - a1 * b2 - a2 * b1 + q * a2 * b2 + d1 + d2);
  c.G1 = qm * ((1 - qi) * b1 * d2 + (q - 1) * b2 * d1);
  c.G2 = qm * ((1 - qi) * a1 * d2 + (q - 1) * a2 * d1);
  const Rational A = a1 * a1 * qi + qq * a1 * a2 + q * a2 * a2;
  const Rational B = b1 * b1 * qi + qq * b1 * b2 + q * b2 * b2;
  c.omega = s2 * (A * B + (d1 * d1 + d2 * d2 - qq * d1 * d2) + qq * (d1 + d2) * (a1 * b2 + a2 * b1) +
                  2 * (d1 + d2) * (a1 * b1 * qi + q * a2 * b2));
  return c;
}

ZhedanovCoefficients closed_form_coeffs_sqrt(const VerdeStarData& d, const Rational& s) {
  if (s * s != d.q) throw Error(Errc::NotASquare, s.str() + " is not a square root of q = " + d.q.str());
  const Rational si = s.inverse();
  const Rational qm = d.q - d.q.inverse();
  const Rational sm = s - si;
  ZhedanovCoefficients c = closed_form_coeffs(d);  // C1, C2, omega carry no half powers
  c.D = -sm * sm * ((si * d.a1 - s * d.a2) * (si * d.b1 - s * d.b2) + d.d1 + d.d2);
  c.G1 = sm * qm * (si * d.b1 * d.d2 + s * d.b2 * d.d1);
  c.G2 = sm * qm * (si * d.a1 * d.d2 + s * d.a2 * d.d1);
  return c;
}

namespace {

struct Words {
  const VerdeStarData& d;
  CoeffSequence k1(const CoeffSequence& f) const { return k1_apply(d, f); }
  CoeffSequence k2(const CoeffSequence& f) const { return k2_apply(d, f); }
};

// (q+1/q) K2K1K2 f - K2K2K1 f - K1K2K2 f
CoeffSequence cubic1(const VerdeStarData& d, const CoeffSequence& f) {
  const Words w{d};
  const Rational qq = d.q + d.q.inverse();
  const CoeffSequence k2f = w.k2(f);
  CoeffSequence r = seq_scale(qq, w.k2(w.k1(k2f)));
  r = seq_sub(r, w.k2(w.k2(w.k1(f))));
  return seq_sub(r, w.k1(w.k2(k2f)));
}

// (q+1/q) K1K2K1 f - K1K1K2 f - K2K1K1 f
CoeffSequence cubic2(const VerdeStarData& d, const CoeffSequence& f) {
  const Words w{d};
  const Rational qq = d.q + d.q.inverse();
  const CoeffSequence k1f = w.k1(f);
  CoeffSequence r = seq_scale(qq, w.k1(w.k2(k1f)));
  r = seq_sub(r, w.k1(w.k1(w.k2(f))));
  return seq_sub(r, w.k2(w.k1(k1f)));
}

Rational at(const CoeffSequence& f, std::size_t i) { return i < f.size() ? f[i] : Rational(0); }

// Incremental exact row reduction for a small overdetermined system.
class Solver {
 public:
  explicit Solver(std::size_t unknowns) : n_(unknowns) {}

  void add(std::vector<Rational> row) {  // n_ coefficients then the right side
    for (const auto& [piv, b] : basis_) {
      if (row[piv].is_zero()) continue;
      const Rational f = row[piv];
      for (std::size_t j = 0; j <= n_; ++j) row[j] -= f * b[j];
    }
    std::size_t piv = 0;
    while (piv < n_ && row[piv].is_zero()) ++piv;
    if (piv == n_) {
      if (!row[n_].is_zero()) throw Error(Errc::InconsistentAlgebra, "relations admit no constant solution");
      return;
    }
    const Rational inv = row[piv].inverse();
    for (auto& v : row) v *= inv;
    for (auto& [p, b] : basis_) {
      if (b[piv].is_zero()) continue;
      const Rational f = b[piv];
      for (std::size_t j = 0; j <= n_; ++j) b[j] -= f * row[j];
    }
    basis_.emplace_back(piv, std::move(row));
  }

  std::vector<Rational> solve() const {
    if (basis_.size() != n_) throw Error(Errc::InconsistentAlgebra, "relations do not determine the constants");
    std::vector<Rational> x(n_);
    for (const auto& [p, b] : basis_) x[p] = b[n_];
    return x;
  }

 private:
  std::size_t n_;
  std::vector<std::pair<std::size_t, std::vector<Rational>>> basis_;
};

}  // namespace

ZhedanovCoefficients extract_coeffs(const VerdeStarData& d, long N) {
  if (N < 4) throw Error(Errc::InvalidParameters, "extract_coeffs needs N >= 4");
  // unknowns: C1 C2 D G1 G2
  Solver solver(5);
  for (long m = 0; m <= N; ++m) {
    const CoeffSequence f = delta(m);
    const CoeffSequence k1f = k1_apply(d, f);
    const CoeffSequence k2f = k2_apply(d, f);
    const CoeffSequence l1 = cubic1(d, f);
    const CoeffSequence l2 = cubic2(d, f);
    const std::size_t len = std::max({l1.size(), l2.size(), k1f.size(), k2f.size(), f.size()});
    for (std::size_t n = 0; n < len; ++n) {
      solver.add({at(k1f, n), 0, at(k2f, n), at(f, n), 0, at(l1, n)});
      solver.add({0, at(k2f, n), at(k1f, n), 0, at(f, n), at(l2, n)});
    }
  }
  const std::vector<Rational> x = solver.solve();
  ZhedanovCoefficients c{x[0], x[1], x[2], x[3], x[4], 0};
  const CoeffSequence q0 = casimir_apply(d, c, delta(0));
  c.omega = at(q0, 0);
  for (long m = 0; m <= N; ++m) {
    if (!seq_sub(casimir_apply(d, c, delta(m)), seq_scale(c.omega, delta(m))).empty()) {
      throw Error(Errc::InconsistentAlgebra, "Casimir is not scalar on delta_" + std::to_string(m));
    }
  }
  return c;
}

CoeffSequence relation1_residual(const VerdeStarData& d, const ZhedanovCoefficients& c, const CoeffSequence& f) {
  CoeffSequence rhs = seq_add(seq_scale(c.C1, k1_apply(d, f)), seq_scale(c.D, k2_apply(d, f)));
  rhs = seq_add(rhs, seq_scale(c.G1, f));
  return seq_sub(cubic1(d, f), rhs);
}

CoeffSequence relation2_residual(const VerdeStarData& d, const ZhedanovCoefficients& c, const CoeffSequence& f) {
  CoeffSequence rhs = seq_add(seq_scale(c.C2, k2_apply(d, f)), seq_scale(c.D, k1_apply(d, f)));
  rhs = seq_add(rhs, seq_scale(c.G2, f));
  return seq_sub(cubic2(d, f), rhs);
}

std::optional<long> first_relation_failure(const VerdeStarData& d, const ZhedanovCoefficients& c, long N) {
  for (long m = 0; m <= N; ++m) {
    const CoeffSequence f = delta(m);
    if (!relation1_residual(d, c, f).empty() || !relation2_residual(d, c, f).empty()) return m;
  }
  return std::nullopt;
}

CoeffSequence casimir_apply(const VerdeStarData& d, const ZhedanovCoefficients& c, const CoeffSequence& f) {
  const Words w{d};
  const Rational qq = d.q + d.q.inverse();
  const Rational half(1, 2);
  const CoeffSequence k1f = w.k1(f);
  const CoeffSequence k2f = w.k2(f);
  const CoeffSequence k2k1f = w.k2(k1f);
  const CoeffSequence k1k2f = w.k1(k2f);

  CoeffSequence r = seq_scale(-half * qq, seq_add(w.k1(w.k2(k2k1f)), w.k2(w.k1(k1k2f))));
  r = seq_add(r, w.k1(w.k2(k1k2f)));
  r = seq_add(r, w.k2(w.k1(k2k1f)));
  r = seq_add(r, seq_scale(half * qq, seq_add(seq_scale(c.C1, w.k1(k1f)), seq_scale(c.C2, w.k2(k2f)))));
  r = seq_add(r, seq_scale(c.D, seq_add(k1k2f, k2k1f)));
  r = seq_add(r, seq_scale(half * (2 + qq), seq_add(seq_scale(c.G1, k1f), seq_scale(c.G2, k2f))));
  return r;
}

std::string VanishingPattern::str() const {
  auto ch = [&](int i) { return flags[static_cast<std::size_t>(i)] ? 'B' : 'o'; };
  return {ch(0), ch(1), '/', ch(2), '/', ch(3), ch(4)};
}

VanishingPattern VanishingPattern::parse(std::string_view text) {
  if (text.size() != 7 || text[2] != '/' || text[4] != '/') {
    throw Error(Errc::ParseError, "pattern must look like BB/B/BB, got '" + std::string(text) + "'");
  }
  VanishingPattern p;
  const std::size_t pos[5] = {0, 1, 3, 5, 6};
  for (std::size_t i = 0; i < 5; ++i) {
    const char c = text[pos[i]];
    if (c != 'B' && c != 'o') throw Error(Errc::ParseError, "pattern characters are B and o");
    p.flags[i] = c == 'B';
  }
  return p;
}

int VanishingPattern::zero_count() const {
  int n = 0;
  for (bool f : flags) n += f ? 0 : 1;
  return n;
}

bool VanishingPattern::zeros_subset_of(const VanishingPattern& other) const {
  for (std::size_t i = 0; i < 5; ++i) {
    if (!flags[i] && other.flags[i]) return false;
  }
  return true;
}

VanishingPattern vanishing_pattern(const ZhedanovCoefficients& c) {
  return VanishingPattern{{!c.C1.is_zero(), !c.C2.is_zero(), !c.D.is_zero(), !c.G1.is_zero(), !c.G2.is_zero()}};
}

VanishingPattern pattern_dual(const VanishingPattern& p) {
  return VanishingPattern{{p.flags[1], p.flags[0], p.flags[2], p.flags[4], p.flags[3]}};
}

ZhedanovCoefficients dual_coeffs(const ZhedanovCoefficients& c) { return {c.C2, c.C1, c.D, c.G2, c.G1, c.omega}; }

ZhedanovCoefficients scaled_coeffs(const ZhedanovCoefficients& c, const Rational& mu, const Rational& rho) {
  return {rho * rho * c.C1, mu * mu * c.C2,      rho * mu * c.D,
          rho * rho * mu * c.G1, rho * mu * mu * c.G2, rho * rho * mu * mu * c.omega};
}

namespace {

// (rho, mu) exponents of C1, C2, D, G1, G2, omega
constexpr long kWeight[6][2] = {{2, 0}, {0, 2}, {1, 1}, {2, 1}, {1, 2}, {2, 2}};

long det(std::size_t i, std::size_t j) { return kWeight[i][0] * kWeight[j][1] - kWeight[i][1] * kWeight[j][0]; }

long den_of(const Rational& r) { return r.raw().get_den().get_si(); }

}  // namespace

CanonicalClass canonical_class(const ZhedanovCoefficients& c) {
  const std::array<Rational, 6> e = c.as_array();
  CanonicalClass out;
  out.pattern = vanishing_pattern(c);
  out.omega_nonzero = !c.omega.is_zero();

  std::optional<std::size_t> p1, p2;
  for (std::size_t k = 0; k < 6; ++k) {
    if (e[k].is_zero()) continue;
    if (!p1) {
      p1 = k;
    } else if (!p2 && det(*p1, k) != 0) {
      p2 = k;
    }
  }
  for (std::size_t k = 0; k < 6; ++k) {
    if (e[k].is_zero()) {
      out.key[k] = 0;
      continue;
    }
    if (k == p1 || k == p2) {
      out.key[k] = 1;
      continue;
    }
    // solve w_k = alpha w_p1 + beta w_p2 (beta = 0 without a second pivot)
    Rational alpha, beta;
    if (p2) {
      const long dt = det(*p1, *p2);
      alpha = Rational(det(k, *p2), dt);
      beta = Rational(det(*p1, k), dt);
    } else {
      const std::size_t axis = kWeight[*p1][0] != 0 ? 0 : 1;
      alpha = Rational(kWeight[k][axis], kWeight[*p1][axis]);
    }
    const long n = std::lcm(den_of(alpha), den_of(beta));
    Rational v = e[k].pow(n) * e[*p1].pow(-(alpha * n).raw().get_num().get_si());
    if (p2) v *= e[*p2].pow(-(beta * n).raw().get_num().get_si());
    out.key[k] = v;
  }
  return out;
}

nlohmann::ordered_json to_json(const ZhedanovCoefficients& c) {
  nlohmann::ordered_json j;
  j["C1"] = c.C1.str();
  j["C2"] = c.C2.str();
  j["D"] = c.D.str();
  j["G1"] = c.G1.str();
  j["G2"] = c.G2.str();
  j["omega"] = c.omega.str();
  return j;
}

nlohmann::ordered_json to_json(const CanonicalClass& c) {
  nlohmann::ordered_json j;
  j["pattern"] = c.pattern.str();
  j["omega_nonzero"] = c.omega_nonzero;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& v : c.key) arr.push_back(v.str());
  j["key"] = arr;
  return j;
}

}  // namespace qzs
