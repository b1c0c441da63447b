#include <algorithm>
#include <functional>
#include <string>

#include "qzs/classical.hpp"
#include "qzs/error.hpp"
#include "qzs/symmetry.hpp"

namespace qzs {

namespace {

std::string where(std::string_view id, long n, const Rational& t) {
  return std::string(id) + " fails at n=" + std::to_string(n) + ", point " + t.str();
}

std::string where2(std::string_view id, long n, long m) {
  return std::string(id) + " fails at n=" + std::to_string(n) + ", m=" + std::to_string(m);
}

Rational poch(const Rational& b, const Rational& q, long n) { return q_pochhammer(b, q, n); }

}  // namespace

const std::vector<std::string>& classical_identity_ids() {
  static const std::vector<std::string> ids{"aw-parity", "bqj-permutation", "bqj-rescaling",
                                            "aw-swap",   "bqj-symmetric",   "bqj-little"};
  return ids;
}

const std::vector<std::string>& quadratic_transform_ids() {
  static const std::vector<std::string> ids{"q2-jacobi", "q2-laguerre", "q2-ultraspherical", "q2-hermite"};
  return ids;
}

const std::vector<std::string>& duality_pair_ids() {
  static const std::vector<std::string> ids{"askey-wilson", "dual-q-hahn",       "al-salam-chihara", "q2-jacobi",
                                            "q2-laguerre",  "q2-ultraspherical", "q2-laguerre-data", "al-salam-carlitz"};
  return ids;
}

Report verify_classical_identity(std::string_view id, const QValue& qv, const Params& p,
                                 const std::vector<Rational>& points, long n_max) {
  Report rep("identity " + std::string(id));
  const Rational& q = qv.q;
  for (long n = 0; n <= n_max; ++n) {
    for (const auto& t : points) {
      auto check = [&](const Rational& lhs, const Rational& rhs) {
        rep.expect(lhs == rhs, [&] { return where(id, n, t); });
      };
      const Rational sign = n % 2 == 0 ? 1 : -1;
      if (id == "aw-parity") {
        const Rational &a = param(p, "a"), &b = param(p, "b");
        const AWParams w{a, b, -a, -b, qv};
        check(eval_R(-t, w, n), sign * eval_R(t, w, n));
      } else if (id == "bqj-permutation") {
        const Rational &a = param(p, "a"), &b = param(p, "b"), &c = param(p, "c");
        check(eval_P(t, {a, b, c, qv}, n), eval_P(t, {c, a * b / c, a, qv}, n));
      } else if (id == "bqj-rescaling") {
        const Rational &a = param(p, "a"), &b = param(p, "b"), &c = param(p, "c");
        const Rational k = (c / b).pow(n) * poch(q * a * b / c, q, n) * poch(q * b, q, n) /
                           (poch(q * a, q, n) * poch(q * c, q, n));
        check(eval_P(t, {a, b, c, qv}, n), k * eval_P(b * t / c, {a * b / c, c, b, qv}, n));
        check(c.pow(-n) * poch(q * a * c, q, n) * poch(q * c, q, n) * eval_P(c * t, {a * c, b, c, qv}, n),
              b.pow(-n) * poch(q * a * b, q, n) * poch(q * b, q, n) * eval_P(b * t, {a * b, c, b, qv}, n));
      } else if (id == "aw-swap") {
        const Rational &a = param(p, "a"), &b = param(p, "b"), &c = param(p, "c"), &d = param(p, "d");
        const Rational k = (a / b).pow(n) * poch(b * c, q, n) * poch(b * d, q, n) / (poch(a * c, q, n) * poch(a * d, q, n));
        check(eval_R(t, {a, b, c, d, qv}, n), k * eval_R(t, {b, a, c, d, qv}, n));
      } else if (id == "bqj-symmetric") {
        const Rational& a = param(p, "a");
        const BigQJacobiParams s{a, a, -a, qv};
        check(eval_P(t, s, n), terminating_phi(n, {q.pow(n + 1) * a * a, t}, {q * a, -q * a}, q, q));
        check(eval_P(-t, s, n), sign * eval_P(t, s, n));
      } else if (id == "bqj-little") {
        const Rational &a = param(p, "a"), &b = param(p, "b");
        const Rational k = (-a).pow(n) * q.pow(n * (n + 1) / 2) * poch(q * b, q, n) / poch(q * a, q, n);
        check(k * eval_little_qj(t / (q * a), b, a, q, n), eval_P(t, {a, b, 0, qv}, n));
      } else {
        throw Error(Errc::UnknownFamily, "unknown identity '" + std::string(id) + "'");
      }
    }
  }
  return rep;
}

Report quadratic_transform_check(std::string_view which, const QValue& qv, const Params& p,
                                 const std::vector<Rational>& zs, long n_max) {
  Report rep("quadratic transform " + std::string(which));
  const Rational& q = qv.q;
  const Rational& s = qv.half();
  const QValue Q{q * q, q};
  for (long n = 0; n <= n_max; ++n) {
    for (const auto& z : zs) {
      auto check = [&](const Rational& lhs, const Rational& rhs) {
        rep.expect(lhs == rhs, [&] { return where(which, n, z); });
      };
      const Rational pre = s.pow(-n) * poch(-q, q, n);
      if (which == "q2-jacobi") {
        const Rational &a = param(p, "a"), &b = param(p, "b");
        check(eval_R(z, {a, -b, s, -s, qv}, n), eval_R(z, {a, -b, q * a, -q * b, Q}, n));
      } else if (which == "q2-laguerre") {
        const Rational& a = param(p, "a");
        check(pre / poch(-s * a, q, n) * eval_R(z, {s, -s, a, 0, qv}, n), a.pow(-n) * eval_R(z, {a, q * a, 0, 0, Q}, n));
      } else if (which == "q2-ultraspherical") {
        const Rational& a = param(p, "a");
        check(pre / poch(-a * a, q, n) * eval_R(z, {s, -s, a, -a, qv}, n),
              a.pow(-n) * eval_R(z, {a, -a, q * a, -q * a, Q}, n));
      } else if (which == "q2-hermite") {
        check(pre * eval_R(z, {s, -s, 0, 0, qv}, n), continuous_q_hermite(n, z, Q.q));
      } else {
        throw Error(Errc::UnknownFamily, "unknown transform '" + std::string(which) + "'");
      }
    }
  }
  return rep;
}

Report duality_grid_check(const VerdeStarData& d, long n_max, long m_max) {
  Report rep("duality grid");
  for (long n = 0; n <= n_max; ++n) {
    for (long m = 0; m <= m_max; ++m) {
      rep.expect(normalized_U(d, n, node_x(d, m)) == dual_normalized_U(d, m, eigen_h(d, n)),
                 [&] { return where2("U_n(x_m) = dual U_m(h_n)", n, m); });
    }
  }
  return rep;
}

namespace {

// Explicit hypergeometric forms of U_n and dual U_m at two sample points.
void normalized_forms(Report& rep, const VerdeStarData& d, long n_max, const std::vector<Rational>& pts,
                      const std::function<Rational(long, const Rational&)>& primal,
                      const std::function<Rational(long, const Rational&)>& dual) {
  for (long n = 0; n <= n_max; ++n) {
    for (const auto& t : pts) {
      rep.expect(normalized_U(d, n, t) == primal(n, t), [&] { return where("U_n closed form", n, t); });
      rep.expect(dual_normalized_U(d, n, t) == dual(n, t), [&] { return where("dual U_m closed form", n, t); });
    }
  }
}

}  // namespace

Report duality_pair_check(std::string_view which, const QValue& qv, const Params& p, long n_max, long m_max) {
  Report rep("duality " + std::string(which));
  const Rational& q = qv.q;
  auto grid = [&](const std::function<Rational(long, long)>& lhs, const std::function<Rational(long, long)>& rhs,
                  const std::function<Rational(long, long)>& series) {
    for (long n = 0; n <= n_max; ++n) {
      for (long m = 0; m <= m_max; ++m) {
        const Rational v = lhs(n, m);
        rep.expect(v == rhs(n, m), [&] { return where2("dual side", n, m); });
        rep.expect(v == series(n, m), [&] { return where2("series form", n, m); });
      }
    }
  };
  if (which == "askey-wilson") {
    const Rational &a = param(p, "a"), &b = param(p, "b"), &c = param(p, "c"), &s = param(p, "s");
    const AWParams w{a, b, c, q * s * s / (a * b * c), qv};
    const AWParams dw = aw_dual_params(w, s);
    grid([&](long n, long m) { return eval_R((a * q.pow(m)).inverse(), w, n); },
         [&](long n, long m) { return eval_R((s * q.pow(n)).inverse(), dw, m); },
         [&](long n, long m) {
           return terminating_phi(n, {q.pow(n - 1) * a * b * w.c * w.d, q.pow(-m), q.pow(m) * a * a},
                                  {a * b, a * w.c, a * w.d}, q, q);
         });
  } else if (which == "dual-q-hahn" || which == "al-salam-chihara") {
    const Rational &a = param(p, "a"), &b = param(p, "b");
    const Rational c = which == "dual-q-hahn" ? param(p, "c") : Rational(0);
    grid([&](long n, long m) { return eval_R((a * q.pow(m)).inverse(), {a, b, c, 0, qv}, n); },
         [&](long n, long m) { return eval_P(q.pow(-n), {a * b / q, a / b, a * c / q, qv}, m); },
         [&](long n, long m) { return terminating_phi(n, {q.pow(-m), q.pow(m) * a * a}, {a * b, a * c}, q, q); });
  } else if (which == "q2-jacobi") {
    const Rational &t = param(p, "t"), &u = param(p, "u");
    const Rational& s = qv.half();
    const Rational a = t * u;
    const Rational b = t / u;
    grid([&](long n, long m) { return eval_R((a * q.pow(m)).inverse(), {a, -b, s, -s, qv}, n); },
         [&](long n, long m) { return eval_R((t * q.pow(n)).inverse(), {t, -t, s * u, -s * u, qv}, m); },
         [&](long n, long m) {
           return terminating_phi(n, {q.pow(n) * a * b, q.pow(-m), q.pow(m) * a * a}, {-a * b, s * a, -s * a}, q, q);
         });
  } else if (which == "q2-laguerre") {
    const Rational& a = param(p, "a");
    const Rational& s = qv.half();
    grid([&](long n, long m) { return eval_R((a * q.pow(m)).inverse(), {a, s, -s, 0, qv}, n); },
         [&](long n, long m) { return eval_P(q.pow(-n), {a / s, a / s, -a / s, qv}, m); },
         [&](long n, long m) { return terminating_phi(n, {q.pow(-m), q.pow(m) * a * a}, {s * a, -s * a}, q, q); });
  } else if (which == "q2-ultraspherical") {
    const Rational& a = param(p, "a");
    const Rational& s = qv.half();
    const AWParams w{a, -a, s, -s, qv};
    grid([&](long n, long m) { return eval_R((a * q.pow(m)).inverse(), w, n); },
         [&](long n, long m) { return eval_R((a * q.pow(n)).inverse(), w, m); },
         [&](long n, long m) {
           return terminating_phi(n, {q.pow(n) * a * a, q.pow(-m), q.pow(m) * a * a}, {-a * a, s * a, -s * a}, q, q);
         });
  } else if (which == "q2-laguerre-data") {
    const Rational& a = param(p, "a");
    const Rational& s = qv.half();
    const VerdeStarData d = q2laguerre_data(a, qv);
    const std::vector<Rational> zs{3, Rational(-2, 7)};
    for (long n = 0; n <= n_max; ++n) {
      for (const auto& z : zs) {
        const Rational u = normalized_U(d, n, z + z.inverse());
        rep.expect(u == terminating_phi(n, {s * z, s / z}, {s * a, -q}, q, q), [&] { return where("U_n series", n, z); });
        rep.expect(u == eval_R(z, {s, -s, a, 0, qv}, n), [&] { return where("U_n as R_n", n, z); });
      }
    }
    for (long m = 0; m <= m_max; ++m) {
      for (const auto& y : zs) {
        const Rational u = dual_normalized_U(d, m, y);
        rep.expect(u == terminating_phi(m, {y, q.pow(m + 1)}, {s * a, -q}, q, q),
                   [&] { return where("dual U_m series", m, y); });
        rep.expect(u == eval_P(y, {-1, -1, a / s, qv}, m), [&] { return where("dual U_m as P_m", m, y); });
      }
    }
    rep.merge(duality_grid_check(d, n_max, m_max));
  } else if (which == "al-salam-carlitz") {
    const Rational& a = param(p, "a");
    const VerdeStarData d = asc1_data(a, q);
    normalized_forms(
        rep, d, std::max(n_max, m_max), {3, Rational(-2, 7)},
        [&](long n, const Rational& x) { return terminating_phi(n, {x.inverse()}, {0}, q, -q * x / a); },
        [&](long m, const Rational& y) { return terminating_phi(m, {y}, {0}, q, -q.pow(m + 1) / a); });
    rep.merge(duality_grid_check(d, n_max, m_max));
  } else {
    throw Error(Errc::UnknownFamily, "unknown duality pair '" + std::string(which) + "'");
  }
  return rep;
}

Report dual_q2_hermite_recurrence_check(const QValue& qv, long n_max, const std::vector<Rational>& xs) {
  Report rep("dual q^2-Hermite recurrence");
  const Rational& q = qv.q;
  const BigQJacobiParams p{-1, -1, 0, qv};
  for (const auto& x : xs) {
    for (long n = 1; n <= n_max; ++n) {
      const Rational t = q.pow(2 * n + 1);
      const Rational rhs = eval_P(x, p, n + 1) / (1 - t) - t / (1 - t) * eval_P(x, p, n - 1);
      rep.expect(x * eval_P(x, p, n) == rhs, [&] { return where("three-term relation", n, x); });
    }
  }
  return rep;
}

Report symmetric_bqj_middle_term_check(const BigQJacobiParams& p, long n_max, const std::vector<Rational>& xs) {
  Report rep("symmetric big q-Jacobi middle term");
  for (long n = 1; n <= n_max; ++n) {
    const auto r = bigqj_recurrence(p, n);
    rep.expect(r.B.is_zero(), [&] { return "B_" + std::to_string(n) + " = " + r.B.str(); });
    for (const auto& x : xs) {
      rep.expect(x * eval_P(x, p, n) == r.A * eval_P(x, p, n + 1) + r.E * eval_P(x, p, n - 1),
                 [&] { return where("two-term relation", n, x); });
    }
  }
  return rep;
}

Report symmetric_bqj_reflection_check(const Rational& a, const Rational& c, const QValue& q, long n_max,
                                      const std::vector<Rational>& xs) {
  Report rep("symmetric big q-Jacobi reflection");
  const BigQJacobiParams sym{a, a, -a, q};
  for (long n = 0; n <= n_max; ++n) {
    const Rational sign = n % 2 == 0 ? 1 : -1;
    for (const auto& x : xs) {
      rep.expect(eval_P(-x, sym, n) == sign * eval_P(x, sym, n), [&] { return where("(a,a,-a) parity", n, x); });
    }
  }
  const BigQJacobiParams other{-1, -1, c, q};
  bool odd = true;
  for (const auto& x : xs) odd = odd && eval_P(-x, other, 1) == -eval_P(x, other, 1);
  rep.expect(!odd, [] { return std::string("P_1(x;-1,-1,c) is odd on every sample point"); });
  rep.notes.push_back("P_1(x;-1,-1,c) is not odd");
  return rep;
}

}  // namespace qzs
