#include <string>

#include "qzs/classical.hpp"
#include "qzs/error.hpp"

namespace qzs {

Rational eval_R(const Rational& z, const AWParams& p, long n) {
  if (z.is_zero()) throw Error(Errc::PoleAtZ, "R_n at z = 0");
  const Rational& q = p.q.q;
  const Rational& a = p.a;
  return terminating_phi(n, {q.pow(n - 1) * a * p.b * p.c * p.d, a * z, a / z}, {a * p.b, a * p.c, a * p.d}, q, q);
}

Rational eval_P(const Rational& x, const BigQJacobiParams& p, long n) {
  const Rational& q = p.q.q;
  return terminating_phi(n, {q.pow(n + 1) * p.a * p.b, x}, {q * p.a, q * p.c}, q, q);
}

Rational eval_little_qj(const Rational& x, const Rational& a, const Rational& b, const Rational& q, long n) {
  return terminating_phi(n, {q.pow(n + 1) * a * b}, {q * a}, q, q * x);
}

Rational aw_difference_op(const AWParams& p, const ZFunction& f, const Rational& z) {
  const Rational& q = p.q.q;
  const Rational z2 = z * z;
  if (z.is_zero() || z2 == 1 || q * z2 == 1 || z2 == q) {
    throw Error(Errc::PoleAtZ, "Askey-Wilson operator singular at z = " + z.str());
  }
  const Rational &a = p.a, &b = p.b, &c = p.c, &d = p.d;
  const Rational A = (1 - a * z) * (1 - b * z) * (1 - c * z) * (1 - d * z) / ((1 - z2) * (1 - q * z2));
  const Rational B = (a - z) * (b - z) * (c - z) * (d - z) / ((1 - z2) * (q - z2));
  const Rational fz = f(z);
  return (1 + a * b * c * d / q) * fz + A * (f(q * z) - fz) + B * (f(z / q) - fz);
}

Rational aw_difference_op(const AWParams& p, const Poly& f, const Rational& z) {
  return aw_difference_op(p, [&](const Rational& w) { return f.eval(w + w.inverse()); }, z);
}

Rational bigqj_difference_op(const BigQJacobiParams& p, const ZFunction& f, const Rational& x) {
  if (x.is_zero()) throw Error(Errc::PoleAtZ, "big q-Jacobi operator singular at x = 0");
  const Rational& q = p.q.q;
  const Rational &a = p.a, &b = p.b, &c = p.c;
  const Rational fx = f(x);
  const Rational inner = q * a * (x - 1) * (b * x - c) * (f(q * x) - fx) + (x - q * a) * (x - q * c) * (f(x / q) - fx);
  return (1 + q * a * b) * fx + inner / (x * x);
}

Rational bigqj_difference_op(const BigQJacobiParams& p, const Poly& f, const Rational& x) {
  return bigqj_difference_op(p, [&](const Rational& w) { return f.eval(w); }, x);
}

namespace {

Rational checked_div(const Rational& num, const Rational& den, const std::string& where) {
  if (den.is_zero()) throw Error(Errc::RecurrencePole, where);
  return num / den;
}

std::string at_point(const char* what, long n, const Rational& t) {
  return std::string(what) + " fails at n=" + std::to_string(n) + ", point " + t.str();
}

}  // namespace

Report aw_recurrence_check(const AWParams& p, long n_max, const std::vector<Rational>& zs) {
  Report rep("askey-wilson recurrence");
  const Rational& q = p.q.q;
  const Rational &a = p.a, &b = p.b, &c = p.c, &d = p.d;
  const Rational e4 = a * b * c * d;
  for (const auto& z : zs) {
    std::vector<Rational> R;
    for (long n = 0; n <= n_max + 1; ++n) R.push_back(eval_R(z, p, n));
    const Rational x = z + z.inverse();
    const Rational a0 = checked_div((1 - a * b) * (1 - a * c) * (1 - a * d), a * (1 - e4), "reduced form, 1 - abcd = 0");
    rep.expect(x * R[0] == (a + a.inverse()) * R[0] + a0 * (R[1] - R[0]), [&] { return at_point("reduced form", 0, z); });
    for (long n = 1; n <= n_max; ++n) {
      const Rational qn = q.pow(n);
      const Rational An = checked_div(
          (1 - qn * a * b) * (1 - qn * a * c) * (1 - qn * a * d) * (1 - q.pow(n - 1) * e4),
          a * (1 - q.pow(2 * n - 1) * e4) * (1 - q.pow(2 * n) * e4), "A_" + std::to_string(n) + " denominator");
      const Rational qn1 = q.pow(n - 1);
      const Rational Cn = checked_div(a * (1 - qn) * (1 - qn1 * b * c) * (1 - qn1 * b * d) * (1 - qn1 * c * d),
                                      (1 - q.pow(2 * n - 2) * e4) * (1 - q.pow(2 * n - 1) * e4),
                                      "C_" + std::to_string(n) + " denominator");
      const auto i = static_cast<std::size_t>(n);
      const Rational rhs = (a + a.inverse()) * R[i] + An * (R[i + 1] - R[i]) + Cn * (R[i - 1] - R[i]);
      rep.expect(x * R[i] == rhs, [&] { return at_point("three-term relation", n, z); });
    }
  }
  return rep;
}

BigQJacobiRecurrence bigqj_recurrence(const BigQJacobiParams& p, long n) {
  const Rational& q = p.q.q;
  const Rational &a = p.a, &b = p.b, &c = p.c;
  const Rational qn = q.pow(n);
  const Rational q1 = qn * q;
  const Rational An = checked_div((1 - q1 * a) * (1 - q1 * a * b) * (1 - q1 * c),
                                  (1 - q.pow(2 * n + 1) * a * b) * (1 - q.pow(2 * n + 2) * a * b),
                                  "A_" + std::to_string(n) + " denominator");
  // q^{n+1} ac (1 - q^n ab/c) written without dividing by c
  const Rational En = checked_div(q1 * (1 - qn) * (a * c - qn * a * a * b) * (1 - qn * b),
                                  (1 - q.pow(2 * n) * a * b) * (1 - q.pow(2 * n + 1) * a * b),
                                  "E_" + std::to_string(n) + " denominator");
  return {An, 1 - An + En, -En};
}

Report bigqj_recurrence_check(const BigQJacobiParams& p, long n_max, const std::vector<Rational>& xs) {
  Report rep("big q-Jacobi recurrence");
  const Rational& q = p.q.q;
  for (const auto& x : xs) {
    std::vector<Rational> P;
    for (long n = 0; n <= n_max + 1; ++n) P.push_back(eval_P(x, p, n));
    const Rational a0 = checked_div((1 - q * p.a) * (1 - q * p.c), 1 - q * q * p.a * p.b, "reduced form denominator");
    rep.expect(x * P[0] == P[0] + a0 * (P[1] - P[0]), [&] { return at_point("reduced form", 0, x); });
    for (long n = 1; n <= n_max; ++n) {
      const auto r = bigqj_recurrence(p, n);
      const auto i = static_cast<std::size_t>(n);
      rep.expect(x * P[i] == r.A * P[i + 1] + r.B * P[i] + r.E * P[i - 1],
                 [&] { return at_point("three-term relation", n, x); });
    }
  }
  return rep;
}

Report eigen_check(const VerdeStarData& d, long n_max) {
  Report rep("eigen");
  for (long n = 0; n <= n_max; ++n) {
    const Poly u = monic_u(d, n);
    rep.expect(apply_L(d, u) == eigen_h(d, n) * u, [&] { return "L u_n != h_n u_n at n=" + std::to_string(n); });
  }
  return rep;
}

Report aw_operator_agreement(const AWParams& p, long n_max, const std::vector<Rational>& zs) {
  Report rep("askey-wilson operator");
  const VerdeStarData d = askey_wilson_data(p);
  const Rational& q = p.q.q;
  const Rational e4 = p.a * p.b * p.c * p.d;
  for (long n = 0; n <= n_max; ++n) {
    const Poly u = monic_u(d, n);
    const Poly Lu = apply_L(d, u);
    const Rational lambda = q.pow(-n) + e4 * q.pow(n - 1);
    const ZFunction Rn = [&](const Rational& w) { return eval_R(w, p, n); };
    for (const auto& z : zs) {
      rep.expect(Lu.eval(z + z.inverse()) == aw_difference_op(p, u, z),
                 [&] { return at_point("Newton-basis L vs difference operator", n, z); });
      rep.expect(aw_difference_op(p, Rn, z) == lambda * Rn(z), [&] { return at_point("L R_n = lambda R_n", n, z); });
    }
  }
  return rep;
}

Report bigqj_operator_agreement(const BigQJacobiParams& p, long n_max, const std::vector<Rational>& xs) {
  Report rep("big q-Jacobi operator");
  const VerdeStarData d = big_q_jacobi_data(p);
  const Rational& q = p.q.q;
  for (long n = 0; n <= n_max; ++n) {
    const Poly u = monic_u(d, n);
    const Poly Lu = apply_L(d, u);
    const Rational lambda = q.pow(-n) + p.a * p.b * q.pow(n + 1);
    const ZFunction Pn = [&](const Rational& w) { return eval_P(w, p, n); };
    for (const auto& x : xs) {
      rep.expect(Lu.eval(x) == bigqj_difference_op(p, u, x),
                 [&] { return at_point("Newton-basis L vs difference operator", n, x); });
      rep.expect(bigqj_difference_op(p, Pn, x) == lambda * Pn(x), [&] { return at_point("L P_n = lambda P_n", n, x); });
    }
  }
  return rep;
}

}  // namespace qzs
