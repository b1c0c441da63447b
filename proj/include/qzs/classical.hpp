#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "qzs/catalog.hpp"
#include "qzs/poly.hpp"
#include "qzs/report.hpp"

namespace qzs {

/// R_n(z) = 4phi3(q^{-n}, q^{n-1}abcd, az, a/z; ab, ac, ad; q, q).
Rational eval_R(const Rational& z, const AWParams& p, long n);
/// P_n(x) = 3phi2(q^{-n}, q^{n+1}ab, x; qa, qc; q, q).
Rational eval_P(const Rational& x, const BigQJacobiParams& p, long n);
/// p_n(x;a,b;q) = 2phi1(q^{-n}, q^{n+1}ab; qa; q, qx).
Rational eval_little_qj(const Rational& x, const Rational& a, const Rational& b, const Rational& q, long n);

using ZFunction = std::function<Rational(const Rational&)>;

/// Askey-Wilson q-difference operator at z applied to a function of z.
/// PoleAtZ for z in {0, +-1} or z^2 in {1/q, q}.
Rational aw_difference_op(const AWParams& p, const ZFunction& f, const Rational& z);
/// Same, for a polynomial in x = z + 1/z.
Rational aw_difference_op(const AWParams& p, const Poly& f, const Rational& z);
/// Big q-Jacobi operator (1+qab)f(x) + x^{-2}[qa(x-1)(bx-c)(f(qx)-f(x)) + (x-qa)(x-qc)(f(x/q)-f(x))].
/// PoleAtZ at x = 0.
Rational bigqj_difference_op(const BigQJacobiParams& p, const ZFunction& f, const Rational& x);
Rational bigqj_difference_op(const BigQJacobiParams& p, const Poly& f, const Rational& x);

/// Three-term recurrences for n = 1..n_max plus the reduced n = 0 forms, at the
/// given points. RecurrencePole if a coefficient denominator vanishes.
Report aw_recurrence_check(const AWParams& p, long n_max, const std::vector<Rational>& zs);
Report bigqj_recurrence_check(const BigQJacobiParams& p, long n_max, const std::vector<Rational>& xs);

/// Coefficients of x P_n = A_n P_{n+1} + B_n P_n + E_n P_{n-1} for big q-Jacobi (n >= 1).
struct BigQJacobiRecurrence {
  Rational A, B, E;
};
BigQJacobiRecurrence bigqj_recurrence(const BigQJacobiParams& p, long n);

/// Identities compared at every point for n = 0..n_max. Ids and parameters:
///   aw-parity (a,b)            R_n(-z;a,b,-a,-b) = (-1)^n R_n(z;a,b,-a,-b)
///   bqj-permutation (a,b,c)    P_n(x;a,b,c) = P_n(x;c,ab/c,a)
///   bqj-rescaling (a,b,c)      P_n(x;a,b,c) against P_n(bx/c;ab/c,c,b), both forms
///   aw-swap (a,b,c,d)          R_n(z;a,b,c,d) against R_n(z;b,a,c,d)
///   bqj-symmetric (a)          P_n(x;a,a,-a) as a 3phi2 and its parity
///   bqj-little (a,b)           P_n(x;a,b,0) as a rescaled little q-Jacobi polynomial
Report verify_classical_identity(std::string_view id, const QValue& q, const Params& p,
                                 const std::vector<Rational>& points, long n_max);
const std::vector<std::string>& classical_identity_ids();

/// Base q to q^2 transformations; q must carry sqrt_q.
///   q2-jacobi (a,b), q2-laguerre (a), q2-ultraspherical (a), q2-hermite (none)
Report quadratic_transform_check(std::string_view which, const QValue& q, const Params& p,
                                 const std::vector<Rational>& zs, long n_max);
const std::vector<std::string>& quadratic_transform_ids();

/// Duality grids U_n at the dual nodes, both sides and the series form:
///   askey-wilson (a,b,c,s; d = q s^2/(abc)), dual-q-hahn (a,b,c), al-salam-chihara (a,b),
///   q2-jacobi (t,u; a=tu, b=t/u), q2-laguerre (a), q2-ultraspherical (a),
///   q2-laguerre-data (a), al-salam-carlitz (a). The q2-* pairs need sqrt_q.
Report duality_pair_check(std::string_view which, const QValue& q, const Params& p, long n_max, long m_max);
const std::vector<std::string>& duality_pair_ids();

/// U_n(x_m) = dual U_m(h_n) for all n <= n_max, m <= m_max.
Report duality_grid_check(const VerdeStarData& d, long n_max, long m_max);

/// x P_n = P_{n+1}/(1-q^{2n+1}) - q^{2n+1}/(1-q^{2n+1}) P_{n-1} for P_n(x;-1,-1,0;q).
Report dual_q2_hermite_recurrence_check(const QValue& q, long n_max, const std::vector<Rational>& xs);
/// The middle recurrence coefficient vanishes for P_n(x;a,a,-a) and P_n(x;-1,-1,c), n = 1..n_max.
Report symmetric_bqj_middle_term_check(const BigQJacobiParams& p, long n_max, const std::vector<Rational>& xs);
/// P_n(-x) = (-1)^n P_n(x) holds for (a,a,-a) and already fails at n = 1 for (-1,-1,c).
Report symmetric_bqj_reflection_check(const Rational& a, const Rational& c, const QValue& q, long n_max,
                                      const std::vector<Rational>& xs);

/// L u_n = h_n u_n for n <= n_max (polynomial side).
Report eigen_check(const VerdeStarData& d, long n_max);
/// apply_L agrees with the explicit q-difference operators pointwise on u_n, n <= n_max.
Report aw_operator_agreement(const AWParams& p, long n_max, const std::vector<Rational>& zs);
Report bigqj_operator_agreement(const BigQJacobiParams& p, long n_max, const std::vector<Rational>& xs);

}  // namespace qzs
