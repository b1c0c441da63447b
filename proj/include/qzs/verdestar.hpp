#pragma once

#include <random>
#include <vector>

#include <json.hpp>

#include "qzs/poly.hpp"
#include "qzs/rational.hpp"

namespace qzs {

inline constexpr int kMaxDegree = 12;

/// Parameters of x_k = b1 q^k + b2 q^{-k}, h_k = a1 q^k + a2 q^{-k} and
/// g_k = d3 q^{2k} + d1 q^k + d0 + d2 q^{-k} + d4 q^{-2k}.
struct VerdeStarData {
  Rational q;
  Rational a1, a2, b1, b2;
  Rational d0, d1, d2, d3, d4;
  bool degenerate = false;
  int max_degree = kMaxDegree;

  friend bool operator==(const VerdeStarData&, const VerdeStarData&) = default;
};

/// Fills in d3 = a1 b1/q, d4 = q a2 b2, d0 = -(d1+d2+d3+d4) and validates.
/// InvalidBase, DegenerateEigenvalues (a2 = a1 q^m, 1 <= m <= max_degree),
/// AllCouplingsZero (all d_i zero without the degenerate flag).
VerdeStarData make_data(const Rational& q, const Rational& a1, const Rational& a2, const Rational& b1,
                        const Rational& b2, const Rational& d1, const Rational& d2, bool degenerate = false,
                        int max_degree = kMaxDegree);

/// Checks a fully specified tuple (e.g. read from JSON); InvalidParameters if
/// d0..d4 break the linear constraints, otherwise the make_data errors.
VerdeStarData validate(const VerdeStarData& d);

Rational node_x(const VerdeStarData& d, long k);
Rational eigen_h(const VerdeStarData& d, long k);
Rational coupling_g(const VerdeStarData& d, long k);

/// v_k = (x - x_0)...(x - x_{k-1}).
Poly newton_poly(const VerdeStarData& d, long k);

struct NewtonExpansion {
  long n = 0;
  std::vector<Rational> coeffs;  // c_{n,0..n}
};

/// c_{n,k} = prod_{j=k}^{n-1} g_{j+1}/(h_n - h_j); EigenvalueCollision if h_n = h_j.
NewtonExpansion expansion(const VerdeStarData& d, long n);
Poly monic_u(const VerdeStarData& d, long n);

/// U_n(t) = sum_k prod_{j<k} (h_n - h_j)(t - x_j)/g_{j+1}.
Rational normalized_U(const VerdeStarData& d, long n, const Rational& t);
/// The same with x and h exchanged. Coinciding nodes are allowed: the sum has no x differences in a denominator.
Rational dual_normalized_U(const VerdeStarData& d, long m, const Rational& y);

/// Coefficients f_k with p = sum_k f_k v_k.
std::vector<Rational> to_newton(const VerdeStarData& d, const Poly& p);
Poly from_newton(const VerdeStarData& d, const std::vector<Rational>& f);

/// L v_n = h_n v_n + g_n v_{n-1}.
Poly apply_L(const VerdeStarData& d, const Poly& p);

VerdeStarData dual_data(const VerdeStarData& d);
VerdeStarData q_inverse_exchange(const VerdeStarData& d);
VerdeStarData scale(const VerdeStarData& d, const Rational& mu, const Rational& rho);

/// Nonzero p/r with |p|, |r| <= bound.
Rational random_rational(std::mt19937_64& rng, int bound = 9);
/// Random non-degenerate data whose dual is also valid and whose couplings
/// g_1..g_max are nonzero.
VerdeStarData random_data(std::mt19937_64& rng, int max_degree = kMaxDegree);

nlohmann::ordered_json to_json(const VerdeStarData& d);
VerdeStarData data_from_json(const nlohmann::json& j);

}  // namespace qzs
