#pragma once

#include <array>
#include <string>
#include <vector>

#include "qzs/catalog.hpp"
#include "qzs/report.hpp"

namespace qzs {

/// (s, ab/s, ac/s, ad/s); NotASquare unless s^2 = abcd/q.
AWParams aw_dual_params(const AWParams& p, const Rational& s);
/// Same base and parameters equal up to a common sign.
bool equal_up_to_sign(const AWParams& x, const AWParams& y);

/// Permutation of (a,b,c,d) followed by e -> q/e on an even set of slots:
/// out[i] = flip[i] ? q/in[perm[i]] : in[perm[i]].
struct D4Element {
  std::array<int, 4> perm{0, 1, 2, 3};
  std::array<bool, 4> flip{};

  static D4Element transposition(int i, int j);
  static D4Element cycle();
  static D4Element pair_flip(int i, int j);
  /// (a,b,c,d) -> (a,b,q/d,q/c)
  static D4Element mazzocco();

  int flip_count() const;
  /// Acts as `other` first, then *this.
  D4Element compose(const D4Element& other) const;
  std::string str() const;

  friend bool operator==(const D4Element&, const D4Element&) = default;
};

/// FlipOfZero when a flipped slot holds 0; InvalidParameters for an odd flip count.
AWParams d4_action(const D4Element& g, const AWParams& p);
/// All 192 elements.
std::vector<D4Element> d4_group();
/// Distinct images of p (elements that would flip a zero are skipped).
std::vector<AWParams> d4_orbit(const AWParams& p);
/// Dual parameter a~ of d4_action(g, p) given a~ for p: a~ q^{k/2} / (product of flipped values).
Rational d4_transport_dual(const D4Element& g, const AWParams& p, const Rational& at);

/// (C1, C2/a~^2, D/a~, G1/a~, G2/a~^2, omega/a~^2) for Askey-Wilson data.
std::array<Rational, 6> aw_scaled_tuple(const AWParams& p, const Rational& at);

Report d4_invariance_check(const AWParams& p, const Rational& at, const std::vector<D4Element>& elements);
/// C1 = C2~/a~^2 style relations between the data at (a,b,c,d) and at its dual parameters.
Report dual_parameter_compat_check(const AWParams& p, const Rational& at);
/// c = q/(ab mu^2); (C1, mu^2 C2, mu D, mu G1, mu^2 G2) under permutations and pair flips of a, b, c.
Report cdqhahn_invariance_check(const Rational& a, const Rational& b, const Rational& mu, const QValue& q);
/// q = p^2, b = 1/(p^2 m^2 a), c = 1/(r^2 p m a); (r^2 C1, m^2 C2, rm D, r^2 m G1, r m^2 G2) under the three maps.
Report bigqj_invariance_check(const Rational& p, const Rational& m, const Rational& r, const Rational& a);
/// All six constants unchanged by q -> 1/q combined with a1<->a2, b1<->b2, d1<->d2.
Report exchange_invariance_check(const VerdeStarData& d);
/// closed_form(dual_data(d)) swaps C1<->C2 and G1<->G2.
Report dual_data_compat_check(const VerdeStarData& d);
/// closed_form(scale(d, mu, rho)) follows the weights (2,0),(0,2),(1,1),(2,1),(1,2),(2,2).
Report scaling_covariance_check(const VerdeStarData& d, const Rational& mu, const Rational& rho);
/// dual_data(cdqhahn(a,b,c)) equals big q-Jacobi (ab/q, a/b, ac/q) data with a1, a2, d scaled by 1/a.
Report cdqhahn_dual_check(const Rational& a, const Rational& b, const Rational& c, const QValue& q);

}  // namespace qzs
