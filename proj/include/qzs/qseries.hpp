#pragma once

#include <optional>
#include <vector>

#include "qzs/rational.hpp"

namespace qzs {

/// Base q, optionally with an exact square root for families that need q^{1/2}.
struct QValue {
  Rational q;
  std::optional<Rational> sqrt_q;

  /// Throws InvalidBase for q in {0, 1, -1}.
  static QValue of(const Rational& q);
  /// q = s^2; throws InvalidBase if that q is invalid.
  static QValue from_sqrt(const Rational& s);

  /// Throws MissingSqrtQ when no root was supplied.
  const Rational& half() const;
};

/// (b;q)_k = (1-b)(1-bq)...(1-bq^{k-1}).
Rational q_pochhammer(const Rational& b, const Rational& q, long k);

/// Gaussian binomial [n over k]_q.
Rational q_binomial(long n, long k, const Rational& q);

/// Terminating r phi s with the first numerator parameter q^{-n}; `rest` holds
/// the remaining numerator parameters. A vanishing denominator Pochhammer
/// throws DenominatorPole unless a numerator factor vanished at an earlier or
/// the same step.
Rational terminating_phi(long n, const std::vector<Rational>& rest, const std::vector<Rational>& den,
                         const Rational& q, const Rational& z);

/// Same series with num[0] given as a value; n is recovered from num[0] = q^{-n}
/// (NotTerminating if no such n >= 0 exists).
Rational terminating_rphis(const std::vector<Rational>& num, const std::vector<Rational>& den,
                           const Rational& q, const Rational& z);

/// Continuous q-Hermite H_n((z+1/z)/2 | Q) as z^n 2phi0(Q^{-n}, 0; -; Q, Q^n/z^2).
Rational continuous_q_hermite(long n, const Rational& z, const Rational& Q);

}  // namespace qzs
