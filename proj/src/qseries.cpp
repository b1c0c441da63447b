#include "qzs/qseries.hpp"

#include "qzs/error.hpp"

namespace qzs {

QValue QValue::of(const Rational& q) {
  if (q.is_zero() || q == 1 || q == -1) throw Error(Errc::InvalidBase, "q must not be 0 or +-1, got " + q.str());
  return QValue{q, std::nullopt};
}

QValue QValue::from_sqrt(const Rational& s) {
  QValue v = of(s * s);
  v.sqrt_q = s;
  return v;
}

const Rational& QValue::half() const {
  if (!sqrt_q) throw Error(Errc::MissingSqrtQ, "this family needs q^(1/2); pass it explicitly");
  return *sqrt_q;
}

Rational q_pochhammer(const Rational& b, const Rational& q, long k) {
  Rational r(1);
  Rational t = b;
  for (long j = 0; j < k; ++j) {
    r *= Rational(1) - t;
    t *= q;
  }
  return r;
}

Rational q_binomial(long n, long k, const Rational& q) {
  if (k < 0 || k > n) return Rational(0);
  return q_pochhammer(q, q, n) / (q_pochhammer(q, q, k) * q_pochhammer(q, q, n - k));
}

Rational terminating_phi(long n, const std::vector<Rational>& rest, const std::vector<Rational>& den,
                         const Rational& q, const Rational& z) {
  if (n < 0) throw Error(Errc::NotTerminating, "negative degree");
  const long r = static_cast<long>(rest.size()) + 1;
  const long s = static_cast<long>(den.size());
  const long e = s - r + 1;
  const Rational qn = q.pow(-n);

  Rational sum(1);
  Rational term(1);
  for (long k = 1; k <= n; ++k) {
    // ratio term_k / term_{k-1}
    const Rational qk1 = q.pow(k - 1);
    Rational numf = Rational(1) - qn * qk1;
    for (const auto& a : rest) numf *= Rational(1) - a * qk1;
    if (numf.is_zero()) break;
    Rational denf = Rational(1) - q.pow(k);
    for (const auto& b : den) {
      const Rational f = Rational(1) - b * qk1;
      if (f.is_zero()) throw Error(Errc::DenominatorPole, "denominator parameter " + b.str() + " at k=" + std::to_string(k));
      denf *= f;
    }
    // ((-1)^k q^{k(k-1)/2})^e grows by (-q^{k-1})^e from k-1 to k
    const Rational w = (-qk1).pow(e);
    term *= numf / denf * w * z;
    sum += term;
  }
  return sum;
}

Rational terminating_rphis(const std::vector<Rational>& num, const std::vector<Rational>& den,
                           const Rational& q, const Rational& z) {
  if (num.empty()) throw Error(Errc::NotTerminating, "no numerator parameters");
  const Rational& t = num.front();
  // |q^{-n}| is monotone in n, so the search stops once it passes |t|.
  const bool grows = q.abs() < Rational(1);
  Rational p(1);
  const Rational qi = q.inverse();
  for (long n = 0; n <= 4096; ++n) {
    if (p == t) {
      return terminating_phi(n, std::vector<Rational>(num.begin() + 1, num.end()), den, q, z);
    }
    if (grows ? p.abs() > t.abs() : p.abs() < t.abs()) break;
    p *= qi;
  }
  throw Error(Errc::NotTerminating, "first numerator parameter " + t.str() + " is not q^{-n}");
}

Rational continuous_q_hermite(long n, const Rational& z, const Rational& Q) {
  if (z.is_zero()) throw Error(Errc::PoleAtZ, "z = 0");
  return z.pow(n) * terminating_phi(n, {Rational(0)}, {}, Q, Q.pow(n) / (z * z));
}

}  // namespace qzs
