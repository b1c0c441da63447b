#include <doctest.h>

#include "qzs/error.hpp"
#include "qzs/qseries.hpp"

using namespace qzs;

namespace {

Errc code_of(const auto& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return Errc::ParseError;
}

Rational r(long long p, long long q = 1) { return Rational(p, q); }

}  // namespace

TEST_CASE("q-Pochhammer") {
  CHECK(q_pochhammer(r(5, 7), r(1, 3), 0) == r(1));
  for (long k = 1; k < 5; ++k) CHECK(q_pochhammer(r(1), r(1, 3), k) == r(0));
  CHECK(q_pochhammer(r(3), r(2), 3) == r(-110));
}

TEST_CASE("q-binomial") {
  CHECK(q_binomial(4, 0, r(1, 2)) == r(1));
  CHECK(q_binomial(4, 4, r(1, 2)) == r(1));
  // [4 2]_q = 1 + q + 2q^2 + q^3 + q^4
  const Rational q = r(1, 2);
  CHECK(q_binomial(4, 2, q) == 1 + q + 2 * q * q + q.pow(3) + q.pow(4));
  CHECK(q_binomial(3, 5, q) == r(0));
}

TEST_CASE("base validation") {
  CHECK(code_of([] { QValue::of(0); }) == Errc::InvalidBase);
  CHECK(code_of([] { QValue::of(1); }) == Errc::InvalidBase);
  CHECK(code_of([] { QValue::of(-1); }) == Errc::InvalidBase);
  CHECK(code_of([] { QValue::from_sqrt(-1); }) == Errc::InvalidBase);
  CHECK(code_of([] { QValue::of(r(1, 2)).half(); }) == Errc::MissingSqrtQ);
  const QValue q = QValue::from_sqrt(r(-1, 2));
  CHECK(q.q == r(1, 4));
  CHECK(q.half() == r(-1, 2));
}

TEST_CASE("terminating series") {
  const Rational q = r(1, 2);
  CHECK(terminating_phi(0, {r(3), r(7)}, {r(5), r(11)}, q, q) == r(1));
  CHECK(terminating_phi(4, {r(1), r(7)}, {r(5), r(11)}, q, q) == r(1));
  CHECK(terminating_phi(1, {r(3)}, {r(5)}, q, q) == r(1, 2));
  CHECK(terminating_rphis({q.pow(-1), r(3)}, {r(5)}, q, q) == r(1, 2));
  CHECK(code_of([&] { terminating_rphis({r(3), r(3)}, {r(5)}, q, q); }) == Errc::NotTerminating);
}

TEST_CASE("q-Chu-Vandermonde") {
  // 2phi1(q^-n, b; c; q, q) = (c/b;q)_n b^n / (c;q)_n
  const Rational q = r(1, 3);
  const Rational b = r(5, 2);
  const Rational c = r(-7, 4);
  for (long n = 0; n < 6; ++n) {
    const Rational lhs = terminating_phi(n, {b}, {c}, q, q);
    const Rational rhs = q_pochhammer(c / b, q, n) / q_pochhammer(c, q, n) * b.pow(n);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("denominator poles") {
  const Rational q = r(1, 2);
  // (q^-2;q)_k vanishes from k = 3 on, after q^-1 has ended the sum
  CHECK_NOTHROW(terminating_phi(1, {r(3)}, {q.pow(-2)}, q, q));
  CHECK(code_of([&] { terminating_phi(3, {r(3)}, {q.pow(-1)}, q, q); }) == Errc::DenominatorPole);
}

TEST_CASE("continuous q-Hermite") {
  const Rational Q = r(1, 3);
  const Rational z = r(3, 2);
  for (long n = 0; n < 6; ++n) {
    Rational expected = 0;
    for (long k = 0; k <= n; ++k) expected += q_binomial(n, k, Q) * z.pow(n - 2 * k);
    CHECK(continuous_q_hermite(n, z, Q) == expected);
  }
  CHECK(code_of([&] { continuous_q_hermite(2, 0, Q); }) == Errc::PoleAtZ);
}
