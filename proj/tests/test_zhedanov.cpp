#include <doctest.h>

#include <random>

#include "qzs/catalog.hpp"
#include "qzs/error.hpp"
#include "qzs/suites.hpp"
#include "qzs/zhedanov.hpp"

using namespace qzs;

namespace {

Rational r(long long p, long long q = 1) { return Rational(p, q); }

const QValue kHalf = QValue::of(r(1, 2));

VerdeStarData aw(const Rational& a, const Rational& b, const Rational& c, const Rational& d, const QValue& q = kHalf) {
  return askey_wilson_data(AWParams{a, b, c, d, q});
}

CoeffSequence to_seq(const VerdeStarData& d, const Poly& p) { return to_newton(d, p); }

}  // namespace

TEST_CASE("K1 and K2 on delta sequences") {
  std::mt19937_64 rng(1);
  const VerdeStarData d = qzs::random_data(rng);
  CHECK(k1_apply(d, delta(0)) == seq_scale(eigen_h(d, 0), delta(0)));
  for (long m = 1; m < 6; ++m) {
    CHECK(k1_apply(d, delta(m)) == seq_add(seq_scale(eigen_h(d, m), delta(m)), seq_scale(coupling_g(d, m), delta(m - 1))));
    CHECK(k2_apply(d, delta(m)) == seq_add(seq_scale(node_x(d, m), delta(m)), delta(m + 1)));
  }
  CHECK(k2_apply(d, {}).empty());
}

TEST_CASE("K2 is multiplication by x and K1 is L") {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 4; ++i) {
    const VerdeStarData d = qzs::random_data(rng);
    for (long deg = 0; deg <= 8; ++deg) {
      std::vector<Rational> c;
      for (long j = 0; j <= deg; ++j) c.push_back(random_rational(rng));
      const Poly p(c);
      CHECK(k2_apply(d, to_seq(d, p)) == to_seq(d, Poly::x() * p));
      CHECK(k1_apply(d, to_seq(d, p)) == to_seq(d, apply_L(d, p)));
    }
  }
}

TEST_CASE("closed-form constants") {
  const Rational q = r(1, 2);
  const ZhedanovCoefficients a = closed_form_coeffs(aw(2, 3, 5, 7));
  CHECK(a.C1 == r(9, 4));
  const auto e = AWParams{2, 3, 5, 7, kHalf}.e();
  CHECK(a.D == (1 - q.inverse()) * (1 - q.inverse()) * (e[2] + q * e[0]));

  const ZhedanovCoefficients b = closed_form_coeffs(big_q_jacobi_data(BigQJacobiParams{3, 5, 7, kHalf}));
  CHECK(b.C1 == r(0));
  CHECK(b.G1 == -(1 - q) * (1 - q) * (1 + q) * 3 * 7);
  CHECK(closed_form_coeffs(cdqhahn_data(2, 3, 5, kHalf)).C2 == r(0));

  const ZhedanovCoefficients d6a = closed_form_coeffs(make_data(q, 0, 1, 0, 0, 0, 0, true));
  for (const auto& v : d6a.as_array()) CHECK(v.is_zero());
  const ZhedanovCoefficients d5c = closed_form_coeffs(make_data(q, 0, 1, 1, 0, 0, 0, true));
  CHECK(d5c.D == q - 2 + q.inverse());
  CHECK(vanishing_pattern(d5c).str() == "oo/B/oo");
  CHECK(d5c.omega == d5c.D);
}

TEST_CASE("half-power form agrees") {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 10; ++i) {
    const Rational s = random_rational(rng);
    if (s == 1 || s == -1) continue;
    const VerdeStarData d = make_data(s * s, random_rational(rng), random_rational(rng), random_rational(rng),
                                      random_rational(rng), random_rational(rng), random_rational(rng));
    CHECK(closed_form_coeffs_sqrt(d, s) == closed_form_coeffs(d));
    CHECK(closed_form_coeffs_sqrt(d, -s) == closed_form_coeffs(d));
  }
  CHECK_THROWS_AS(closed_form_coeffs_sqrt(aw(2, 3, 5, 7), r(1, 3)), Error);
}

TEST_CASE("relations and extraction") {
  CHECK(relations_check(aw(2, 3, 5, 7), 10).passed());
  std::mt19937_64 rng(6);
  for (int i = 0; i < 5; ++i) {
    const VerdeStarData d = qzs::random_data(rng);
    const ZhedanovCoefficients c = closed_form_coeffs(d);
    CHECK_FALSE(first_relation_failure(d, c, 10).has_value());
    CHECK(extract_coeffs(d, 6) == c);
  }
}

TEST_CASE("wrong constants are caught") {
  const VerdeStarData d = aw(2, 3, 5, 7);
  ZhedanovCoefficients c = closed_form_coeffs(d);
  c.G1 += 1;
  CHECK(first_relation_failure(d, c, 10) == std::optional<long>(0));
  CHECK_THROWS_AS(extract_coeffs(d, 2), Error);
}

TEST_CASE("Casimir") {
  CHECK(casimir_check(aw(2, 3, 5, 7), 8, 6).passed());
  std::mt19937_64 rng(8);
  for (int i = 0; i < 3; ++i) CHECK(casimir_check(qzs::random_data(rng), 8, 6).passed());
  CHECK(closed_form_coeffs(make_data(r(1, 2), 0, 1, 0, 0, 0, 0, true)).omega == r(0));
}

TEST_CASE("vanishing patterns") {
  CHECK(vanishing_pattern(closed_form_coeffs(aw(2, 3, 5, 7))).str() == "BB/B/BB");
  const ZhedanovCoefficients s = closed_form_coeffs(aw(2, 3, -2, -3));
  CHECK(s.D.is_zero());
  CHECK(s.G2.is_zero());
  CHECK(vanishing_pattern(s).str() == "BB/o/Bo");
  CHECK(vanishing_pattern(closed_form_coeffs(big_q_jacobi_data(BigQJacobiParams{3, 0, 7, kHalf}))).str() == "oo/B/BB");

  const VanishingPattern p = VanishingPattern::parse("Bo/B/oB");
  CHECK(p.str() == "Bo/B/oB");
  CHECK(p.zero_count() == 2);
  CHECK(pattern_dual(pattern_dual(p)) == p);
  CHECK(pattern_dual(VanishingPattern::parse("Bo/B/BB")).str() == "oB/B/BB");
  CHECK(pattern_dual(VanishingPattern::parse("BB/B/BB")).str() == "BB/B/BB");
  CHECK(p.zeros_subset_of(VanishingPattern::parse("Bo/o/oB")));
  CHECK_FALSE(VanishingPattern::parse("Bo/o/oB").zeros_subset_of(p));
  CHECK_THROWS_AS(VanishingPattern::parse("BBB/B/B"), Error);
  CHECK_THROWS_AS(VanishingPattern::parse("BX/B/BB"), Error);
}

TEST_CASE("dual coefficients") {
  std::mt19937_64 rng(10);
  for (int i = 0; i < 5; ++i) {
    const VerdeStarData d = qzs::random_data(rng);
    CHECK(closed_form_coeffs(dual_data(d)) == dual_coeffs(closed_form_coeffs(d)));
    CHECK(vanishing_pattern(closed_form_coeffs(dual_data(d))) == pattern_dual(vanishing_pattern(closed_form_coeffs(d))));
  }
}

TEST_CASE("q inverse exchange") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 5; ++i) {
    const VerdeStarData d = qzs::random_data(rng);
    CHECK(closed_form_coeffs(q_inverse_exchange(d)) == closed_form_coeffs(d));
  }
}

TEST_CASE("canonical class") {
  std::mt19937_64 rng(14);
  for (int i = 0; i < 10; ++i) {
    const VerdeStarData d = qzs::random_data(rng);
    const Rational mu = random_rational(rng);
    const Rational rho = random_rational(rng);
    const ZhedanovCoefficients c = closed_form_coeffs(d);
    CHECK(closed_form_coeffs(scale(d, mu, rho)) == scaled_coeffs(c, mu, rho));
    CHECK(canonical_class(closed_form_coeffs(scale(d, mu, rho))) == canonical_class(c));
  }
  const CanonicalClass zero = canonical_class(ZhedanovCoefficients{});
  for (const auto& v : zero.key) CHECK(v.is_zero());
  CHECK_FALSE(zero.omega_nonzero);

  const QValue q = kHalf;
  CHECK(canonical_class(closed_form_coeffs(aw(2, 3, 5, 7))) ==
        canonical_class(closed_form_coeffs(aw(2, 3, q.q / 7, q.q / 5))));
  CHECK_FALSE(canonical_class(closed_form_coeffs(aw(2, 3, 5, 7))) ==
              canonical_class(closed_form_coeffs(aw(2, 3, 5, 11))));
}
