#include <doctest.h>

#include <random>

#include "qzs/classical.hpp"
#include "qzs/error.hpp"

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

const QValue kHalf = QValue::of(r(1, 2));
const QValue kQuarter = QValue::from_sqrt(r(1, 2));
const std::vector<Rational> kPoints{3, r(-5, 2), r(7, 3)};

void require_pass(const Report& rep) {
  INFO(rep.name << ": " << rep.first_failure.value_or(""));
  CHECK(rep.checks > 0);
  CHECK(rep.passed());
}

}  // namespace

TEST_CASE("evaluators at trivial points") {
  const AWParams p{2, 3, 5, 7, kHalf};
  for (long n = 0; n < 6; ++n) CHECK(eval_R(r(1, 2), p, n) == r(1));
  // P_n(1) equals R_n(1/a) of the dual q-Hahn side, which is 1
  const BigQJacobiParams b{r(3, 1), r(2, 3), r(5, 1), kHalf};
  for (long n = 0; n < 6; ++n) CHECK(eval_P(1, b, n) == r(1));
  CHECK(code_of([&] { eval_R(0, p, 2); }) == Errc::PoleAtZ);
}

TEST_CASE("normalized polynomials are the 4phi3") {
  const AWParams p{2, 3, 5, 7, kHalf};
  const VerdeStarData d = askey_wilson_data(p);
  for (long n = 0; n <= 6; ++n) {
    for (const auto& z : kPoints) CHECK(normalized_U(d, n, z + z.inverse()) == eval_R(z, p, n));
  }
  const BigQJacobiParams b{3, 5, 7, kHalf};
  const VerdeStarData bd = big_q_jacobi_data(b);
  for (long n = 0; n <= 6; ++n) {
    for (const auto& x : kPoints) CHECK(normalized_U(bd, n, x) == eval_P(x, b, n));
  }
}

TEST_CASE("classical identities") {
  require_pass(verify_classical_identity("aw-parity", kHalf, {{"a", 2}, {"b", 3}}, {5}, 6));
  require_pass(verify_classical_identity("bqj-permutation", kHalf, {{"a", 3}, {"b", 5}, {"c", 7}}, kPoints, 6));
  require_pass(verify_classical_identity("bqj-rescaling", kHalf, {{"a", 3}, {"b", 5}, {"c", 7}}, kPoints, 6));
  require_pass(verify_classical_identity("aw-swap", kHalf, {{"a", 3}, {"b", 5}, {"c", 7}, {"d", 11}}, kPoints, 6));
  require_pass(verify_classical_identity("bqj-symmetric", kHalf, {{"a", r(5, 3)}}, kPoints, 6));
  std::mt19937_64 rng(1);
  for (int i = 0; i < 3; ++i) {
    const Params p{{"a", random_rational(rng, 30)}, {"b", random_rational(rng, 30)}};
    require_pass(verify_classical_identity("bqj-little", QValue::of(r(2, 7)), p, kPoints, 4));
  }
  CHECK(code_of([] { verify_classical_identity("nope", kHalf, {}, kPoints, 2); }) == Errc::UnknownFamily);
}

TEST_CASE("a wrong identity is reported, not thrown") {
  // the parity rule does not hold without c = -a, d = -b
  const AWParams p{2, 3, 5, 7, kHalf};
  CHECK(eval_R(-3, p, 1) != -eval_R(3, p, 1));
}

TEST_CASE("recurrences") {
  require_pass(aw_recurrence_check(AWParams{2, 3, 5, 7, kHalf}, 5, kPoints));
  require_pass(bigqj_recurrence_check(BigQJacobiParams{3, 5, 7, kHalf}, 5, kPoints));
  // abcd = q
  const Rational q = r(1, 2);
  require_pass(aw_recurrence_check(AWParams{2, 3, 5, q / 30, kHalf}, 5, kPoints));
  // abcd = 1 leaves the reduced form without a denominator
  CHECK(code_of([] { aw_recurrence_check(AWParams{2, 3, 5, r(1, 30), kHalf}, 2, {3}); }) == Errc::RecurrencePole);
}

TEST_CASE("q-difference operators") {
  const AWParams p{2, 3, 5, 7, kHalf};
  require_pass(aw_operator_agreement(p, 5, kPoints));
  require_pass(bigqj_operator_agreement(BigQJacobiParams{3, 5, 7, kHalf}, 5, kPoints));
  CHECK(code_of([&] { aw_difference_op(p, Poly(1), 1); }) == Errc::PoleAtZ);
  CHECK(code_of([&] { aw_difference_op(p, Poly(1), 0); }) == Errc::PoleAtZ);
  CHECK(code_of([&] { bigqj_difference_op(BigQJacobiParams{3, 5, 7, kHalf}, Poly(1), 0); }) == Errc::PoleAtZ);
  CHECK(code_of([] {
          aw_difference_op(AWParams{2, 3, 5, 7, kQuarter}, Poly(1), r(1, 2));
        }) == Errc::PoleAtZ);
}

TEST_CASE("quadratic transformations") {
  require_pass(quadratic_transform_check("q2-jacobi", kQuarter, {{"a", 3}, {"b", 5}}, kPoints, 4));
  require_pass(quadratic_transform_check("q2-laguerre", kQuarter, {{"a", 3}}, kPoints, 4));
  require_pass(quadratic_transform_check("q2-ultraspherical", kQuarter, {{"a", 3}}, kPoints, 4));
  require_pass(quadratic_transform_check("q2-hermite", kQuarter, {}, kPoints, 4));
  const QValue neg = QValue::from_sqrt(r(-1, 2));
  require_pass(quadratic_transform_check("q2-jacobi", neg, {{"a", 3}, {"b", 5}}, kPoints, 4));
  require_pass(quadratic_transform_check("q2-hermite", neg, {}, kPoints, 4));
  // a q^(1/2) = 1 puts (ac;q)_1 = 0 in a denominator on the left
  CHECK(code_of([] { quadratic_transform_check("q2-jacobi", kQuarter, {{"a", 2}, {"b", 3}}, kPoints, 4); }) ==
        Errc::DenominatorPole);
  CHECK(code_of([] { quadratic_transform_check("q2-jacobi", kHalf, {{"a", 3}, {"b", 5}}, kPoints, 2); }) ==
        Errc::MissingSqrtQ);
}

TEST_CASE("duality pairs") {
  require_pass(duality_pair_check("askey-wilson", kHalf, {{"a", 2}, {"b", 3}, {"c", 5}, {"s", r(7, 3)}}, 4, 4));
  require_pass(duality_pair_check("dual-q-hahn", kHalf, {{"a", 2}, {"b", 3}, {"c", 5}}, 4, 4));
  require_pass(duality_pair_check("al-salam-chihara", kHalf, {{"a", 2}, {"b", 3}}, 4, 4));
  require_pass(duality_pair_check("q2-jacobi", kQuarter, {{"t", r(3, 2)}, {"u", r(5, 3)}}, 4, 4));
  require_pass(duality_pair_check("q2-laguerre", kQuarter, {{"a", r(7, 2)}}, 4, 4));
  require_pass(duality_pair_check("q2-ultraspherical", kQuarter, {{"a", r(7, 2)}}, 4, 4));
  require_pass(duality_pair_check("q2-laguerre-data", QValue::from_sqrt(r(-1, 2)), {{"a", 2}}, 4, 4));
  require_pass(duality_pair_check("al-salam-carlitz", kHalf, {{"a", 3}}, 5, 5));
}

TEST_CASE("duality grids on family data") {
  require_pass(duality_grid_check(askey_wilson_data(AWParams{2, 3, 5, 7, kHalf}), 6, 6));
  require_pass(duality_grid_check(cdqhahn_data(2, 3, 5, kHalf), 6, 6));
  require_pass(duality_grid_check(big_q_jacobi_data(BigQJacobiParams{3, 5, 7, kHalf}), 6, 6));
}

TEST_CASE("dual continuous q^2-Hermite and symmetric big q-Jacobi") {
  require_pass(dual_q2_hermite_recurrence_check(kHalf, 1, {3}));
  require_pass(dual_q2_hermite_recurrence_check(QValue::of(r(-2, 5)), 6, kPoints));
  require_pass(symmetric_bqj_middle_term_check(BigQJacobiParams{r(5, 3), r(5, 3), r(-5, 3), kHalf}, 6, kPoints));
  require_pass(symmetric_bqj_middle_term_check(BigQJacobiParams{-1, -1, r(7, 2), kHalf}, 6, kPoints));
  const Report rep = symmetric_bqj_reflection_check(r(5, 3), r(7, 2), kHalf, 6, kPoints);
  require_pass(rep);
  // the (-1,-1,c) family is not odd at n = 1
  const BigQJacobiParams o{-1, -1, r(7, 2), kHalf};
  CHECK(eval_P(-3, o, 1) != -eval_P(3, o, 1));
}
