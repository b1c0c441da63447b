#include "qzs/suites.hpp"

#include <string>

#include "qzs/error.hpp"

namespace qzs {

Report relations_check(const VerdeStarData& d, long N) {
  Report rep("relations");
  const ZhedanovCoefficients c = closed_form_coeffs(d);
  for (long m = 0; m <= N; ++m) {
    const CoeffSequence f = delta(m);
    rep.expect(relation1_residual(d, c, f).empty(), [&] { return "first relation fails on delta_" + std::to_string(m); });
    rep.expect(relation2_residual(d, c, f).empty(), [&] { return "second relation fails on delta_" + std::to_string(m); });
  }
  try {
    const ZhedanovCoefficients e = extract_coeffs(d, N);
    rep.expect(e == c, [] { return std::string("extracted constants differ from the closed form"); });
  } catch (const Error& e) {
    rep.expect(false, [&] { return std::string(e.what()); });
  }
  return rep;
}

Report casimir_check(const VerdeStarData& d, long m_max, long comm_max) {
  Report rep("casimir");
  const ZhedanovCoefficients c = closed_form_coeffs(d);
  for (long m = 0; m <= m_max; ++m) {
    const CoeffSequence f = delta(m);
    rep.expect(casimir_apply(d, c, f) == seq_scale(c.omega, f), [&] { return "Q delta_" + std::to_string(m) + " != omega delta_" + std::to_string(m); });
  }
  for (long m = 0; m <= comm_max; ++m) {
    const CoeffSequence f = delta(m);
    rep.expect(casimir_apply(d, c, k1_apply(d, f)) == k1_apply(d, casimir_apply(d, c, f)),
               [&] { return "[Q, K1] delta_" + std::to_string(m) + " != 0"; });
    rep.expect(casimir_apply(d, c, k2_apply(d, f)) == k2_apply(d, casimir_apply(d, c, f)),
               [&] { return "[Q, K2] delta_" + std::to_string(m) + " != 0"; });
  }
  return rep;
}

}  // namespace qzs
