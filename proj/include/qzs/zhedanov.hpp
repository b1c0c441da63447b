#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qzs/rational.hpp"
#include "qzs/verdestar.hpp"

namespace qzs {

/// Finitely supported sequence f_n standing for sum_n f_n v_n. Trailing zeros
/// are stripped by every operation below.
using CoeffSequence = std::vector<Rational>;

CoeffSequence delta(long m);
CoeffSequence seq_add(const CoeffSequence& a, const CoeffSequence& b);
CoeffSequence seq_sub(const CoeffSequence& a, const CoeffSequence& b);
CoeffSequence seq_scale(const Rational& c, const CoeffSequence& a);

/// (K1 f)_n = h_n f_n + g_{n+1} f_{n+1}.
CoeffSequence k1_apply(const VerdeStarData& d, const CoeffSequence& f);
/// (K2 f)_n = x_n f_n + f_{n-1}; the support grows by one.
CoeffSequence k2_apply(const VerdeStarData& d, const CoeffSequence& f);

struct ZhedanovCoefficients {
  Rational C1, C2, D, G1, G2, omega;

  std::array<Rational, 6> as_array() const { return {C1, C2, D, G1, G2, omega}; }
  friend bool operator==(const ZhedanovCoefficients&, const ZhedanovCoefficients&) = default;
};

/// Structure constants, expanded so only integer powers of q occur.
ZhedanovCoefficients closed_form_coeffs(const VerdeStarData& d);
/// The same formulas evaluated literally with q^{1/2} = s (s^2 must equal q).
ZhedanovCoefficients closed_form_coeffs_sqrt(const VerdeStarData& d, const Rational& s);

/// Solves both cubic relations on delta_0..delta_N for (C1, C2, D, G1, G2) and
/// reads omega off Q delta_m. InconsistentAlgebra if no exact solution exists.
ZhedanovCoefficients extract_coeffs(const VerdeStarData& d, long N);

/// Left side minus right side of the first / second cubic relation applied to f.
CoeffSequence relation1_residual(const VerdeStarData& d, const ZhedanovCoefficients& c, const CoeffSequence& f);
CoeffSequence relation2_residual(const VerdeStarData& d, const ZhedanovCoefficients& c, const CoeffSequence& f);

/// First m <= N where either relation fails on delta_m, if any.
std::optional<long> first_relation_failure(const VerdeStarData& d, const ZhedanovCoefficients& c, long N);

CoeffSequence casimir_apply(const VerdeStarData& d, const ZhedanovCoefficients& c, const CoeffSequence& f);

/// Nonzero flags in the order C1, C2, D, G1, G2.
struct VanishingPattern {
  std::array<bool, 5> flags{};

  /// "BB/B/BB" layout: C1C2/D/G1G2, B nonzero, o zero.
  std::string str() const;
  static VanishingPattern parse(std::string_view text);
  int zero_count() const;
  /// True when every zero of *this is a zero of other.
  bool zeros_subset_of(const VanishingPattern& other) const;

  friend bool operator==(const VanishingPattern&, const VanishingPattern&) = default;
};

VanishingPattern vanishing_pattern(const ZhedanovCoefficients& c);
VanishingPattern pattern_dual(const VanishingPattern& p);
ZhedanovCoefficients dual_coeffs(const ZhedanovCoefficients& c);
/// Coefficients of scale(d, mu, rho) predicted from those of d.
ZhedanovCoefficients scaled_coeffs(const ZhedanovCoefficients& c, const Rational& mu, const Rational& rho);

/// Orbit key under (C1,C2,D,G1,G2,w) -> (r^2 C1, m^2 C2, r m D, r^2 m G1, r m^2 G2, r^2 m^2 w).
/// Entries: 0 for zero coefficients, 1 for the (at most two) pivots, and for
/// every other nonzero entry the smallest monomial in it and the pivots that
/// has weight zero.
struct CanonicalClass {
  VanishingPattern pattern;
  bool omega_nonzero = false;
  std::array<Rational, 6> key;

  friend bool operator==(const CanonicalClass&, const CanonicalClass&) = default;
};

CanonicalClass canonical_class(const ZhedanovCoefficients& c);

nlohmann::ordered_json to_json(const ZhedanovCoefficients& c);
nlohmann::ordered_json to_json(const CanonicalClass& c);

}  // namespace qzs
