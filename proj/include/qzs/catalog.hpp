#pragma once

#include <array>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qzs/qseries.hpp"
#include "qzs/verdestar.hpp"
#include "qzs/zhedanov.hpp"

namespace qzs {

struct AWParams {
  Rational a, b, c, d;
  QValue q;

  /// Elementary symmetric functions e1..e4 of a, b, c, d.
  std::array<Rational, 4> e() const;
};

struct BigQJacobiParams {
  Rational a, b, c;
  QValue q;
};

/// InvalidParameters if a = 0 or one of ab, ac, ad, abcd lies in {1, 1/q, ..., q^{-max}}.
void validate(const AWParams& p, int max_degree = kMaxDegree);
/// InvalidParameters if one of ab, a, c lies in {1/q, ..., q^{-max-1}}.
void validate(const BigQJacobiParams& p, int max_degree = kMaxDegree);

/// b1 = a, b2 = 1/a, a1 = abcd/q, a2 = 1, d1 = -a(abcd + q(bc+bd+cd))/q^2, d2 = -(b+c+d+q/a).
VerdeStarData askey_wilson_data(const AWParams& p);
VerdeStarData cdqhahn_data(const Rational& a, const Rational& b, const Rational& c, const QValue& q);
/// b1 = 0, b2 = 1, a1 = qab, a2 = 1, d1 = -qac, d2 = -q(a+c+1).
VerdeStarData big_q_jacobi_data(const BigQJacobiParams& p);
/// x_k = q^k, h_k = q^{-k}, g_k = a(q^{-k} - 1); a = 0 yields the degenerate case.
VerdeStarData asc1_data(const Rational& a, const Rational& q);
/// x_k = q^{k+1/2} + q^{-k-1/2}, h_k = q^{-k}, g_k = (q^{1/2} - a q^k)(q^{-2k} - 1).
VerdeStarData q2laguerre_data(const Rational& a, const QValue& q);

using Params = std::map<std::string, Rational>;

/// Reads a named parameter; InvalidParameters when absent.
const Rational& param(const Params& p, const std::string& key);

struct FamilySpec {
  std::string id;    // "1a", "3b-alt", "off-5", ...
  std::string name;  // command-line name
  std::string title;
  std::string node;  // scheme node label, empty for off-scheme patterns
  std::vector<std::string> params;
  bool needs_sqrt_q = false;
  bool derives_q = false;  // the constraint is solved for q
  std::string constraint;
  VanishingPattern expected;
  std::function<VerdeStarData(const QValue&, const Params&)> build;
};

/// One family per scheme node with data (18 entries, row order).
const std::vector<FamilySpec>& node_families();
/// Alternative parametrizations of nodes and the direct data pairs.
const std::vector<FamilySpec>& variant_families();
/// The 13 constrained families whose arrays have no scheme node.
const std::vector<FamilySpec>& off_scheme_families();

/// Looks up by id or name across all three lists; UnknownFamily otherwise.
const FamilySpec& find_family(std::string_view key);

VerdeStarData family_data(const FamilySpec& spec, const QValue& q, const Params& p);
/// index is 1-based in the order of off_scheme_families().
VerdeStarData off_scheme_family(int index, const QValue& q, const Params& p);

struct FamilyDraw {
  QValue q;
  Params params;
  VerdeStarData data;
};

inline constexpr int kFamilyDrawBound = 97;

/// Random q (a square when needed) and parameters, redrawn until the data is valid.
FamilyDraw random_family_draw(const FamilySpec& spec, std::mt19937_64& rng);

nlohmann::ordered_json to_json(const FamilySpec& spec);

}  // namespace qzs
