#include "qzs/symmetry.hpp"

#include <algorithm>
#include <sstream>

#include "qzs/error.hpp"

namespace qzs {

AWParams aw_dual_params(const AWParams& p, const Rational& s) {
  if (s * s != p.a * p.b * p.c * p.d / p.q.q) {
    throw Error(Errc::NotASquare, s.str() + "^2 != abcd/q");
  }
  return AWParams{s, p.a * p.b / s, p.a * p.c / s, p.a * p.d / s, p.q};
}

bool equal_up_to_sign(const AWParams& x, const AWParams& y) {
  if (x.q.q != y.q.q) return false;
  const bool same = x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  const bool neg = x.a == -y.a && x.b == -y.b && x.c == -y.c && x.d == -y.d;
  return same || neg;
}

D4Element D4Element::transposition(int i, int j) {
  D4Element g;
  std::swap(g.perm[static_cast<std::size_t>(i)], g.perm[static_cast<std::size_t>(j)]);
  return g;
}

D4Element D4Element::cycle() { return D4Element{{1, 2, 3, 0}, {}}; }

D4Element D4Element::pair_flip(int i, int j) {
  D4Element g;
  g.flip[static_cast<std::size_t>(i)] = true;
  g.flip[static_cast<std::size_t>(j)] = true;
  return g;
}

D4Element D4Element::mazzocco() { return D4Element{{0, 1, 3, 2}, {false, false, true, true}}; }

int D4Element::flip_count() const { return static_cast<int>(std::count(flip.begin(), flip.end(), true)); }

D4Element D4Element::compose(const D4Element& other) const {
  D4Element r;
  for (std::size_t i = 0; i < 4; ++i) {
    const auto j = static_cast<std::size_t>(perm[i]);
    r.perm[i] = other.perm[j];
    r.flip[i] = flip[i] != other.flip[j];
  }
  return r;
}

std::string D4Element::str() const {
  static const char* names = "abcd";
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < 4; ++i) {
    if (i) os << ',';
    const char n = names[perm[i]];
    if (flip[i]) {
      os << "q/" << n;
    } else {
      os << n;
    }
  }
  os << ')';
  return os.str();
}

AWParams d4_action(const D4Element& g, const AWParams& p) {
  if (g.flip_count() % 2 != 0) throw Error(Errc::InvalidParameters, "odd number of flips");
  const std::array<Rational, 4> in{p.a, p.b, p.c, p.d};
  std::array<Rational, 4> out;
  for (std::size_t i = 0; i < 4; ++i) {
    const Rational& v = in[static_cast<std::size_t>(g.perm[i])];
    if (g.flip[i]) {
      if (v.is_zero()) throw Error(Errc::FlipOfZero, "flip of a zero parameter");
      out[i] = p.q.q / v;
    } else {
      out[i] = v;
    }
  }
  return AWParams{out[0], out[1], out[2], out[3], p.q};
}

std::vector<D4Element> d4_group() {
  std::vector<D4Element> g;
  std::array<int, 4> perm{0, 1, 2, 3};
  do {
    for (int mask = 0; mask < 16; ++mask) {
      D4Element e;
      e.perm = perm;
      for (std::size_t i = 0; i < 4; ++i) e.flip[i] = (mask >> i) & 1;
      if (e.flip_count() % 2 == 0) g.push_back(e);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return g;
}

std::vector<AWParams> d4_orbit(const AWParams& p) {
  std::vector<AWParams> orbit;
  for (const auto& g : d4_group()) {
    try {
      const AWParams r = d4_action(g, p);
      const bool seen = std::any_of(orbit.begin(), orbit.end(), [&](const AWParams& o) {
        return o.a == r.a && o.b == r.b && o.c == r.c && o.d == r.d;
      });
      if (!seen) orbit.push_back(r);
    } catch (const Error& e) {
      if (e.code() != Errc::FlipOfZero) throw;
    }
  }
  return orbit;
}

Rational d4_transport_dual(const D4Element& g, const AWParams& p, const Rational& at) {
  const std::array<Rational, 4> in{p.a, p.b, p.c, p.d};
  Rational r = at;
  for (std::size_t i = 0; i < 4; ++i) {
    if (g.flip[i]) r /= in[static_cast<std::size_t>(g.perm[i])];
  }
  // q^{k/2} with k even
  return r * p.q.q.pow(g.flip_count() / 2);
}

std::array<Rational, 6> aw_scaled_tuple(const AWParams& p, const Rational& at) {
  const ZhedanovCoefficients c = closed_form_coeffs(askey_wilson_data(p));
  const Rational a2 = at * at;
  return {c.C1, c.C2 / a2, c.D / at, c.G1 / at, c.G2 / a2, c.omega / a2};
}

namespace {

std::string tuple_str(const std::array<Rational, 6>& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? ", " : "") + t[i].str();
  return s + ")";
}

}  // namespace

Report d4_invariance_check(const AWParams& p, const Rational& at, const std::vector<D4Element>& elements) {
  Report rep("D4 invariance");
  aw_dual_params(p, at);  // certifies at
  const auto base = aw_scaled_tuple(p, at);
  for (const auto& g : elements) {
    const AWParams image = d4_action(g, p);
    const Rational at2 = d4_transport_dual(g, p, at);
    const auto t = aw_scaled_tuple(image, at2);
    rep.expect(t == base, [&] { return g.str() + ": " + tuple_str(t) + " != " + tuple_str(base); });
  }
  return rep;
}

Report dual_parameter_compat_check(const AWParams& p, const Rational& at) {
  Report rep("dual parameter compatibility");
  const AWParams dual = aw_dual_params(p, at);
  const ZhedanovCoefficients c = closed_form_coeffs(askey_wilson_data(p));
  const ZhedanovCoefficients t = closed_form_coeffs(askey_wilson_data(dual));
  const Rational& a = p.a;
  rep.expect(c.C1 == c.C2 / (at * at), [] { return std::string("C1 != C2/a~^2"); });
  rep.expect(t.C2 / (a * a) == c.C1, [] { return std::string("C2~/a^2 != C1"); });
  rep.expect(t.D / a == c.D / at, [] { return std::string("D~/a != D/a~"); });
  rep.expect(t.G1 / a == c.G2 / (at * at), [] { return std::string("G1~/a != G2/a~^2"); });
  rep.expect(t.G2 / (a * a) == c.G1 / at, [] { return std::string("G2~/a^2 != G1/a~"); });
  rep.expect(t.omega / (a * a) == c.omega / (at * at), [] { return std::string("omega~/a^2 != omega/a~^2"); });
  return rep;
}

Report cdqhahn_invariance_check(const Rational& a, const Rational& b, const Rational& mu, const QValue& q) {
  Report rep("continuous dual q-Hahn invariance");
  const Rational c = q.q / (a * b * mu * mu);
  auto tuple = [&](const Rational& x, const Rational& y, const Rational& z, const Rational& m) {
    const ZhedanovCoefficients k = closed_form_coeffs(cdqhahn_data(x, y, z, q));
    return std::array<Rational, 5>{k.C1, m * m * k.C2, m * k.D, m * k.G1, m * m * k.G2};
  };
  const auto base = tuple(a, b, c, mu);
  std::array<Rational, 3> v{a, b, c};
  std::sort(v.begin(), v.end());
  do {
    rep.expect(tuple(v[0], v[1], v[2], mu) == base, [&] { return "permutation " + v[0].str() + "," + v[1].str(); });
  } while (std::next_permutation(v.begin(), v.end()));
  const std::array<Rational, 3> orig{a, b, c};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      std::array<Rational, 3> w = orig;
      w[i] = q.q / orig[i];
      w[j] = q.q / orig[j];
      const Rational m2 = mu * orig[i] * orig[j] / q.q;
      rep.expect(tuple(w[0], w[1], w[2], m2) == base,
                 [&] { return "pair flip of slots " + std::to_string(i) + "," + std::to_string(j); });
    }
  }
  return rep;
}

Report bigqj_invariance_check(const Rational& p, const Rational& m, const Rational& r, const Rational& a) {
  Report rep("big q-Jacobi invariance");
  const QValue q = QValue::from_sqrt(p);
  const Rational b = (p * p * m * m * a).inverse();
  const Rational c = (r * r * p * m * a).inverse();
  auto tuple = [&](const Rational& x, const Rational& y, const Rational& z, const Rational& mu, const Rational& rho) {
    const ZhedanovCoefficients k = closed_form_coeffs(big_q_jacobi_data(BigQJacobiParams{x, y, z, q}));
    return std::array<Rational, 5>{rho * rho * k.C1, mu * mu * k.C2, rho * mu * k.D, rho * rho * mu * k.G1,
                                   rho * mu * mu * k.G2};
  };
  const auto base = tuple(a, b, c, m, r);
  rep.expect(tuple(c, a * b / c, a, m, r) == base, [] { return std::string("(c, ab/c, a)"); });
  rep.expect(tuple(a * b / c, c, b, m, r * c / b) == base, [] { return std::string("(ab/c, c, b)"); });
  rep.expect(tuple(a, b.inverse(), c / b, m * b, r) == base, [] { return std::string("(a, 1/b, c/b)"); });
  return rep;
}

Report exchange_invariance_check(const VerdeStarData& d) {
  Report rep("q <-> 1/q exchange");
  const ZhedanovCoefficients c = closed_form_coeffs(d);
  const ZhedanovCoefficients e = closed_form_coeffs(q_inverse_exchange(d));
  rep.expect(c == e, [] { return std::string("combined exchange changes the constants"); });
  return rep;
}

Report dual_data_compat_check(const VerdeStarData& d) {
  Report rep("x <-> h duality");
  const ZhedanovCoefficients c = closed_form_coeffs(d);
  rep.expect(closed_form_coeffs(dual_data(d)) == dual_coeffs(c), [] { return std::string("dual data mismatch"); });
  rep.expect(dual_data(dual_data(d)) == d, [] { return std::string("dual is not an involution"); });
  return rep;
}

Report scaling_covariance_check(const VerdeStarData& d, const Rational& mu, const Rational& rho) {
  Report rep("scaling covariance");
  const VerdeStarData s = scale(d, mu, rho);
  rep.expect(closed_form_coeffs(s) == scaled_coeffs(closed_form_coeffs(d), mu, rho),
             [] { return std::string("weights violated"); });
  rep.expect(canonical_class(closed_form_coeffs(s)) == canonical_class(closed_form_coeffs(d)),
             [] { return std::string("canonical class changed"); });
  return rep;
}

Report cdqhahn_dual_check(const Rational& a, const Rational& b, const Rational& c, const QValue& q) {
  Report rep("continuous dual q-Hahn dual");
  const VerdeStarData x = dual_data(cdqhahn_data(a, b, c, q));
  const VerdeStarData y =
      scale(big_q_jacobi_data(BigQJacobiParams{a * b / q.q, a / b, a * c / q.q, q}), a.inverse(), 1);
  rep.expect(x == y, [] { return std::string("dual data differs from scaled big q-Jacobi data"); });
  return rep;
}

}  // namespace qzs
