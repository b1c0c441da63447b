#include "qzs/verdestar.hpp"

#include "qzs/error.hpp"

namespace qzs {

namespace {

void check_base(const Rational& q) {
  if (q.is_zero() || q == 1 || q == -1) throw Error(Errc::InvalidBase, "q must not be 0 or +-1, got " + q.str());
}

// a2 = a1 q^m makes h_m = h_0.
void check_eigen(const Rational& q, const Rational& a1, const Rational& a2, int max_degree, const char* what) {
  Rational qm = q;
  for (int m = 1; m <= max_degree; ++m, qm *= q) {
    if (a2 == a1 * qm) {
      throw Error(Errc::DegenerateEigenvalues, std::string(what) + " collide at m=" + std::to_string(m));
    }
  }
}

}  // namespace

VerdeStarData make_data(const Rational& q, const Rational& a1, const Rational& a2, const Rational& b1,
                        const Rational& b2, const Rational& d1, const Rational& d2, bool degenerate,
                        int max_degree) {
  check_base(q);
  VerdeStarData d;
  d.q = q;
  d.a1 = a1;
  d.a2 = a2;
  d.b1 = b1;
  d.b2 = b2;
  d.d1 = d1;
  d.d2 = d2;
  d.d3 = a1 * b1 / q;
  d.d4 = q * a2 * b2;
  d.d0 = -(d1 + d2 + d.d3 + d.d4);
  d.degenerate = degenerate;
  d.max_degree = max_degree;
  check_eigen(q, a1, a2, max_degree, "eigenvalues");
  const bool all_zero = d.d0.is_zero() && d1.is_zero() && d2.is_zero() && d.d3.is_zero() && d.d4.is_zero();
  if (all_zero && !degenerate) throw Error(Errc::AllCouplingsZero, "all d_i vanish; set the degenerate flag");
  return d;
}

VerdeStarData validate(const VerdeStarData& d) {
  VerdeStarData r = make_data(d.q, d.a1, d.a2, d.b1, d.b2, d.d1, d.d2, d.degenerate, d.max_degree);
  if (r.d0 != d.d0 || r.d3 != d.d3 || r.d4 != d.d4) {
    throw Error(Errc::InvalidParameters, "d0, d3, d4 violate d3 = a1 b1/q, d4 = q a2 b2, sum d_i = 0");
  }
  return r;
}

Rational node_x(const VerdeStarData& d, long k) { return d.b1 * d.q.pow(k) + d.b2 * d.q.pow(-k); }

Rational eigen_h(const VerdeStarData& d, long k) { return d.a1 * d.q.pow(k) + d.a2 * d.q.pow(-k); }

Rational coupling_g(const VerdeStarData& d, long k) {
  const Rational qk = d.q.pow(k);
  const Rational qi = qk.inverse();
  return d.d3 * qk * qk + d.d1 * qk + d.d0 + d.d2 * qi + d.d4 * qi * qi;
}

Poly newton_poly(const VerdeStarData& d, long k) {
  std::vector<Rational> roots;
  for (long j = 0; j < k; ++j) roots.push_back(node_x(d, j));
  return Poly::from_roots(roots);
}

NewtonExpansion expansion(const VerdeStarData& d, long n) {
  NewtonExpansion e;
  e.n = n;
  e.coeffs.assign(static_cast<std::size_t>(n + 1), Rational(0));
  const Rational hn = eigen_h(d, n);
  Rational c(1);
  e.coeffs[static_cast<std::size_t>(n)] = c;
  for (long k = n - 1; k >= 0; --k) {
    const Rational diff = hn - eigen_h(d, k);
    if (diff.is_zero()) {
      throw Error(Errc::EigenvalueCollision, "h_" + std::to_string(n) + " = h_" + std::to_string(k));
    }
    c *= coupling_g(d, k + 1) / diff;
    e.coeffs[static_cast<std::size_t>(k)] = c;
  }
  return e;
}

Poly monic_u(const VerdeStarData& d, long n) { return from_newton(d, expansion(d, n).coeffs); }

namespace {

void require_couplings(const VerdeStarData& d, long n) {
  if (d.degenerate) throw Error(Errc::ZeroCoupling, "normalized polynomials are undefined for degenerate data");
  for (long j = 1; j <= n; ++j) {
    if (coupling_g(d, j).is_zero()) throw Error(Errc::ZeroCoupling, "g_" + std::to_string(j) + " = 0");
  }
}

}  // namespace

Rational normalized_U(const VerdeStarData& d, long n, const Rational& t) {
  require_couplings(d, n);
  const Rational hn = eigen_h(d, n);
  Rational sum(1);
  Rational term(1);
  for (long j = 0; j < n; ++j) {
    term *= (hn - eigen_h(d, j)) * (t - node_x(d, j)) / coupling_g(d, j + 1);
    sum += term;
  }
  return sum;
}

Rational dual_normalized_U(const VerdeStarData& d, long m, const Rational& y) {
  require_couplings(d, m);
  const Rational xm = node_x(d, m);
  Rational sum(1);
  Rational term(1);
  for (long j = 0; j < m; ++j) {
    term *= (xm - node_x(d, j)) * (y - eigen_h(d, j)) / coupling_g(d, j + 1);
    sum += term;
  }
  return sum;
}

std::vector<Rational> to_newton(const VerdeStarData& d, const Poly& p) {
  // f_k is the remainder of the k-th quotient at x_k (synthetic division).
  std::vector<Rational> cur = p.coeffs();
  std::vector<Rational> f;
  for (long k = 0; !cur.empty(); ++k) {
    const Rational xk = node_x(d, k);
    std::vector<Rational> quot(cur.size() - 1);
    Rational acc;
    for (std::size_t i = cur.size(); i-- > 0;) {
      acc = acc * xk + cur[i];
      if (i > 0) quot[i - 1] = acc;
    }
    f.push_back(acc);
    cur = std::move(quot);
  }
  while (!f.empty() && f.back().is_zero()) f.pop_back();
  return f;
}

Poly from_newton(const VerdeStarData& d, const std::vector<Rational>& f) {
  Poly acc;
  for (std::size_t k = f.size(); k-- > 0;) {
    acc *= Poly(std::vector<Rational>{-node_x(d, static_cast<long>(k)), 1});
    acc += Poly(f[k]);
  }
  return acc;
}

Poly apply_L(const VerdeStarData& d, const Poly& p) {
  const std::vector<Rational> f = to_newton(d, p);
  std::vector<Rational> out(f.size());
  for (std::size_t n = 0; n < f.size(); ++n) {
    out[n] += eigen_h(d, static_cast<long>(n)) * f[n];
    if (n > 0) out[n - 1] += coupling_g(d, static_cast<long>(n)) * f[n];
  }
  return from_newton(d, out);
}

VerdeStarData dual_data(const VerdeStarData& d) {
  return make_data(d.q, d.b1, d.b2, d.a1, d.a2, d.d1, d.d2, d.degenerate, d.max_degree);
}

VerdeStarData q_inverse_exchange(const VerdeStarData& d) {
  return make_data(d.q.inverse(), d.a2, d.a1, d.b2, d.b1, d.d2, d.d1, d.degenerate, d.max_degree);
}

VerdeStarData scale(const VerdeStarData& d, const Rational& mu, const Rational& rho) {
  if (mu.is_zero() || rho.is_zero()) throw Error(Errc::InvalidParameters, "scale factors must be nonzero");
  const Rational mr = mu * rho;
  return make_data(d.q, d.a1 * mu, d.a2 * mu, d.b1 * rho, d.b2 * rho, d.d1 * mr, d.d2 * mr, d.degenerate,
                   d.max_degree);
}

Rational random_rational(std::mt19937_64& rng, int bound) {
  std::uniform_int_distribution<int> num(-bound, bound);
  std::uniform_int_distribution<int> den(1, bound);
  for (;;) {
    const int p = num(rng);
    if (p != 0) return Rational(p, den(rng));
  }
}

VerdeStarData random_data(std::mt19937_64& rng, int max_degree) {
  for (;;) {
    const Rational q = random_rational(rng);
    if (q == 1 || q == -1) continue;
    Rational v[6];
    for (auto& x : v) x = random_rational(rng);
    try {
      VerdeStarData d = make_data(q, v[0], v[1], v[2], v[3], v[4], v[5], false, max_degree);
      dual_data(d);
      bool ok = true;
      for (long k = 1; k <= max_degree && ok; ++k) ok = !coupling_g(d, k).is_zero();
      if (ok) return d;
    } catch (const Error&) {
    }
  }
}

nlohmann::ordered_json to_json(const VerdeStarData& d) {
  nlohmann::ordered_json j;
  j["q"] = d.q.str();
  j["a1"] = d.a1.str();
  j["a2"] = d.a2.str();
  j["b1"] = d.b1.str();
  j["b2"] = d.b2.str();
  j["d0"] = d.d0.str();
  j["d1"] = d.d1.str();
  j["d2"] = d.d2.str();
  j["d3"] = d.d3.str();
  j["d4"] = d.d4.str();
  j["degenerate"] = d.degenerate;
  return j;
}

VerdeStarData data_from_json(const nlohmann::json& j) {
  try {
    auto r = [&](const char* k) { return Rational::parse(j.at(k).get<std::string>()); };
    VerdeStarData d;
    d.q = r("q");
    d.a1 = r("a1");
    d.a2 = r("a2");
    d.b1 = r("b1");
    d.b2 = r("b2");
    d.d0 = r("d0");
    d.d1 = r("d1");
    d.d2 = r("d2");
    d.d3 = r("d3");
    d.d4 = r("d4");
    d.degenerate = j.value("degenerate", false);
    return validate(d);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
}

}  // namespace qzs
