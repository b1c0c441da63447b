#include "qzs/rational.hpp"

#include <cctype>
#include <ostream>

#include "qzs/error.hpp"

namespace qzs {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::ParseError: return "ParseError";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::InvalidBase: return "InvalidBase";
    case Errc::MissingSqrtQ: return "MissingSqrtQ";
    case Errc::NotTerminating: return "NotTerminating";
    case Errc::DenominatorPole: return "DenominatorPole";
    case Errc::DegenerateEigenvalues: return "DegenerateEigenvalues";
    case Errc::AllCouplingsZero: return "AllCouplingsZero";
    case Errc::EigenvalueCollision: return "EigenvalueCollision";
    case Errc::ZeroCoupling: return "ZeroCoupling";
    case Errc::InconsistentAlgebra: return "InconsistentAlgebra";
    case Errc::ConstraintUnsolvable: return "ConstraintUnsolvable";
    case Errc::NotASquare: return "NotASquare";
    case Errc::FlipOfZero: return "FlipOfZero";
    case Errc::RecurrencePole: return "RecurrencePole";
    case Errc::PoleAtZ: return "PoleAtZ";
    case Errc::InvalidParameters: return "InvalidParameters";
    case Errc::TranscriptionMismatch: return "TranscriptionMismatch";
    case Errc::UnknownFamily: return "UnknownFamily";
  }
  return "Unknown";
}

Rational::Rational(long long v) : value_(static_cast<long>(v)) {}

Rational::Rational(long long num, long long den) {
  if (den == 0) throw Error(Errc::DivisionByZero, "zero denominator");
  value_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  value_.canonicalize();
}

Rational::Rational(const mpq_class& v) : value_(v) { value_.canonicalize(); }

namespace {

bool valid_integer(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

mpz_class to_mpz(std::string_view s) {
  if (s[0] == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!valid_integer(num) || !valid_integer(den) || den[0] == '-' || den[0] == '+') {
    throw Error(Errc::ParseError, "malformed rational '" + std::string(text) + "'");
  }
  const mpz_class d = to_mpz(den);
  if (d == 0) throw Error(Errc::DivisionByZero, "zero denominator in '" + std::string(text) + "'");
  mpq_class v(to_mpz(num), d);
  v.canonicalize();
  return Rational(v);
}

std::string Rational::str() const { return value_.get_str(10); }
std::string Rational::numerator_str() const { return value_.get_num().get_str(10); }
std::string Rational::denominator_str() const { return value_.get_den().get_str(10); }

Rational Rational::inverse() const {
  if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
  return Rational(mpq_class(1) / value_);
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational Rational::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(mpq_class(num, den));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(Errc::DivisionByZero, "division by zero");
  value_ /= o.value_;
  return *this;
}

std::size_t Rational::hash() const {
  const std::hash<std::string> h;
  return h(str());
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

bool rational_sqrt(const Rational& r, Rational& root) {
  if (r.sign() < 0) return false;
  const mpz_class& num = r.raw().get_num();
  const mpz_class& den = r.raw().get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return false;
  mpz_class sn;
  mpz_class sd;
  mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
  root = Rational(mpq_class(sn, sd));
  return true;
}

}  // namespace qzs
