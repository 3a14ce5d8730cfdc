#include "efpoly/rational.hpp"

#include <cctype>
#include <functional>
#include <ostream>

#include "efpoly/errors.hpp"

namespace efpoly {

UnboundedPolyhedron::UnboundedPolyhedron(const std::string& what, std::vector<Rational> ray)
    : PreconditionViolation(what), ray_(std::move(ray)) {}

const std::vector<Rational>& UnboundedPolyhedron::ray() const noexcept { return ray_; }

ParseError::ParseError(const std::string& message, int line, int column)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ", column " +
                                        std::to_string(column) + ": " + message
                                  : message),
      line_(line),
      column_(column) {}

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw std::domain_error("Rational: zero denominator");
  value_ = mpq_class(numerator, 1);
  value_ /= denominator;
}

Rational::Rational(const mpq_class& value) : value_(value) { value_.canonicalize(); }

Rational::Rational(mpz_class numerator, mpz_class denominator) {
  if (denominator == 0) throw std::domain_error("Rational: zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  std::string_view num = text;
  std::string_view den;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
    if (!all_digits(den))
      throw ParseError("malformed rational '" + std::string(text) + "'", 0, 0);
  }
  std::string_view digits = num;
  if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
  if (!all_digits(digits))
    throw ParseError("malformed rational '" + std::string(text) + "'", 0, 0);

  mpz_class n(std::string(num), 10);
  mpz_class d = den.empty() ? mpz_class(1) : mpz_class(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'", 0, 0);
  return Rational(std::move(n), std::move(d));
}

std::string Rational::to_string() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::reciprocal() const {
  if (is_zero()) throw std::domain_error("Rational: reciprocal of zero");
  return Rational(mpq_class(1 / value_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  value_ /= o.value_;
  return *this;
}

void Rational::sub_mul(const Rational& a, const Rational& b) {
  thread_local mpq_class scratch;
  mpq_mul(scratch.get_mpq_t(), a.value_.get_mpq_t(), b.value_.get_mpq_t());
  mpq_sub(value_.get_mpq_t(), value_.get_mpq_t(), scratch.get_mpq_t());
}

void Rational::add_mul(const Rational& a, const Rational& b) {
  thread_local mpq_class scratch;
  mpq_mul(scratch.get_mpq_t(), a.value_.get_mpq_t(), b.value_.get_mpq_t());
  mpq_add(value_.get_mpq_t(), value_.get_mpq_t(), scratch.get_mpq_t());
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Rational dot(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size())
    throw DimensionMismatch("dot: lengths " + std::to_string(a.size()) + " and " +
                            std::to_string(b.size()));
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) s.add_mul(a[i], b[i]);
  return s;
}

bool is_zero(const RatVector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

std::string to_string(const RatVector& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    out += v[i].to_string();
  }
  return out;
}

Rational primitive_scale(const RatVector& v) {
  mpz_class lcm_den = 1;
  for (const auto& x : v)
    if (!x.is_zero()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.gmp().get_den_mpz_t());
  mpz_class g = 0;
  for (const auto& x : v) {
    if (x.is_zero()) continue;
    mpz_class scaled = x.gmp().get_num() * (lcm_den / x.gmp().get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), scaled.get_mpz_t());
  }
  if (g == 0) return Rational(1);
  return Rational(lcm_den, g);
}

RatVector primitive_integer(const RatVector& v) {
  const Rational f = primitive_scale(v);
  RatVector out = v;
  for (auto& x : out) x *= f;
  return out;
}

}  // namespace efpoly

std::size_t std::hash<efpoly::Rational>::operator()(const efpoly::Rational& r) const noexcept {
  const auto n = std::hash<std::string>{}(r.gmp().get_num().get_str(16));
  const auto d = std::hash<std::string>{}(r.gmp().get_den().get_str(16));
  return n ^ (d * 0x9e3779b97f4a7c15ULL);
}
