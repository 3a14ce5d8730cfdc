#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace efpoly {

/**
 * Exact rational number backed by GMP.
 *
 * The value is kept canonical at all times: denominator > 0 and
 * gcd(|numerator|, denominator) = 1, so two Rationals are equal iff their
 * numerator/denominator pairs are equal.
 *
 * Text form is `p`, `-p` or `p/q` with q > 1 after canonicalisation.
 */
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long numerator, long denominator);
  explicit Rational(const mpq_class& value);
  explicit Rational(mpz_class numerator, mpz_class denominator = 1);

  /// Parses `p`, `-p` or `p/q` (q != 0, sign only on p). Throws ParseError.
  static Rational parse(std::string_view text);

  std::string to_string() const;
  double to_double() const { return value_.get_d(); }

  const mpq_class& gmp() const noexcept { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  int sign() const noexcept { return sgn(value_); }
  bool is_zero() const noexcept { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  Rational abs() const { return Rational(mpq_class(::abs(value_))); }
  Rational reciprocal() const;

  Rational& operator+=(const Rational& o) {
    value_ += o.value_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    value_ -= o.value_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    value_ *= o.value_;
    return *this;
  }
  Rational& operator/=(const Rational& o);

  /// this -= a * b without materialising a temporary Rational.
  void sub_mul(const Rational& a, const Rational& b);
  /// this += a * b without materialising a temporary Rational.
  void add_mul(const Rational& a, const Rational& b);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { return Rational(mpq_class(-value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

using RatVector = std::vector<Rational>;

/// Exact inner product. Throws DimensionMismatch on length mismatch.
Rational dot(const RatVector& a, const RatVector& b);
bool is_zero(const RatVector& v);
/// Space separated rational text, e.g. "1 -2/3 0".
std::string to_string(const RatVector& v);
/// Scales v by a positive factor so that it becomes a primitive integer
/// vector (coprime integer entries). Zero vectors are returned unchanged.
RatVector primitive_integer(const RatVector& v);
/// Positive factor used by primitive_integer: v * factor is primitive integer.
Rational primitive_scale(const RatVector& v);

}  // namespace efpoly

template <>
struct std::hash<efpoly::Rational> {
  std::size_t operator()(const efpoly::Rational& r) const noexcept;
};
