#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace tauratio::constants {

// Exact fraction with arbitrary-precision numerator and denominator, always
// in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t n);  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den);
  static Rational from_u64(std::uint64_t num, std::uint64_t den = 1);

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);  // throws DomainError on zero

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  int sign() const;
  bool is_integer() const;
  std::string numerator() const;
  std::string denominator() const;

  // "n" for integers, "n/d" otherwise.
  std::string str() const;

  // Nearest binary64 value.
  double to_double() const;

 private:
  mpq_class q_{0};
};

}  // namespace tauratio::constants
