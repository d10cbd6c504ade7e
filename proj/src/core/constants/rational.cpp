#include "constants/rational.hpp"

#include <cmath>

#include "common/errors.hpp"

namespace tauratio::constants {
namespace {

mpz_class from_int64(std::int64_t v) {
  mpz_class z;
  mpz_set_si(z.get_mpz_t(), v);
  return z;
}

mpz_class from_uint64(std::uint64_t v) {
  mpz_class z;
  mpz_import(z.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return z;
}

}  // namespace

Rational::Rational(std::int64_t n) : q_(from_int64(n)) {}

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw DomainError("Rational: zero denominator");
  q_ = mpq_class(from_int64(num), from_int64(den));
  q_.canonicalize();
}

Rational Rational::from_u64(std::uint64_t num, std::uint64_t den) {
  if (den == 0) throw DomainError("Rational: zero denominator");
  Rational r;
  r.q_ = mpq_class(from_uint64(num), from_uint64(den));
  r.q_.canonicalize();
  return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
  q_ += rhs.q_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  q_ -= rhs.q_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  q_ *= rhs.q_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (sgn(rhs.q_) == 0) throw DomainError("Rational: division by zero");
  q_ /= rhs.q_;
  return *this;
}

Rational Rational::operator-() const {
  Rational r;
  r.q_ = -q_;
  return r;
}

bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const int c = cmp(a.q_, b.q_);
  return c < 0 ? std::strong_ordering::less
               : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

int Rational::sign() const { return sgn(q_); }

bool Rational::is_integer() const { return q_.get_den() == 1; }

std::string Rational::numerator() const { return q_.get_num().get_str(); }

std::string Rational::denominator() const { return q_.get_den().get_str(); }

std::string Rational::str() const {
  return is_integer() ? numerator() : numerator() + "/" + denominator();
}

double Rational::to_double() const {
  // mpq_get_d truncates; scale into [2^53, 2^54) so the quotient carries
  // enough bits to round correctly.
  if (sgn(q_) == 0) return 0.0;
  const mpz_class& num = q_.get_num();
  const mpz_class& den = q_.get_den();
  const long shift = 55 - static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2)) +
                     static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2));
  mpz_class scaled = abs(num);
  mpz_class d = den;
  if (shift > 0) {
    scaled <<= static_cast<mp_bitcnt_t>(shift);
  } else {
    d <<= static_cast<mp_bitcnt_t>(-shift);
  }
  mpz_class quotient, remainder;
  mpz_tdiv_qr(quotient.get_mpz_t(), remainder.get_mpz_t(), scaled.get_mpz_t(), d.get_mpz_t());
  // Fold a nonzero remainder into a sticky bit so the final conversion from
  // the quotient (< 2^58, so it fits 64 bits) rounds correctly.
  quotient <<= 1;
  if (remainder != 0) quotient += 1;
  const double magnitude = std::ldexp(static_cast<double>(mpz_get_ui(quotient.get_mpz_t())), -static_cast<int>(shift) - 1);
  return num < 0 ? -magnitude : magnitude;
}

}  // namespace tauratio::constants
