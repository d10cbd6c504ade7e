#pragma once

#include <cmath>
#include <cstdint>

#include "common/errors.hpp"
#include "common/int128.hpp"

namespace tauratio {

// Neumaier's variant of Kahan summation.
class CompensatedSum {
 public:
  void add(double term) noexcept {
    const double t = sum_ + term;
    if (std::fabs(sum_) >= std::fabs(term)) {
      compensation_ += (sum_ - t) + term;
    } else {
      compensation_ += (term - t) + sum_;
    }
    sum_ = t;
  }

  CompensatedSum& operator+=(const CompensatedSum& other) noexcept {
    add(other.sum_);
    add(other.compensation_);
    return *this;
  }

  double value() const noexcept { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

// Fixed-point accumulator with 64 fractional bits held in a signed 128-bit
// integer. Each term is truncated to a multiple of 2^-64 on entry; after that
// addition is exact, so totals do not depend on grouping or order. Terms must
// satisfy |term| < 2^52 and the running total must stay below 2^62.
class FixedSum {
 public:
  using Raw = i128;

  void add(double term) {
    if (term == 0.0) return;
    if (!std::isfinite(term)) throw DomainError("FixedSum: non-finite term");
    int exponent = 0;
    const double mantissa = std::frexp(term, &exponent);  // |mantissa| in [0.5, 1)
    if (exponent > 52) throw OverflowError("FixedSum: term too large");
    // term = m * 2^(exponent - 53) with m a 53-bit integer.
    const auto m = static_cast<std::int64_t>(std::ldexp(mantissa, 53));
    const int shift = exponent - 53 + kFractionBits;
    if (shift >= 0) {
      acc_ += static_cast<Raw>(m) << shift;
    } else if (shift > -64) {
      acc_ += static_cast<Raw>(m) >> -shift;
    }
  }

  void add_raw(Raw raw) noexcept { acc_ += raw; }

  FixedSum& operator+=(const FixedSum& other) noexcept {
    acc_ += other.acc_;
    return *this;
  }

  friend FixedSum operator+(FixedSum lhs, const FixedSum& rhs) noexcept { return lhs += rhs; }
  friend FixedSum operator-(FixedSum lhs, const FixedSum& rhs) noexcept {
    lhs.acc_ -= rhs.acc_;
    return lhs;
  }
  friend bool operator==(const FixedSum&, const FixedSum&) = default;

  Raw raw() const noexcept { return acc_; }

  double value() const noexcept { return std::ldexp(static_cast<double>(acc_), -kFractionBits); }

 private:
  static constexpr int kFractionBits = 64;
  Raw acc_ = 0;
};

}  // namespace tauratio
