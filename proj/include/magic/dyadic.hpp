#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <compare>
#include <cstdint>
#include <string>

namespace magic {

/// Exact dyadic rational mantissa * 2^exponent, kept normalized (odd
/// mantissa, or zero mantissa with zero exponent) so equal values compare
/// equal member-wise.
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(long v);  // NOLINT(google-explicit-constructor)
  Dyadic(mpz_class mantissa, std::int64_t exponent);

  /// Exact conversion; throws std::invalid_argument for non-finite input.
  static Dyadic from_double(double v);
  /// Exact conversion of a finite MPFR value.
  static Dyadic from_mpfr(mpfr_srcptr v);

  const mpz_class& mantissa() const { return mantissa_; }
  std::int64_t exponent() const { return exponent_; }
  int sign() const { return sgn(mantissa_); }
  /// Bits in |mantissa|; an MPFR value of this precision holds it exactly.
  std::size_t significant_bits() const;

  double to_double() const;
  /// Sets `out` to this value, rounding only if out's precision is too small.
  void to_mpfr(mpfr_ptr out, mpfr_rnd_t rnd) const;

  /// Decimal string with `digits` fractional digits, rounded toward -inf
  /// (round_up = false) or +inf (round_up = true).
  std::string to_decimal(int digits, bool round_up) const;
  /// Exact decimal expansion (every dyadic has a finite one).
  std::string to_exact_decimal() const;

  Dyadic operator+(const Dyadic& o) const;
  Dyadic operator-(const Dyadic& o) const;
  Dyadic operator-() const;
  /// Multiplication by 2^k.
  Dyadic scaled(std::int64_t k) const;
  static Dyadic midpoint(const Dyadic& a, const Dyadic& b);

  friend bool operator==(const Dyadic& a, const Dyadic& b) {
    return a.exponent_ == b.exponent_ && a.mantissa_ == b.mantissa_;
  }
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

 private:
  void normalize();

  mpz_class mantissa_ = 0;
  std::int64_t exponent_ = 0;
};

}  // namespace magic
