#pragma once

// Sparse univariate integer polynomials in t, and the two polynomial
// families attached to the fibered face Delta.

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "magic/homology.hpp"

namespace magic {

struct Term {
  std::uint64_t exponent = 0;
  mpz_class coefficient;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Input term for make_poly; exponents are signed so that negative ones can
/// be rejected instead of silently wrapping.
struct RawTerm {
  std::int64_t exponent = 0;
  mpz_class coefficient;
};

/// Canonical sparse polynomial: strictly decreasing exponents, no zero
/// coefficients. The zero polynomial has no terms.
class SparsePoly {
 public:
  SparsePoly() = default;

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Throws std::domain_error for the zero polynomial.
  std::uint64_t degree() const;
  const mpz_class& leading_coefficient() const;
  /// Coefficient of t^e (zero when absent).
  mpz_class coefficient(std::uint64_t e) const;
  /// Sum of coefficients, i.e. the exact value at t = 1.
  mpz_class value_at_one() const;

  /// Human-readable form such as "t^6 - t^5 - 2t^3 - t + 1".
  std::string to_string() const;

  friend bool operator==(const SparsePoly&, const SparsePoly&) = default;

 private:
  friend SparsePoly make_poly(std::vector<Term> terms);
  std::vector<Term> terms_;
};

/// Merges like exponents, drops zero coefficients and sorts descending.
/// Throws std::invalid_argument on a negative exponent.
SparsePoly make_poly(std::span<const RawTerm> terms);
SparsePoly make_poly(std::vector<Term> terms);
SparsePoly make_poly(std::initializer_list<std::pair<std::int64_t, long>> terms);

/// Number of sign changes in the coefficient sequence (descending order).
/// Throws std::invalid_argument for the zero polynomial.
std::size_t sign_variations(const SparsePoly& f);

/// Specialization of the Teichmuller polynomial of Delta to a class:
///   t^(x+y-z) - t^x - t^y - t^(x-z) - t^(y-z) + 1.
/// Requires a class in the open cone over Delta.
SparsePoly teichmuller_poly(const FiberedClass& c);

/// B_(g,p)(t) = t^(2p+1) (t^(2g+1) - 1) + 1 - 2 t^(p+g+1) - t^(2g+1).
SparsePoly b_poly(std::int64_t g, std::int64_t p);

}  // namespace magic
