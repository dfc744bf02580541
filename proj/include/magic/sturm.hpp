#pragma once

// Exact real-root counting with Sturm chains over the integers. This is a
// validation oracle for the Descartes-based claims, independent of the
// certified bisection in certified.hpp; it works on dense coefficient vectors
// and is capped at modest degree.

#include <gmpxx.h>

#include <cstddef>
#include <vector>

#include "magic/sparse_poly.hpp"

namespace magic {

inline constexpr std::uint64_t kSturmDegreeCap = 200;

/// A point of the extended real line with a rational finite part.
class ExtendedRational {
 public:
  ExtendedRational(long v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  ExtendedRational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }  // NOLINT
  static ExtendedRational neg_infinity() { return ExtendedRational(-1, 0); }
  static ExtendedRational pos_infinity() { return ExtendedRational(1, 0); }

  /// -1 for -inf, +1 for +inf, 0 for a finite point.
  int infinity() const { return infinity_; }
  const mpq_class& value() const { return value_; }

  bool operator<(const ExtendedRational& o) const;

 private:
  ExtendedRational(int inf, int) : infinity_(inf) {}
  int infinity_ = 0;
  mpq_class value_;
};

/// Dense Sturm chain f, f', -rem(...), ... with every member reduced to its
/// primitive part (positive content, so signs are unchanged). Coefficient
/// vectors are ascending.
class SturmSequence {
 public:
  /// Throws std::length_error above kSturmDegreeCap, std::invalid_argument
  /// for the zero polynomial.
  explicit SturmSequence(const SparsePoly& f);

  const std::vector<std::vector<mpz_class>>& chain() const { return chain_; }
  /// Sign variations of the chain at x, zeros skipped.
  std::size_t variations(const ExtendedRational& x) const;
  /// Distinct real roots in (a, b]; requires a < b.
  std::size_t count(const ExtendedRational& a, const ExtendedRational& b) const;

 private:
  std::vector<std::vector<mpz_class>> chain_;
};

/// Number of distinct real roots of f in (a, b]. Throws std::length_error
/// when deg f exceeds kSturmDegreeCap and std::invalid_argument for a zero
/// polynomial or a >= b.
std::size_t sturm_count(const SparsePoly& f, const ExtendedRational& a,
                        const ExtendedRational& b);

}  // namespace magic
