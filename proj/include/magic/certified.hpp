#pragma once

// Sign-certified evaluation of sparse polynomials at dyadic points and
// certified isolation of the unique root greater than one.

#include <cstddef>
#include <optional>
#include <stdexcept>

#include "magic/dyadic.hpp"
#include "magic/sparse_poly.hpp"

namespace magic {

/// Raised when a sign cannot be certified below the precision ceiling.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultStartBits = 128;
inline constexpr std::size_t kDefaultMaxBits = std::size_t{1} << 20;
inline constexpr double kDefaultTol = 1e-12;

struct RootOptions {
  double tol = kDefaultTol;
  std::size_t start_bits = kDefaultStartBits;
  std::size_t max_bits = kDefaultMaxBits;
};

/// Outward-rounded enclosure [lo, hi] of f(t).
struct Enclosure {
  Dyadic lo;
  Dyadic hi;
  std::size_t bits = 0;

  /// -1, 0 or +1 when the enclosure excludes zero or is exactly zero;
  /// std::nullopt ("undetermined") otherwise.
  std::optional<int> sign() const;
};

/// Interval evaluation of f at t > 0 with `bits` bits of working precision:
/// t and every intermediate result are rounded outward. Once `bits` covers
/// the exact value the enclosure collapses to a point. Throws
/// std::invalid_argument if t <= 0.
Enclosure evaluate_certified(const SparsePoly& f, const Dyadic& t, std::size_t bits);

/// Certified sign of f(t), doubling the precision from opts.start_bits while
/// undetermined. Throws PrecisionError past opts.max_bits.
int certified_sign(const SparsePoly& f, const Dyadic& t, const RootOptions& opts);

/// Bracket (lo, hi) around the unique root of f above 1, with f(lo) < 0 and
/// f(hi) > 0 certified, 1 < lo < hi and hi - lo <= 2 * tol.
struct CertifiedRoot {
  Dyadic lo;
  Dyadic hi;
  Dyadic value;  // midpoint of the bracket
  double tol = 0.0;

  double approx() const { return value.to_double(); }
  bool contains(const Dyadic& t) const { return lo < t && t < hi; }
  friend bool operator==(const CertifiedRoot&, const CertifiedRoot&) = default;
};

/// Brackets by doubling upward from (1, 2], then bisects on the dyadic grid.
/// Every accepted step is sign-certified, so the bracket does not depend on
/// the precision path. Requires a leading coefficient of +1 and f(1) < 0
/// (std::invalid_argument otherwise).
CertifiedRoot unique_root_gt1(const SparsePoly& f, const RootOptions& opts = {});

/// Continues bisection of an existing bracket down to opts.tol. The result
/// equals unique_root_gt1(f, opts) and is nested in `root`.
CertifiedRoot refine_root(const SparsePoly& f, const CertifiedRoot& root,
                          const RootOptions& opts);

/// Re-evaluates the sign certificates at root.lo and root.hi.
bool verify_certificate(const SparsePoly& f, const CertifiedRoot& root,
                        const RootOptions& opts = {});

}  // namespace magic
