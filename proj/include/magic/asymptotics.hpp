#pragma once

// Finite, certified evidence for the asymptotics of the unique root above 1
// of the polynomial family
//
//   P_m(t) = t^(2m+r+s) - t^(2m+r) - Q(t) t^m - t^u + 1
//
// where Q has positive integer coefficients. B_(g,p) is the member with
// r = 1, s = u = 2g+1, Q = 2 t^(g+1) and m = p. Nothing here claims a
// limit; every table is a finite computation with rigorous error bounds.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "magic/certified.hpp"
#include "magic/dyadic.hpp"
#include "magic/sparse_poly.hpp"

namespace magic {

struct PmFamily {
  std::int64_t r = 0;
  std::int64_t s = 1;
  std::int64_t u = 1;
  SparsePoly q;

  /// Throws std::invalid_argument unless r >= 0, s > 0, u > 0 and Q is
  /// nonzero with every coefficient >= 1.
  void validate() const;
};

/// The family whose m-th member is B_(g,m).
PmFamily b_family(std::int64_t g);

/// P_m in canonical form. Requires m >= 1 and that t^(2m+r+s) with
/// coefficient +1 remains the strict leading term after merging; otherwise
/// throws std::invalid_argument naming the offending exponent.
SparsePoly instantiate(const PmFamily& fam, std::int64_t m);

/// Outward enclosure of m^(c/m) = exp((c/m) log m).
struct RealEnclosure {
  Dyadic lo;
  Dyadic hi;
};
RealEnclosure power_bound(std::int64_t m, double c, std::size_t bits = 256);

enum class Verdict { holds, fails, undetermined };
std::string to_string(Verdict v);

struct BracketRow {
  std::int64_t m = 0;
  CertifiedRoot lambda;
  Verdict lower = Verdict::undetermined;  // m^(c1/m) < lambda_m
  Verdict upper = Verdict::undetermined;  // lambda_m < m^(c2/m)

  bool holds() const { return lower == Verdict::holds && upper == Verdict::holds; }
};

struct BracketReport {
  double c1 = 0.0;
  double c2 = 0.0;
  std::vector<BracketRow> rows;
  /// Largest m in range where the bracket is not certified to hold.
  std::optional<std::int64_t> largest_failure;
  /// Smallest M0 such that the bracket holds for every m in [M0, m_max];
  /// empty when it fails at m_max itself.
  std::optional<std::int64_t> threshold;
  bool holds_on_terminal_segment() const { return threshold.has_value(); }
};

/// Checks m^(c1/m) < lambda_m < m^(c2/m) for m_min <= m <= m_max. A
/// comparison whose root bracket straddles the bound is re-run with the root
/// refined (up to `max_refinements` halvings of tol) before a verdict.
/// Requires 0 < c1 < 1 < c2 and 1 <= m_min <= m_max.
BracketReport bracket_check(const PmFamily& fam, double c1, double c2, std::int64_t m_min,
                            std::int64_t m_max, const RootOptions& opts = {},
                            unsigned jobs = 1, int max_refinements = 40);

enum class Trend { strictly_decreasing, strictly_increasing, none };
std::string to_string(Trend t);

struct RatioRow {
  std::int64_t m = 0;
  std::int64_t n = 0;  // q m + v
  CertifiedRoot lambda;
  /// Enclosure of n log(lambda_m) / log n.
  RealEnclosure ratio;
};

struct RatioTable {
  std::int64_t q = 0;
  std::int64_t v = 0;
  std::vector<RatioRow> rows;
  /// Certified ordering of consecutive ratio enclosures (in list order).
  Trend trend = Trend::none;
  /// |ratio - q| certified to decrease along the list.
  bool deviation_decreasing = false;
};

/// (q m + v) log(lambda_m) / log(q m + v) for each listed m, with outward
/// error bounds from the root bracket. Requires q != 0 and q m + v > 1.
RatioTable ratio_limit_table(const PmFamily& fam, std::int64_t q, std::int64_t v,
                             const std::vector<std::int64_t>& m_list,
                             const RootOptions& opts = {}, unsigned jobs = 1);

}  // namespace magic
