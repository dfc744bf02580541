#pragma once

// Integer homology of the magic manifold N (exterior of the 3-chain link).
//
// Classes in H_2(N, dN; Z) are written (x, y, z) in the basis alpha, beta,
// gamma of the twice-punctured disks bounded by the three link components.
// The fibered face Delta used throughout has vertices alpha, beta,
// alpha+beta+gamma and -gamma; its open cone is x > 0, y > 0, x > z, y > z.

#include <cstdint>
#include <string>

namespace magic {

/// Signed 128-bit integer used for every quantity derived from a class.
/// Coordinates are bounded by 2^62, so norms, sums and gcds fit with room.
using wide_int = __int128;

std::string to_string(wide_int v);

/// Largest coordinate magnitude accepted by the homology routines.
inline constexpr std::int64_t kMaxCoordinate = std::int64_t{1} << 62;

struct FiberedClass {
  std::int64_t x = 0;
  std::int64_t y = 0;
  std::int64_t z = 0;

  friend bool operator==(const FiberedClass&, const FiberedClass&) = default;
};

std::string to_string(const FiberedClass& c);

/// Boundary-component counts of the fiber on the three cusp tori.
struct BoundaryCounts {
  wide_int alpha = 0;
  wide_int beta = 0;
  wide_int gamma = 0;

  friend bool operator==(const BoundaryCounts&, const BoundaryCounts&) = default;
};

/// Topology of the fiber of a primitive fibered class together with the
/// prong counts of the stable foliation at each boundary component. The
/// foliation has no interior singularities, so boundary prongs are the whole
/// singularity data.
struct FiberData {
  wide_int norm = 0;
  BoundaryCounts boundary;
  wide_int n_total = 0;
  wide_int genus = 0;
  wide_int prongs_alpha = 0;
  wide_int prongs_beta = 0;
  wide_int prongs_gamma = 0;

  friend bool operator==(const FiberData&, const FiberData&) = default;
};

/// Throws std::out_of_range when a coordinate exceeds kMaxCoordinate.
void check_range(const FiberedClass& c);

/// gcd over signed integers, with gcd(0, w) = |w|.
wide_int signed_gcd(wide_int a, wide_int b);

/// Thurston norm on all of H_2(N, dN). The unit ball is the parallelepiped
/// with vertices +-alpha, +-beta, +-gamma, +-(alpha+beta+gamma), so the norm
/// is the largest of its three face functionals in absolute value.
wide_int thurston_norm(const FiberedClass& c);

/// Open cone over the fibered face Delta.
bool in_cone_delta(const FiberedClass& c);

/// gcd(x, y, z) == 1. Throws std::invalid_argument for the zero class.
bool is_primitive(const FiberedClass& c);

/// Number of fiber boundary components on T_alpha, T_beta, T_gamma.
/// Requires a primitive class in the open cone (std::invalid_argument).
BoundaryCounts boundary_counts(const FiberedClass& c);

/// Full fiber data for a primitive class in the open cone.
FiberData fiber_data(const FiberedClass& c);

/// Euler-Poincare balance: sum over boundary components of (2 - prongs)
/// equals 2 * chi(closed-up fiber), i.e. 2 * (n_total - norm).
bool euler_poincare_check(const FiberData& d);

}  // namespace magic
