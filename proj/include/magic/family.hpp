#pragma once

// The two-parameter family a_(g,p) = (p+g+1, 2p+1, p-g) of fibered classes in
// the cone over Delta, and upper bounds for the minimal dilatation
// delta_(g,n) of genus-g surfaces with n punctures obtained from it.
//
// For primitive a_(g,p) the fiber has genus g and 2p+4 boundary components.
// Capping the boundary components on T_alpha, T_gamma or both keeps the
// dilatation whenever none of them is 1-pronged, so r_(g,p) bounds
// delta_(g, 2p+i) for i = 1..4.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "magic/certified.hpp"
#include "magic/homology.hpp"
#include "magic/sparse_poly.hpp"

namespace magic {

struct FamilyClass {
  std::int64_t g = 0;
  std::int64_t p = 0;
  FiberedClass cls;
  bool primitive = false;
};

FamilyClass agp_class(std::int64_t g, std::int64_t p);

/// Fiber data of primitive a_(g,p) from the parity-split closed form
/// (independent of the general gcd formulas in homology.hpp).
FiberData agp_fiber_closed_form(std::int64_t g, std::int64_t p);

/// True iff no boundary component on T_alpha or T_gamma is 1-pronged.
bool no_one_prong(std::int64_t g, std::int64_t p);

/// r_(g,p): the unique root above 1 of B_(g,p).
CertifiedRoot dilatation_r(std::int64_t g, std::int64_t p, const RootOptions& opts = {});

/// Which cusp tori have their fiber boundary components capped off.
struct Filling {
  bool alpha = false;
  bool gamma = false;

  std::string to_string() const;
  friend bool operator==(const Filling&, const Filling&) = default;
};

struct FilledVariant {
  std::int64_t n = 0;  // punctures after filling
  Filling filled;

  friend bool operator==(const FilledVariant&, const FilledVariant&) = default;
};

/// The four fillings {}, {alpha}, {gamma}, {alpha, gamma} with their puncture
/// counts. Requires primitive a_(g,p) without 1-pronged alpha/gamma boundary.
std::vector<FilledVariant> filled_variants(std::int64_t g, std::int64_t p);

/// Puncture count reached by a given filling of a_(g,p).
std::int64_t punctures_after_filling(std::int64_t g, std::int64_t p, const Filling& filled);

struct StarResult {
  bool holds = true;
  std::optional<std::int64_t> witness;  // least failing s
};

/// gcd(2g+1, s) = 1 or gcd(2g+1, s+1) = 1 for every 0 <= s <= g. Requires g >= 2.
StarResult condition_star(std::int64_t g);

/// The same condition restricted to 3 <= s <= g-2. Requires g >= 5.
bool condition_star_star(std::int64_t g);

struct BoundRecord {
  std::int64_t g = 0;
  std::int64_t n = 0;
  CertifiedRoot bound;
  std::int64_t witness_p = 0;
  Filling filled;
};

/// One candidate p for a given n, with the reason it was kept or pruned.
struct BoundCandidate {
  std::int64_t p = 0;
  bool primitive = false;
  bool no_one_prong = false;
  bool usable() const { return primitive && no_one_prong; }
};

struct BoundRow {
  std::int64_t n = 0;
  std::vector<BoundCandidate> candidates;
  std::optional<BoundRecord> record;  // empty: no witness
};

/// Upper bounds delta_(g,n) <= r_(g,p) for n_min <= n <= n_max. Each n is
/// covered by the two p with 2p+1 <= n <= 2p+4; the smaller certified bound
/// among usable candidates wins, ties go to the smaller p. Requires g >= 2
/// and 1 <= n_min <= n_max.
std::vector<BoundRow> upper_bound_table(std::int64_t g, std::int64_t n_min, std::int64_t n_max,
                                        const RootOptions& opts = {}, unsigned jobs = 1);

}  // namespace magic
