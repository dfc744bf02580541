#include "magic/family.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "magic/parallel.hpp"

namespace magic {

namespace {

constexpr std::int64_t kParamLimit = std::int64_t{1} << 60;

void check_params(std::int64_t g, std::int64_t p, const char* who) {
  if (g < 0 || p < 0) {
    throw std::invalid_argument(std::string(who) + ": g and p must be nonnegative");
  }
  if (g > kParamLimit || p > kParamLimit) {
    throw std::out_of_range(std::string(who) + ": parameter exceeds 2^60");
  }
}

void require_primitive(std::int64_t g, std::int64_t p, const char* who) {
  if (!agp_class(g, p).primitive) {
    throw std::invalid_argument(std::string(who) + ": a_(" + std::to_string(g) + "," +
                                std::to_string(p) + ") is not primitive");
  }
}

bool gcd_fails(std::int64_t modulus, std::int64_t s) {
  return std::gcd(modulus, s) != 1 && std::gcd(modulus, s + 1) != 1;
}

// Returns -1, +1 when one bracket lies entirely below/above the other, 0 on overlap.
int compare_brackets(const CertifiedRoot& a, const CertifiedRoot& b) {
  if (a.hi <= b.lo) return -1;
  if (b.hi <= a.lo) return 1;
  return 0;
}

Filling filling_for(std::int64_t g, std::int64_t p, std::int64_t n) {
  for (const auto& v : filled_variants(g, p)) {
    if (v.n == n) return v.filled;
  }
  throw std::logic_error("upper_bound_table: no filling of a_(" + std::to_string(g) + "," +
                         std::to_string(p) + ") has " + std::to_string(n) + " punctures");
}

}  // namespace

FamilyClass agp_class(std::int64_t g, std::int64_t p) {
  check_params(g, p, "agp_class");
  FamilyClass fc;
  fc.g = g;
  fc.p = p;
  fc.cls = {p + g + 1, 2 * p + 1, p - g};
  fc.primitive = std::gcd(2 * g + 1, p + g + 1) == 1;
  return fc;
}

FiberData agp_fiber_closed_form(std::int64_t g, std::int64_t p) {
  check_params(g, p, "agp_fiber_closed_form");
  require_primitive(g, p, "agp_fiber_closed_form");
  const wide_int G = g, P = p;
  FiberData d;
  d.norm = 2 * P + 2 * G + 2;
  d.genus = G;
  d.n_total = 2 * P + 4;
  d.boundary.beta = 2 * P + 1;
  d.prongs_beta = 1;
  if ((p + g) % 2 != 0) {
    d.boundary.alpha = 2;
    d.boundary.gamma = 1;
    d.prongs_alpha = (P + G + 1) / 2;
    d.prongs_gamma = P + 3 * G + 2;
  } else {
    d.boundary.alpha = 1;
    d.boundary.gamma = 2;
    d.prongs_alpha = P + G + 1;
    d.prongs_gamma = (P + 3 * G + 2) / 2;
  }
  return d;
}

bool no_one_prong(std::int64_t g, std::int64_t p) {
  const FiberData d = agp_fiber_closed_form(g, p);
  return d.prongs_alpha > 1 && d.prongs_gamma > 1;
}

CertifiedRoot dilatation_r(std::int64_t g, std::int64_t p, const RootOptions& opts) {
  return unique_root_gt1(b_poly(g, p), opts);
}

std::string Filling::to_string() const {
  if (alpha && gamma) return "alpha+gamma";
  if (alpha) return "alpha";
  if (gamma) return "gamma";
  return "none";
}

std::int64_t punctures_after_filling(std::int64_t g, std::int64_t p, const Filling& filled) {
  const FiberData d = agp_fiber_closed_form(g, p);
  wide_int n = d.n_total;
  if (filled.alpha) n -= d.boundary.alpha;
  if (filled.gamma) n -= d.boundary.gamma;
  return static_cast<std::int64_t>(n);
}

std::vector<FilledVariant> filled_variants(std::int64_t g, std::int64_t p) {
  if (!no_one_prong(g, p)) {
    throw std::invalid_argument("filled_variants: a_(" + std::to_string(g) + "," +
                                std::to_string(p) +
                                ") has a 1-pronged alpha or gamma boundary component");
  }
  std::vector<FilledVariant> out;
  for (const Filling f : {Filling{false, false}, Filling{true, false}, Filling{false, true},
                          Filling{true, true}}) {
    out.push_back({punctures_after_filling(g, p, f), f});
  }
  return out;
}

StarResult condition_star(std::int64_t g) {
  if (g < 2) throw std::invalid_argument("condition_star: requires g >= 2");
  const std::int64_t modulus = 2 * g + 1;
  for (std::int64_t s = 0; s <= g; ++s) {
    if (gcd_fails(modulus, s)) return {false, s};
  }
  return {true, std::nullopt};
}

bool condition_star_star(std::int64_t g) {
  if (g < 5) throw std::invalid_argument("condition_star_star: requires g >= 5");
  const std::int64_t modulus = 2 * g + 1;
  for (std::int64_t s = 3; s <= g - 2; ++s) {
    if (gcd_fails(modulus, s)) return false;
  }
  return true;
}

std::vector<BoundRow> upper_bound_table(std::int64_t g, std::int64_t n_min, std::int64_t n_max,
                                        const RootOptions& opts, unsigned jobs) {
  if (g < 2) throw std::invalid_argument("upper_bound_table: requires g >= 2");
  if (n_min < 1 || n_max < n_min) {
    throw std::invalid_argument("upper_bound_table: requires 1 <= n_min <= n_max");
  }

  std::vector<BoundRow> rows;
  std::vector<std::int64_t> usable_p;
  for (std::int64_t n = n_min; n <= n_max; ++n) {
    BoundRow row;
    row.n = n;
    // 2p+1 <= n <= 2p+4
    const std::int64_t p_lo = std::max<std::int64_t>(0, (n - 4 + 1) / 2);
    const std::int64_t p_hi = (n - 1) / 2;
    for (std::int64_t p = p_lo; p <= p_hi; ++p) {
      BoundCandidate c;
      c.p = p;
      c.primitive = agp_class(g, p).primitive;
      c.no_one_prong = c.primitive && no_one_prong(g, p);
      if (c.usable()) usable_p.push_back(p);
      row.candidates.push_back(c);
    }
    rows.push_back(std::move(row));
  }
  std::sort(usable_p.begin(), usable_p.end());
  usable_p.erase(std::unique(usable_p.begin(), usable_p.end()), usable_p.end());

  std::vector<CertifiedRoot> roots(usable_p.size());
  parallel_for(usable_p.size(), jobs,
               [&](std::size_t i) { roots[i] = dilatation_r(g, usable_p[i], opts); });
  std::map<std::int64_t, CertifiedRoot> root_of;
  for (std::size_t i = 0; i < usable_p.size(); ++i) root_of.emplace(usable_p[i], roots[i]);

  RootOptions finer = opts;
  finer.tol = opts.tol / 2;
  for (auto& row : rows) {
    std::optional<std::int64_t> best_p;
    CertifiedRoot best;
    for (const auto& c : row.candidates) {  // ascending p
      if (!c.usable()) continue;
      CertifiedRoot candidate = root_of.at(c.p);
      if (!best_p) {
        best_p = c.p;
        best = candidate;
        continue;
      }
      int order = compare_brackets(candidate, best);
      if (order == 0) {
        candidate = refine_root(b_poly(g, c.p), candidate, finer);
        best = refine_root(b_poly(g, *best_p), best, finer);
        order = compare_brackets(candidate, best);
      }
      if (order < 0) {
        best_p = c.p;
        best = candidate;
      }
    }
    if (best_p) {
      row.record = BoundRecord{g, row.n, best, *best_p, filling_for(g, *best_p, row.n)};
    }
  }
  return rows;
}

}  // namespace magic
