#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "magic/cli/commands.hpp"
#include "magic/family.hpp"
#include "magic/homology.hpp"
#include "magic/sparse_poly.hpp"
#include "magic/sturm.hpp"

namespace magic::cli {

namespace {

struct Tally {
  std::int64_t cases = 0;
  std::int64_t failures = 0;
  std::string first_failure;

  void check(bool ok, const std::function<std::string()>& what) {
    ++cases;
    if (ok) return;
    if (failures++ == 0) first_failure = what();
  }
};

template <class F>
void for_each_primitive_cone_class(std::int64_t max_norm, F&& visit) {
  for (std::int64_t norm = 1; norm <= max_norm; ++norm) {
    for (std::int64_t x = 1; x < norm; ++x) {
      for (std::int64_t y = 1; y < norm; ++y) {
        const FiberedClass c{x, y, x + y - norm};
        if (is_primitive(c)) visit(c);
      }
    }
  }
}

// Norm as the gauge of conv(+-alpha, +-beta, +-gamma, +-(alpha+beta+gamma)).
std::int64_t gauge_norm(const FiberedClass& c) {
  std::int64_t best = INT64_MAX;
  for (std::int64_t s : {std::int64_t{0}, c.x, c.y, c.z}) {
    best = std::min(best, std::abs(c.x - s) + std::abs(c.y - s) + std::abs(c.z - s) + std::abs(s));
  }
  return best;
}

Tally suite_homology(const GlobalOptions&) {
  Tally t;
  for_each_primitive_cone_class(40, [&](const FiberedClass& c) {
    const FiberData d = fiber_data(c);
    t.check(euler_poincare_check(d) && d.genus >= 0 && thurston_norm(c) == gauge_norm(c) &&
                d.norm == 2 * d.genus - 2 + d.n_total,
            [&] { return to_string(c); });
  });
  return t;
}

Tally suite_poly(const GlobalOptions&) {
  Tally t;
  for (std::int64_t g = 0; g <= 50; ++g) {
    for (std::int64_t p = 0; p <= 50; ++p) {
      t.check(b_poly(g, p) == teichmuller_poly(agp_class(g, p).cls), [&] {
        return "B(" + std::to_string(g) + "," + std::to_string(p) + ")";
      });
    }
  }
  return t;
}

Tally suite_family(const GlobalOptions&) {
  Tally t;
  for (std::int64_t g = 0; g <= 60; ++g) {
    for (std::int64_t p = 0; p <= 60; ++p) {
      const FamilyClass fc = agp_class(g, p);
      if (!fc.primitive) continue;
      bool ok = agp_fiber_closed_form(g, p) == fiber_data(fc.cls);
      if (ok && no_one_prong(g, p)) {
        std::vector<std::int64_t> ns;
        for (const auto& v : filled_variants(g, p)) ns.push_back(v.n);
        std::sort(ns.begin(), ns.end());
        ok = ns == std::vector<std::int64_t>{2 * p + 1, 2 * p + 2, 2 * p + 3, 2 * p + 4};
      }
      t.check(ok, [&] { return "a(" + std::to_string(g) + "," + std::to_string(p) + ")"; });
    }
  }
  return t;
}

Tally suite_roots(const GlobalOptions& opts) {
  Tally t;
  const RootOptions ro = opts.root_options();
  for_each_primitive_cone_class(24, [&](const FiberedClass& c) {
    const SparsePoly f = teichmuller_poly(c);
    const SturmSequence sturm(f);
    bool ok = sign_variations(f) == 2 &&
              sturm.count(0, ExtendedRational::pos_infinity()) == 2 &&
              sturm.count(1, ExtendedRational::pos_infinity()) == 1;
    if (ok) {
      const CertifiedRoot root = unique_root_gt1(f, ro);
      auto exact = [](const Dyadic& d) {
        mpq_class q(d.mantissa());
        if (d.exponent() >= 0) {
          mpq_mul_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(d.exponent()));
        } else {
          mpq_div_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(-d.exponent()));
        }
        return ExtendedRational(q);
      };
      ok = sturm.count(exact(root.lo), exact(root.hi)) == 1 &&
           sturm.count(1, exact(root.lo)) == 0;
    }
    t.check(ok, [&] { return to_string(c); });
  });
  return t;
}

Tally suite_star(const GlobalOptions&) {
  Tally t;
  for (std::int64_t g = 5; g <= 10000; ++g) {
    t.check(condition_star(g).holds == condition_star_star(g),
            [&] { return "g=" + std::to_string(g) + " restricted range"; });
  }
  for (std::int64_t g = 2; g <= 2000; ++g) {
    const std::int64_t m = 2 * g + 1;
    bool full = true;
    for (std::int64_t s = 0; s <= 2 * g && full; ++s) {
      full = std::gcd(m, s) == 1 || std::gcd(m, s + 1) == 1;
    }
    t.check(condition_star(g).holds == full,
            [&] { return "g=" + std::to_string(g) + " full period"; });
  }
  const auto seven = condition_star(7);
  t.check(!seven.holds && seven.witness == 5, [] { return "g=7 witness"; });
  t.check(condition_star(4).holds, [] { return "g=4"; });
  return t;
}

Tally suite_bounds(const GlobalOptions& opts) {
  Tally t;
  for (std::int64_t g : {2, 3, 5, 6, 8, 9}) {
    for (const auto& row : upper_bound_table(g, 3, 200, opts.root_options(), opts.jobs)) {
      bool ok = row.record.has_value();
      if (ok) {
        const auto& rec = *row.record;
        ok = Dyadic(1) < rec.bound.lo && agp_class(g, rec.witness_p).primitive &&
             punctures_after_filling(g, rec.witness_p, rec.filled) == row.n;
      }
      t.check(ok, [&] { return "g=" + std::to_string(g) + " n=" + std::to_string(row.n); });
    }
  }
  return t;
}

using Suite = Tally (*)(const GlobalOptions&);

const std::vector<std::pair<std::string, Suite>>& registry() {
  static const std::vector<std::pair<std::string, Suite>> suites = {
      {"homology", suite_homology}, {"poly", suite_poly},   {"family", suite_family},
      {"roots", suite_roots},       {"star", suite_star},   {"bounds", suite_bounds},
  };
  return suites;
}

}  // namespace

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n = {"all"};
    for (const auto& [name, fn] : registry()) n.push_back(name);
    return n;
  }();
  return names;
}

CommandResult cmd_verify(const std::string& suite, const GlobalOptions& opts) {
  CommandResult res;
  Record& r = res.record;
  r.command = "verify";
  r.tolerances = opts.tolerances();
  r.columns = columns_for("verify");
  r.inputs = {{"suite", suite}};

  bool found = false;
  bool all_passed = true;
  for (const auto& [name, fn] : registry()) {
    if (suite != "all" && suite != name) continue;
    found = true;
    const Tally t = fn(opts);
    const bool passed = t.failures == 0;
    all_passed = all_passed && passed;
    r.rows.push_back({name, t.cases, t.failures, passed,
                      passed ? Json(nullptr) : Json(t.first_failure)});
  }
  if (!found) throw std::invalid_argument("verify: unknown suite '" + suite + "'");
  r.summary["passed"] = all_passed;
  if (!all_passed) {
    res.exit_code = kVerifyFailed;
    res.diagnostic = "verify: at least one suite failed";
  }
  return res;
}

}  // namespace magic::cli
