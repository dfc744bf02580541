#include "magic/asymptotics.hpp"

#include <cmath>
#include <stdexcept>

#include "magic/mpfr_value.hpp"
#include "magic/parallel.hpp"

namespace magic {

namespace {

constexpr std::int64_t kExponentLimit = std::int64_t{1} << 60;

// Interval of |x - target| for x in [e.lo, e.hi].
RealEnclosure distance_to(const RealEnclosure& e, const Dyadic& target) {
  const Dyadic a = e.lo - target;
  const Dyadic b = e.hi - target;
  if (a.sign() >= 0) return {a, b};
  if (b.sign() <= 0) return {-b, -a};
  return {Dyadic(0), std::max(-a, b)};
}

RealEnclosure ratio_enclosure(std::int64_t n, const CertifiedRoot& lambda, std::size_t bits) {
  const auto prec = static_cast<mpfr_prec_t>(bits);
  MpfrValue log_n_lo(prec), log_n_hi(prec), x(prec), lo(prec), hi(prec);
  mpfr_set_si(x.get(), n, MPFR_RNDN);
  mpfr_log(log_n_lo.get(), x.get(), MPFR_RNDD);
  mpfr_log(log_n_hi.get(), x.get(), MPFR_RNDU);

  // log(lambda) is increasing and positive on the bracket, n > 1.
  lambda.lo.to_mpfr(x.get(), MPFR_RNDD);
  mpfr_log(lo.get(), x.get(), MPFR_RNDD);
  mpfr_mul_si(lo.get(), lo.get(), n, MPFR_RNDD);
  mpfr_div(lo.get(), lo.get(), log_n_hi.get(), MPFR_RNDD);

  lambda.hi.to_mpfr(x.get(), MPFR_RNDU);
  mpfr_log(hi.get(), x.get(), MPFR_RNDU);
  mpfr_mul_si(hi.get(), hi.get(), n, MPFR_RNDU);
  mpfr_div(hi.get(), hi.get(), log_n_lo.get(), MPFR_RNDU);
  return {Dyadic::from_mpfr(lo.get()), Dyadic::from_mpfr(hi.get())};
}

Verdict lower_verdict(const CertifiedRoot& lambda, const RealEnclosure& bound) {
  if (bound.hi <= lambda.lo) return Verdict::holds;
  if (lambda.hi <= bound.lo) return Verdict::fails;
  return Verdict::undetermined;
}

Verdict upper_verdict(const CertifiedRoot& lambda, const RealEnclosure& bound) {
  if (lambda.hi <= bound.lo) return Verdict::holds;
  if (bound.hi <= lambda.lo) return Verdict::fails;
  return Verdict::undetermined;
}

}  // namespace

void PmFamily::validate() const {
  if (r < 0 || s <= 0 || u <= 0) {
    throw std::invalid_argument("PmFamily: requires r >= 0, s > 0, u > 0");
  }
  if (r > kExponentLimit || s > kExponentLimit || u > kExponentLimit) {
    throw std::out_of_range("PmFamily: parameter exceeds 2^60");
  }
  if (q.is_zero()) throw std::invalid_argument("PmFamily: Q must be nonzero");
  for (const auto& t : q.terms()) {
    if (t.coefficient < 1) {
      throw std::invalid_argument("PmFamily: Q must have positive coefficients, got " +
                                  q.to_string());
    }
    if (t.exponent > static_cast<std::uint64_t>(kExponentLimit)) {
      throw std::out_of_range("PmFamily: Q degree exceeds 2^60");
    }
  }
}

PmFamily b_family(std::int64_t g) {
  if (g < 0) throw std::invalid_argument("b_family: requires g >= 0");
  PmFamily fam;
  fam.r = 1;
  fam.s = 2 * g + 1;
  fam.u = 2 * g + 1;
  fam.q = make_poly({{g + 1, 2}});
  return fam;
}

SparsePoly instantiate(const PmFamily& fam, std::int64_t m) {
  fam.validate();
  if (m < 1) throw std::invalid_argument("instantiate: requires m >= 1");
  if (m > kExponentLimit) throw std::out_of_range("instantiate: m exceeds 2^60");
  const std::int64_t top = 2 * m + fam.r + fam.s;
  std::vector<RawTerm> raw = {{top, 1}, {2 * m + fam.r, -1}, {fam.u, -1}, {0, 1}};
  for (const auto& t : fam.q.terms()) {
    raw.push_back({static_cast<std::int64_t>(t.exponent) + m, -t.coefficient});
  }
  SparsePoly f = make_poly(raw);
  if (f.is_zero() || f.degree() != static_cast<std::uint64_t>(top) ||
      f.leading_coefficient() != 1) {
    const std::string offending =
        f.is_zero() ? std::to_string(top) : std::to_string(f.degree());
    throw std::invalid_argument("instantiate: t^" + std::to_string(top) +
                                " is not the strict leading term at m = " + std::to_string(m) +
                                " (offending exponent " + offending + ")");
  }
  return f;
}

RealEnclosure power_bound(std::int64_t m, double c, std::size_t bits) {
  if (m < 1) throw std::invalid_argument("power_bound: requires m >= 1");
  // The rounding directions below assume c >= 0.
  if (c < 0) throw std::invalid_argument("power_bound: requires c >= 0");
  const auto prec = static_cast<mpfr_prec_t>(bits);
  MpfrValue x(prec), lo(prec), hi(prec);
  mpfr_set_si(x.get(), m, MPFR_RNDN);
  mpfr_log(lo.get(), x.get(), MPFR_RNDD);
  mpfr_mul_d(lo.get(), lo.get(), c, MPFR_RNDD);
  mpfr_div_si(lo.get(), lo.get(), m, MPFR_RNDD);
  mpfr_exp(lo.get(), lo.get(), MPFR_RNDD);
  mpfr_log(hi.get(), x.get(), MPFR_RNDU);
  mpfr_mul_d(hi.get(), hi.get(), c, MPFR_RNDU);
  mpfr_div_si(hi.get(), hi.get(), m, MPFR_RNDU);
  mpfr_exp(hi.get(), hi.get(), MPFR_RNDU);
  return {Dyadic::from_mpfr(lo.get()), Dyadic::from_mpfr(hi.get())};
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::fails: return "fails";
    case Verdict::undetermined: return "undetermined";
  }
  return "?";
}

std::string to_string(Trend t) {
  switch (t) {
    case Trend::strictly_decreasing: return "strictly_decreasing";
    case Trend::strictly_increasing: return "strictly_increasing";
    case Trend::none: return "none";
  }
  return "?";
}

BracketReport bracket_check(const PmFamily& fam, double c1, double c2, std::int64_t m_min,
                            std::int64_t m_max, const RootOptions& opts, unsigned jobs,
                            int max_refinements) {
  fam.validate();
  if (!(c1 > 0.0 && c1 < 1.0 && c2 > 1.0 && std::isfinite(c2))) {
    throw std::invalid_argument("bracket_check: requires 0 < c1 < 1 < c2");
  }
  if (m_min < 1 || m_max < m_min) {
    throw std::invalid_argument("bracket_check: requires 1 <= m_min <= m_max");
  }

  BracketReport report;
  report.c1 = c1;
  report.c2 = c2;
  report.rows.resize(static_cast<std::size_t>(m_max - m_min + 1));
  parallel_for(report.rows.size(), jobs, [&](std::size_t i) {
    BracketRow& row = report.rows[i];
    row.m = m_min + static_cast<std::int64_t>(i);
    const SparsePoly f = instantiate(fam, row.m);
    std::size_t bits = 256;
    RootOptions ro = opts;
    row.lambda = unique_root_gt1(f, ro);
    for (int k = 0;; ++k) {
      row.lower = lower_verdict(row.lambda, power_bound(row.m, c1, bits));
      row.upper = upper_verdict(row.lambda, power_bound(row.m, c2, bits));
      if ((row.lower != Verdict::undetermined && row.upper != Verdict::undetermined) ||
          k >= max_refinements) {
        break;
      }
      ro.tol /= 2;
      bits *= 2;
      row.lambda = refine_root(f, row.lambda, ro);
    }
  });

  for (const auto& row : report.rows) {
    if (!row.holds()) report.largest_failure = row.m;
  }
  if (!report.largest_failure) {
    report.threshold = m_min;
  } else if (*report.largest_failure < m_max) {
    report.threshold = *report.largest_failure + 1;
  }
  return report;
}

RatioTable ratio_limit_table(const PmFamily& fam, std::int64_t q, std::int64_t v,
                             const std::vector<std::int64_t>& m_list, const RootOptions& opts,
                             unsigned jobs) {
  fam.validate();
  if (q == 0) throw std::invalid_argument("ratio_limit_table: requires q != 0");
  for (std::int64_t m : m_list) {
    if (q * m + v <= 1) {
      throw std::invalid_argument("ratio_limit_table: q m + v must exceed 1 (m = " +
                                  std::to_string(m) + ")");
    }
  }

  RatioTable table;
  table.q = q;
  table.v = v;
  table.rows.resize(m_list.size());
  parallel_for(m_list.size(), jobs, [&](std::size_t i) {
    RatioRow& row = table.rows[i];
    row.m = m_list[i];
    row.n = q * row.m + v;
    row.lambda = unique_root_gt1(instantiate(fam, row.m), opts);
    row.ratio = ratio_enclosure(row.n, row.lambda, 256);
  });

  if (table.rows.size() >= 2) {
    bool decreasing = true, increasing = true, deviation = true;
    const Dyadic target(static_cast<long>(q));
    for (std::size_t i = 1; i < table.rows.size(); ++i) {
      const auto& prev = table.rows[i - 1].ratio;
      const auto& cur = table.rows[i].ratio;
      decreasing = decreasing && cur.hi < prev.lo;
      increasing = increasing && prev.hi < cur.lo;
      deviation = deviation && distance_to(cur, target).hi < distance_to(prev, target).lo;
    }
    table.trend = decreasing   ? Trend::strictly_decreasing
                  : increasing ? Trend::strictly_increasing
                               : Trend::none;
    table.deviation_decreasing = deviation;
  }
  return table;
}

}  // namespace magic
