#include "magic/certified.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "magic/mpfr_value.hpp"

namespace magic {

namespace {

// Writes an outward enclosure of f(t) into lo/hi. t is itself rounded
// outward to prec bits; every power is monotone in t because t > 0.
void enclose(const SparsePoly& f, const Dyadic& t, mpfr_prec_t prec, MpfrValue& lo,
             MpfrValue& hi) {
  MpfrValue t_lo(prec), t_hi(prec), pow_lo(prec), pow_hi(prec), term_lo(prec), term_hi(prec);
  t.to_mpfr(t_lo.get(), MPFR_RNDD);
  t.to_mpfr(t_hi.get(), MPFR_RNDU);
  mpfr_set_zero(lo.get(), 1);
  mpfr_set_zero(hi.get(), 1);
  for (const auto& term : f.terms()) {
    if (term.exponent == 0) {
      mpfr_set_ui(pow_lo.get(), 1, MPFR_RNDN);
      mpfr_set_ui(pow_hi.get(), 1, MPFR_RNDN);
    } else {
      mpfr_pow_ui(pow_lo.get(), t_lo.get(), term.exponent, MPFR_RNDD);
      mpfr_pow_ui(pow_hi.get(), t_hi.get(), term.exponent, MPFR_RNDU);
    }
    // A negative coefficient swaps which power bounds the product from below.
    const mpz_srcptr c = term.coefficient.get_mpz_t();
    if (term.coefficient > 0) {
      mpfr_mul_z(term_lo.get(), pow_lo.get(), c, MPFR_RNDD);
      mpfr_mul_z(term_hi.get(), pow_hi.get(), c, MPFR_RNDU);
    } else {
      mpfr_mul_z(term_lo.get(), pow_hi.get(), c, MPFR_RNDD);
      mpfr_mul_z(term_hi.get(), pow_lo.get(), c, MPFR_RNDU);
    }
    mpfr_add(lo.get(), lo.get(), term_lo.get(), MPFR_RNDD);
    mpfr_add(hi.get(), hi.get(), term_hi.get(), MPFR_RNDU);
  }
  if (!mpfr_number_p(lo.get()) || !mpfr_number_p(hi.get())) {
    throw std::overflow_error("evaluate_certified: exponent range exceeded at t = " +
                              t.to_decimal(20, false));
  }
}

mpfr_prec_t working_precision(std::size_t bits) {
  if (bits < 2 || bits > static_cast<std::size_t>(MPFR_PREC_MAX)) {
    throw std::length_error("evaluate_certified: precision outside MPFR limits");
  }
  return static_cast<mpfr_prec_t>(bits);
}

std::optional<int> enclosure_sign(const MpfrValue& lo, const MpfrValue& hi) {
  if (mpfr_sgn(lo.get()) > 0) return 1;
  if (mpfr_sgn(hi.get()) < 0) return -1;
  if (mpfr_zero_p(lo.get()) && mpfr_zero_p(hi.get())) return 0;
  return std::nullopt;
}

std::optional<int> sign_at(const SparsePoly& f, const Dyadic& t, std::size_t bits) {
  const mpfr_prec_t prec = working_precision(bits);
  MpfrValue lo(prec), hi(prec);
  enclose(f, t, prec, lo, hi);
  return enclosure_sign(lo, hi);
}

void check_shape(const SparsePoly& f) {
  if (f.is_zero() || f.leading_coefficient() != 1) {
    throw std::invalid_argument("unique_root_gt1: leading coefficient must be +1, got " +
                                f.to_string());
  }
  if (f.value_at_one() >= 0) {
    throw std::invalid_argument("unique_root_gt1: requires f(1) < 0, got " + f.to_string());
  }
}

void check_options(const RootOptions& opts) {
  if (!(opts.tol > 0.0) || !std::isfinite(opts.tol)) {
    throw std::invalid_argument("unique_root_gt1: tol must be positive and finite");
  }
  if (opts.start_bits < 2 || opts.max_bits < opts.start_bits) {
    throw std::invalid_argument("unique_root_gt1: invalid precision range");
  }
}

// Bisects (lo, hi) until hi - lo <= 2 tol and lo > 1. Signs at lo and hi are
// negative and positive respectively on entry.
CertifiedRoot bisect(const SparsePoly& f, Dyadic lo, Dyadic hi, const RootOptions& opts) {
  const Dyadic width_limit = Dyadic::from_double(opts.tol).scaled(1);
  const Dyadic one(1);
  while (hi - lo > width_limit || lo <= one) {
    Dyadic mid = Dyadic::midpoint(lo, hi);
    const int s = certified_sign(f, mid, opts);
    if (s < 0) {
      lo = std::move(mid);
    } else if (s > 0) {
      hi = std::move(mid);
    } else {
      // The root is the dyadic point itself; surround it symmetrically.
      Dyadic half_width = Dyadic(1, static_cast<std::int64_t>(std::floor(std::log2(opts.tol))));
      while (mid - half_width <= lo || mid + half_width >= hi) {
        half_width = half_width.scaled(-1);
      }
      Dyadic new_lo = mid - half_width;
      Dyadic new_hi = mid + half_width;
      if (certified_sign(f, new_lo, opts) >= 0 || certified_sign(f, new_hi, opts) <= 0) {
        throw std::logic_error("unique_root_gt1: root at " + mid.to_exact_decimal() +
                               " is not a simple sign change");
      }
      lo = std::move(new_lo);
      hi = std::move(new_hi);
    }
  }
  CertifiedRoot root;
  root.value = Dyadic::midpoint(lo, hi);
  root.lo = std::move(lo);
  root.hi = std::move(hi);
  root.tol = opts.tol;
  return root;
}

}  // namespace

std::optional<int> Enclosure::sign() const {
  if (lo.sign() > 0) return 1;
  if (hi.sign() < 0) return -1;
  if (lo.sign() == 0 && hi.sign() == 0) return 0;
  return std::nullopt;
}

Enclosure evaluate_certified(const SparsePoly& f, const Dyadic& t, std::size_t bits) {
  if (t.sign() <= 0) throw std::invalid_argument("evaluate_certified: requires t > 0");
  const mpfr_prec_t prec = working_precision(bits);
  MpfrValue lo(prec), hi(prec);
  enclose(f, t, prec, lo, hi);
  return {Dyadic::from_mpfr(lo.get()), Dyadic::from_mpfr(hi.get()), static_cast<std::size_t>(prec)};
}

int certified_sign(const SparsePoly& f, const Dyadic& t, const RootOptions& opts) {
  if (t.sign() <= 0) throw std::invalid_argument("certified_sign: requires t > 0");
  for (std::size_t bits = opts.start_bits;; bits *= 2) {
    const std::size_t capped = std::min(bits, opts.max_bits);
    if (auto s = sign_at(f, t, capped)) return *s;
    if (capped >= opts.max_bits) break;
  }
  throw PrecisionError("sign of " + f.to_string() + " at t = " + t.to_decimal(30, false) +
                       " undetermined at " + std::to_string(opts.max_bits) + " bits");
}

CertifiedRoot unique_root_gt1(const SparsePoly& f, const RootOptions& opts) {
  check_shape(f);
  check_options(opts);
  Dyadic lo(1);
  Dyadic hi(2);
  for (;;) {
    const int s = certified_sign(f, hi, opts);
    if (s > 0) break;
    if (s == 0) {
      // Exact root at a power of two: let bisection handle it from below.
      hi = hi.scaled(1);
      continue;
    }
    lo = hi;
    hi = hi.scaled(1);
  }
  return bisect(f, std::move(lo), std::move(hi), opts);
}

CertifiedRoot refine_root(const SparsePoly& f, const CertifiedRoot& root,
                          const RootOptions& opts) {
  check_shape(f);
  check_options(opts);
  return bisect(f, root.lo, root.hi, opts);
}

bool verify_certificate(const SparsePoly& f, const CertifiedRoot& root,
                        const RootOptions& opts) {
  return Dyadic(1) < root.lo && root.lo < root.hi &&
         certified_sign(f, root.lo, opts) < 0 && certified_sign(f, root.hi, opts) > 0;
}

}  // namespace magic
