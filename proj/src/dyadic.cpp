#include "magic/dyadic.hpp"

#include <cmath>
#include <stdexcept>

namespace magic {

namespace {

// a * 2^k for k >= 0.
mpz_class shl(const mpz_class& a, std::int64_t k) {
  mpz_class r;
  mpz_mul_2exp(r.get_mpz_t(), a.get_mpz_t(), static_cast<mp_bitcnt_t>(k));
  return r;
}

std::string with_point(const mpz_class& scaled, int digits) {
  std::string s = mpz_class(abs(scaled)).get_str();
  if (digits > 0) {
    if (s.size() <= static_cast<std::size_t>(digits)) {
      s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
    }
    s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  }
  if (scaled < 0) s.insert(0, "-");
  return s;
}

}  // namespace

Dyadic::Dyadic(long v) : mantissa_(v), exponent_(0) { normalize(); }

Dyadic::Dyadic(mpz_class mantissa, std::int64_t exponent)
    : mantissa_(std::move(mantissa)), exponent_(exponent) {
  normalize();
}

void Dyadic::normalize() {
  if (mantissa_ == 0) {
    exponent_ = 0;
    return;
  }
  const mp_bitcnt_t tz = mpz_scan1(mantissa_.get_mpz_t(), 0);
  if (tz > 0) {
    mpz_tdiv_q_2exp(mantissa_.get_mpz_t(), mantissa_.get_mpz_t(), tz);
    exponent_ += static_cast<std::int64_t>(tz);
  }
}

Dyadic Dyadic::from_double(double v) {
  if (!std::isfinite(v)) throw std::invalid_argument("Dyadic: non-finite double");
  int e = 0;
  const double f = std::frexp(v, &e);
  mpz_class m;
  mpz_set_d(m.get_mpz_t(), std::ldexp(f, 53));  // exact: f has 53 bits
  return Dyadic(std::move(m), static_cast<std::int64_t>(e) - 53);
}

Dyadic Dyadic::from_mpfr(mpfr_srcptr v) {
  if (!mpfr_number_p(v)) throw std::invalid_argument("Dyadic: non-finite MPFR value");
  if (mpfr_zero_p(v)) return Dyadic();
  mpz_class m;
  const mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), v);
  return Dyadic(std::move(m), static_cast<std::int64_t>(e));
}

std::size_t Dyadic::significant_bits() const {
  if (mantissa_ == 0) return 1;
  return mpz_sizeinbase(mantissa_.get_mpz_t(), 2);
}

double Dyadic::to_double() const {
  mpfr_t tmp;
  mpfr_init2(tmp, 53);
  to_mpfr(tmp, MPFR_RNDN);
  const double d = mpfr_get_d(tmp, MPFR_RNDN);
  mpfr_clear(tmp);
  return d;
}

void Dyadic::to_mpfr(mpfr_ptr out, mpfr_rnd_t rnd) const {
  mpfr_set_z_2exp(out, mantissa_.get_mpz_t(), static_cast<mpfr_exp_t>(exponent_), rnd);
}

std::string Dyadic::to_decimal(int digits, bool round_up) const {
  mpz_class pow10;
  mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  mpz_class scaled = mantissa_ * pow10;
  if (exponent_ >= 0) {
    scaled = shl(scaled, exponent_);
  } else {
    const auto k = static_cast<mp_bitcnt_t>(-exponent_);
    if (round_up) {
      mpz_cdiv_q_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), k);
    } else {
      mpz_fdiv_q_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), k);
    }
  }
  return with_point(scaled, digits);
}

std::string Dyadic::to_exact_decimal() const {
  if (exponent_ >= 0) return shl(mantissa_, exponent_).get_str();
  const int digits = static_cast<int>(-exponent_);
  std::string s = to_decimal(digits, false);
  while (!s.empty() && s.back() == '0') s.pop_back();
  if (!s.empty() && s.back() == '.') s.pop_back();
  return s;
}

Dyadic Dyadic::operator+(const Dyadic& o) const {
  const std::int64_t e = std::min(exponent_, o.exponent_);
  return Dyadic(shl(mantissa_, exponent_ - e) + shl(o.mantissa_, o.exponent_ - e), e);
}

Dyadic Dyadic::operator-() const { return Dyadic(-mantissa_, exponent_); }

Dyadic Dyadic::operator-(const Dyadic& o) const { return *this + (-o); }

Dyadic Dyadic::scaled(std::int64_t k) const { return Dyadic(mantissa_, exponent_ + k); }

Dyadic Dyadic::midpoint(const Dyadic& a, const Dyadic& b) { return (a + b).scaled(-1); }

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  const int s = (a - b).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace magic
