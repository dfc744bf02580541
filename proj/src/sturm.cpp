#include "magic/sturm.hpp"

#include <stdexcept>
#include <string>

namespace magic {

namespace {

using Dense = std::vector<mpz_class>;

void trim(Dense& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Dense to_dense(const SparsePoly& f) {
  Dense d(f.degree() + 1, 0);
  for (const auto& t : f.terms()) d[t.exponent] = t.coefficient;
  return d;
}

Dense derivative(const Dense& p) {
  Dense d;
  for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * static_cast<unsigned long>(k));
  trim(d);
  return d;
}

void make_primitive(Dense& p) {
  mpz_class content = 0;
  for (const auto& c : p) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
  if (content > 1) {
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), content.get_mpz_t());
  }
}

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b.
Dense pseudo_remainder(Dense a, const Dense& b) {
  const std::size_t db = b.size() - 1;
  const mpz_class& lead = b.back();
  std::size_t steps = a.size() - db;
  while (a.size() >= b.size()) {
    const mpz_class q = a.back();
    const std::size_t shift = a.size() - b.size();
    for (auto& c : a) c *= lead;
    for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] -= q * b[k];
    trim(a);
    --steps;
  }
  // Account for skipped steps so the multiplier is exactly lc^(delta+1).
  for (; steps > 0; --steps) {
    for (auto& c : a) c *= lead;
  }
  return a;
}

// Sign of p at a finite rational n/d (d > 0), evaluated homogeneously as
// sum c_k n^k d^(deg - k) so that no division is needed.
int sign_at(const Dense& p, const mpq_class& x) {
  if (p.empty()) return 0;
  const mpz_class& num = x.get_num();
  const mpz_class& den = x.get_den();
  mpz_class acc = p.back();
  mpz_class den_pow = 1;
  for (std::size_t k = p.size() - 1; k-- > 0;) {
    den_pow *= den;
    acc = acc * num + p[k] * den_pow;
  }
  return sgn(acc);
}

int sign_at(const Dense& p, const ExtendedRational& x) {
  if (x.infinity() == 0) return sign_at(p, x.value());
  const int lead = sgn(p.back());
  const bool odd = (p.size() - 1) % 2 == 1;
  return (x.infinity() < 0 && odd) ? -lead : lead;
}

}  // namespace

std::size_t SturmSequence::variations(const ExtendedRational& x) const {
  std::size_t changes = 0;
  int previous = 0;
  for (const auto& p : chain_) {
    const int s = sign_at(p, x);
    if (s == 0) continue;
    if (previous != 0 && s != previous) ++changes;
    previous = s;
  }
  return changes;
}

bool ExtendedRational::operator<(const ExtendedRational& o) const {
  if (infinity_ != o.infinity_) return infinity_ < o.infinity_;
  if (infinity_ != 0) return false;
  return value_ < o.value_;
}

SturmSequence::SturmSequence(const SparsePoly& f) {
  if (f.is_zero()) throw std::invalid_argument("SturmSequence: zero polynomial");
  if (f.degree() > kSturmDegreeCap) {
    throw std::length_error("SturmSequence: degree " + std::to_string(f.degree()) +
                            " exceeds the oracle cap " + std::to_string(kSturmDegreeCap));
  }
  std::vector<Dense>& chain = chain_;
  Dense p0 = to_dense(f);
  Dense p1 = derivative(p0);
  make_primitive(p0);
  chain.push_back(p0);
  if (p1.empty()) return;
  make_primitive(p1);
  chain.push_back(p1);
  for (;;) {
    const Dense& a = chain[chain.size() - 2];
    const Dense& b = chain.back();
    if (b.size() == 1) break;
    Dense r = pseudo_remainder(a, b);
    if (r.empty()) break;
    // prem = lc(b)^(delta+1) * rem; Sturm wants -(positive multiple of rem).
    const std::size_t delta_plus_one = a.size() - b.size() + 1;
    const bool multiplier_negative = b.back() < 0 && delta_plus_one % 2 == 1;
    if (!multiplier_negative) {
      for (auto& c : r) c = -c;
    }
    make_primitive(r);
    chain.push_back(std::move(r));
  }
}

std::size_t SturmSequence::count(const ExtendedRational& a, const ExtendedRational& b) const {
  if (!(a < b)) throw std::invalid_argument("sturm_count: requires a < b");
  const std::size_t va = variations(a);
  const std::size_t vb = variations(b);
  if (vb > va) throw std::logic_error("sturm_count: variation count increased");
  return va - vb;
}

std::size_t sturm_count(const SparsePoly& f, const ExtendedRational& a,
                        const ExtendedRational& b) {
  if (!(a < b)) throw std::invalid_argument("sturm_count: requires a < b");
  return SturmSequence(f).count(a, b);
}

}  // namespace magic
