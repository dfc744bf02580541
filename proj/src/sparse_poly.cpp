#include "magic/sparse_poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace magic {

namespace {

std::vector<Term> canonicalize(std::vector<Term> terms) {
  std::stable_sort(terms.begin(), terms.end(),
                   [](const Term& a, const Term& b) { return a.exponent > b.exponent; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().exponent == t.exponent) {
      out.back().coefficient += t.coefficient;
    } else {
      out.push_back(std::move(t));
    }
  }
  std::erase_if(out, [](const Term& t) { return t.coefficient == 0; });
  return out;
}

}  // namespace

std::uint64_t SparsePoly::degree() const {
  if (terms_.empty()) throw std::domain_error("degree of the zero polynomial");
  return terms_.front().exponent;
}

const mpz_class& SparsePoly::leading_coefficient() const {
  if (terms_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
  return terms_.front().coefficient;
}

mpz_class SparsePoly::coefficient(std::uint64_t e) const {
  for (const auto& t : terms_) {
    if (t.exponent == e) return t.coefficient;
  }
  return 0;
}

mpz_class SparsePoly::value_at_one() const {
  mpz_class sum = 0;
  for (const auto& t : terms_) sum += t.coefficient;
  return sum;
}

std::string SparsePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& t : terms_) {
    const bool negative = t.coefficient < 0;
    const mpz_class mag = abs(t.coefficient);
    if (s.empty()) {
      if (negative) s += "-";
    } else {
      s += negative ? " - " : " + ";
    }
    if (mag != 1 || t.exponent == 0) s += mag.get_str();
    if (t.exponent >= 1) s += "t";
    if (t.exponent >= 2) s += "^" + std::to_string(t.exponent);
  }
  return s;
}

SparsePoly make_poly(std::span<const RawTerm> terms) {
  std::vector<Term> raw;
  raw.reserve(terms.size());
  for (const auto& t : terms) {
    if (t.exponent < 0) {
      throw std::invalid_argument("make_poly: negative exponent " + std::to_string(t.exponent));
    }
    raw.push_back({static_cast<std::uint64_t>(t.exponent), t.coefficient});
  }
  return make_poly(std::move(raw));
}

SparsePoly make_poly(std::vector<Term> terms) {
  SparsePoly f;
  f.terms_ = canonicalize(std::move(terms));
  return f;
}

SparsePoly make_poly(std::initializer_list<std::pair<std::int64_t, long>> terms) {
  std::vector<RawTerm> raw;
  raw.reserve(terms.size());
  for (const auto& [e, c] : terms) raw.push_back({e, mpz_class(c)});
  return make_poly(raw);
}

std::size_t sign_variations(const SparsePoly& f) {
  if (f.is_zero()) throw std::invalid_argument("sign_variations: zero polynomial");
  std::size_t changes = 0;
  int previous = 0;
  for (const auto& t : f.terms()) {
    const int s = sgn(t.coefficient);
    if (previous != 0 && s != previous) ++changes;
    previous = s;
  }
  return changes;
}

SparsePoly teichmuller_poly(const FiberedClass& c) {
  check_range(c);
  if (!in_cone_delta(c)) {
    throw std::invalid_argument("teichmuller_poly: class " + to_string(c) +
                                " is not in the open cone over Delta");
  }
  // Every exponent is positive on the cone and below 3 * 2^62 < 2^64.
  const wide_int x = c.x, y = c.y, z = c.z;
  auto e = [](wide_int v) { return static_cast<std::uint64_t>(v); };
  return make_poly(std::vector<Term>{{e(x + y - z), 1},
                                     {e(x), -1},
                                     {e(y), -1},
                                     {e(x - z), -1},
                                     {e(y - z), -1},
                                     {0, 1}});
}

SparsePoly b_poly(std::int64_t g, std::int64_t p) {
  constexpr std::int64_t kLimit = std::int64_t{1} << 60;
  if (g < 0 || p < 0) throw std::invalid_argument("b_poly: g and p must be nonnegative");
  if (g > kLimit || p > kLimit) throw std::out_of_range("b_poly: parameter exceeds 2^60");
  const RawTerm raw[] = {{2 * p + 2 * g + 2, 1},
                         {2 * p + 1, -1},
                         {p + g + 1, -2},
                         {2 * g + 1, -1},
                         {0, 1}};
  return make_poly(raw);
}

}  // namespace magic
