#include "magic/homology.hpp"

#include <algorithm>
#include <stdexcept>

namespace magic {

namespace {

wide_int abs_wide(wide_int v) { return v < 0 ? -v : v; }

void require_fibered(const FiberedClass& c, const char* who) {
  check_range(c);
  if (!in_cone_delta(c)) {
    throw std::invalid_argument(std::string(who) + ": class " + to_string(c) +
                                " is not in the open cone over Delta");
  }
  if (!is_primitive(c)) {
    throw std::invalid_argument(std::string(who) + ": class " + to_string(c) +
                                " is not primitive");
  }
}

}  // namespace

std::string to_string(wide_int v) {
  if (v == 0) return "0";
  const bool negative = v < 0;
  // Work with the unsigned magnitude so the most negative value is safe.
  unsigned __int128 mag = negative ? static_cast<unsigned __int128>(-(v + 1)) + 1
                                   : static_cast<unsigned __int128>(v);
  std::string digits;
  while (mag != 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(mag % 10)));
    mag /= 10;
  }
  if (negative) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

std::string to_string(const FiberedClass& c) {
  return "(" + std::to_string(c.x) + "," + std::to_string(c.y) + "," +
         std::to_string(c.z) + ")";
}

void check_range(const FiberedClass& c) {
  for (std::int64_t v : {c.x, c.y, c.z}) {
    if (v > kMaxCoordinate || v < -kMaxCoordinate) {
      throw std::out_of_range("class " + to_string(c) +
                              ": coordinate magnitude exceeds 2^62");
    }
  }
}

wide_int signed_gcd(wide_int a, wide_int b) {
  a = abs_wide(a);
  b = abs_wide(b);
  while (b != 0) {
    wide_int r = a % b;
    a = b;
    b = r;
  }
  return a;
}

wide_int thurston_norm(const FiberedClass& c) {
  check_range(c);
  const wide_int x = c.x, y = c.y, z = c.z;
  return std::max({abs_wide(x + y - z), abs_wide(x - y + z), abs_wide(-x + y + z)});
}

bool in_cone_delta(const FiberedClass& c) {
  return c.x > 0 && c.y > 0 && c.x > c.z && c.y > c.z;
}

bool is_primitive(const FiberedClass& c) {
  check_range(c);
  if (c.x == 0 && c.y == 0 && c.z == 0) {
    throw std::invalid_argument("is_primitive: the zero class has no primitivity");
  }
  return signed_gcd(signed_gcd(c.x, c.y), c.z) == 1;
}

BoundaryCounts boundary_counts(const FiberedClass& c) {
  require_fibered(c, "boundary_counts");
  const wide_int x = c.x, y = c.y, z = c.z;
  return {signed_gcd(x, y + z), signed_gcd(y, z + x), signed_gcd(z, x + y)};
}

FiberData fiber_data(const FiberedClass& c) {
  const BoundaryCounts counts = boundary_counts(c);
  const wide_int x = c.x, y = c.y, z = c.z;

  FiberData d;
  d.norm = x + y - z;
  d.boundary = counts;
  d.n_total = counts.alpha + counts.beta + counts.gamma;
  const wide_int twice_genus = 2 - d.n_total + d.norm;
  if (twice_genus < 0 || twice_genus % 2 != 0) {
    throw std::logic_error("fiber_data: inconsistent genus for class " + to_string(c));
  }
  d.genus = twice_genus / 2;
  d.prongs_alpha = x / counts.alpha;
  d.prongs_beta = y / counts.beta;
  d.prongs_gamma = (x + y - 2 * z) / counts.gamma;
  return d;
}

bool euler_poincare_check(const FiberData& d) {
  const wide_int lhs = d.boundary.alpha * (2 - d.prongs_alpha) +
                       d.boundary.beta * (2 - d.prongs_beta) +
                       d.boundary.gamma * (2 - d.prongs_gamma);
  return lhs == 2 * (d.n_total - d.norm);
}

}  // namespace magic
