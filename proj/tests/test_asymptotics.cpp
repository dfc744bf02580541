#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "magic/asymptotics.hpp"

using magic::Dyadic;
using magic::make_poly;

namespace {

// Slack covers the rounding of the double reference value.
bool contains(const magic::RealEnclosure& e, double v, double slack = 4e-16) {
  return e.lo.to_double() <= v + slack && v - slack <= e.hi.to_double();
}

}  // namespace

TEST_SUITE("asymptotics") {

TEST_CASE("instantiation") {
  for (std::int64_t g = 0; g <= 50; ++g) {
    const auto fam = magic::b_family(g);
    for (std::int64_t p = 1; p <= 50; ++p) {
      REQUIRE(magic::instantiate(fam, p) == magic::b_poly(g, p));
    }
  }
  magic::PmFamily simple{0, 1, 1, make_poly({{0, 1}})};
  CHECK(magic::instantiate(simple, 3).to_string() == "t^7 - t^6 - t^3 - t + 1");

  // u = 2m + r + s cancels the leading term at m = 3.
  magic::PmFamily collide{0, 1, 7, make_poly({{0, 1}})};
  CHECK_THROWS_WITH_AS(magic::instantiate(collide, 3), doctest::Contains("t^7"),
                       std::invalid_argument);
  CHECK_NOTHROW(magic::instantiate(collide, 4));

  magic::PmFamily bad_q{0, 1, 1, make_poly({{0, -1}})};
  CHECK_THROWS_AS(magic::instantiate(bad_q, 3), std::invalid_argument);
  CHECK_THROWS_AS(magic::instantiate(simple, 0), std::invalid_argument);
}

TEST_CASE("power bound enclosures") {
  for (std::int64_t m : {1, 2, 10, 1000, 123456}) {
    for (double c : {0.0, 0.5, 0.9, 1.1, 2.0}) {
      const auto e = magic::power_bound(m, c);
      REQUIRE(e.lo <= e.hi);
      REQUIRE(contains(e, std::pow(static_cast<double>(m), c / static_cast<double>(m))));
      REQUIRE((e.hi - e.lo) < Dyadic(1, -200));
    }
  }
  CHECK(magic::power_bound(1, 0.9).lo == Dyadic(1));
  CHECK_THROWS_AS(magic::power_bound(0, 1.0), std::invalid_argument);
}

TEST_CASE("bracket verdicts are stable under refinement") {
  const auto fam = magic::b_family(2);
  magic::RootOptions coarse;
  coarse.tol = 1e-10;
  magic::RootOptions fine = coarse;
  fine.tol = coarse.tol / 2;
  const auto a = magic::bracket_check(fam, 0.5, 2.0, 2, 300, coarse, 4);
  const auto b = magic::bracket_check(fam, 0.5, 2.0, 2, 300, fine, 4);
  REQUIRE(a.rows.size() == b.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    REQUIRE(a.rows[i].lower != magic::Verdict::undetermined);
    REQUIRE(a.rows[i].upper != magic::Verdict::undetermined);
    REQUIRE(a.rows[i].lower == b.rows[i].lower);
    REQUIRE(a.rows[i].upper == b.rows[i].upper);
    REQUIRE(b.rows[i].lambda.lo >= a.rows[i].lambda.lo);
    REQUIRE(b.rows[i].lambda.hi <= a.rows[i].lambda.hi);
  }
}

TEST_CASE("wider brackets hold from an earlier threshold") {
  const auto fam = magic::b_family(2);
  const auto wide = magic::bracket_check(fam, 0.5, 2.0, 2, 400, {}, 4);
  const auto mid = magic::bracket_check(fam, 0.6, 1.5, 2, 400, {}, 4);
  REQUIRE(wide.threshold.has_value());
  if (mid.threshold) CHECK(*wide.threshold <= *mid.threshold);
  for (const auto& row : wide.rows) {
    if (row.m >= *wide.threshold) REQUIRE(row.holds());
  }
  CHECK_THROWS_AS(magic::bracket_check(fam, 1.0, 2.0, 2, 10), std::invalid_argument);
  CHECK_THROWS_AS(magic::bracket_check(fam, 0.5, 2.0, 10, 2), std::invalid_argument);
}

TEST_CASE("report bookkeeping") {
  const auto fam = magic::b_family(2);
  const auto r = magic::bracket_check(fam, 0.5, 2.0, 50, 60);
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    CHECK(r.rows[i].m == 50 + static_cast<std::int64_t>(i));
  }
  if (!r.largest_failure) {
    CHECK(r.threshold == std::optional<std::int64_t>(50));
  } else {
    CHECK(r.threshold == std::optional<std::int64_t>(*r.largest_failure + 1));
  }
}

TEST_CASE("ratio tables for the B-family, g = 2") {
  const auto fam = magic::b_family(2);
  // n = 2p + 4; reference values from mpmath at 60 digits.
  const auto t = magic::ratio_limit_table(fam, 2, 4, {10, 100, 1000, 10000}, {}, 4);
  const double expected[] = {0.91087891247799610407, 1.0317660947331749815,
                             1.1829456597580384922, 1.2992476333739308144};
  REQUIRE(t.rows.size() == 4);
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(t.rows[i].n == 2 * t.rows[i].m + 4);
    CHECK(t.rows[i].ratio.lo <= t.rows[i].ratio.hi);
    CHECK(contains(t.rows[i].ratio, expected[i]));
  }
  CHECK(t.trend == magic::Trend::strictly_increasing);
  CHECK(t.deviation_decreasing);

  std::vector<std::int64_t> powers;
  for (int k = 4; k <= 14; ++k) powers.push_back(std::int64_t{1} << k);
  const auto unit = magic::ratio_limit_table(fam, 1, 0, powers, {}, 4);
  const double unit_expected[] = {
      0.52935173308673677644, 0.54741491960871736342, 0.56956823082705297923,
      0.59193590877391549661, 0.6130601975063429102,  0.63251442569873662709,
      0.65027571243948575382, 0.66646098061898579615, 0.68122421968569045164,
      0.69471921611923686609, 0.70708730755728471614};
  for (std::size_t i = 0; i < unit.rows.size(); ++i) {
    CHECK(unit.rows[i].ratio.lo.sign() > 0);
    CHECK(contains(unit.rows[i].ratio, unit_expected[i]));
  }
  CHECK(unit.deviation_decreasing);

  CHECK_THROWS_AS(magic::ratio_limit_table(fam, 0, 4, {10}), std::invalid_argument);
  CHECK_THROWS_AS(magic::ratio_limit_table(fam, 1, -5, {3}), std::invalid_argument);
}

TEST_CASE("parallel sweeps match serial ones") {
  const auto fam = magic::b_family(3);
  const auto a = magic::bracket_check(fam, 0.5, 2.0, 2, 120, {}, 1);
  const auto b = magic::bracket_check(fam, 0.5, 2.0, 2, 120, {}, 8);
  REQUIRE(a.rows.size() == b.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    REQUIRE(a.rows[i].lambda == b.rows[i].lambda);
    REQUIRE(a.rows[i].lower == b.rows[i].lower);
  }
  CHECK(a.threshold == b.threshold);
}

}
