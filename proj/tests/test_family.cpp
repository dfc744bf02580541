#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "magic/family.hpp"
#include "magic/homology.hpp"
#include "oracles.hpp"

using magic::Filling;
using magic::FilledVariant;

TEST_SUITE("family") {

TEST_CASE("class construction and primitivity") {
  const auto a20 = magic::agp_class(2, 0);
  CHECK(a20.cls == magic::FiberedClass{3, 1, -2});
  CHECK(a20.primitive);
  const auto a22 = magic::agp_class(2, 2);
  CHECK(a22.cls == magic::FiberedClass{5, 5, 0});
  CHECK_FALSE(a22.primitive);
  CHECK_THROWS_AS(magic::agp_class(-1, 0), std::invalid_argument);

  for (std::int64_t g = 0; g <= 30; ++g) {
    for (std::int64_t i = 0; i <= 30; ++i) {
      const auto fc = magic::agp_class(g, (g + 1) + (2 * g + 1) * i);
      REQUIRE(fc.primitive);
      REQUIRE(magic::in_cone_delta(fc.cls));
    }
  }
}

TEST_CASE("closed form fiber data, named cases") {
  const auto even = magic::agp_fiber_closed_form(2, 0);
  CHECK(even.boundary == magic::BoundaryCounts{1, 1, 2});
  CHECK(even.prongs_alpha == 3);
  CHECK(even.prongs_beta == 1);
  CHECK(even.prongs_gamma == 4);
  CHECK(even.genus == 2);
  CHECK(even.n_total == 4);

  const auto odd = magic::agp_fiber_closed_form(2, 1);
  CHECK(odd.boundary == magic::BoundaryCounts{2, 3, 1});
  CHECK(odd.prongs_alpha == 2);
  CHECK(odd.prongs_beta == 1);
  CHECK(odd.prongs_gamma == 9);
  CHECK(odd.n_total == 6);

  CHECK_THROWS_AS(magic::agp_fiber_closed_form(2, 2), std::invalid_argument);
}

TEST_CASE("closed form agrees with the general gcd formulas for g, p <= 60") {
  std::size_t checked = 0;
  for (std::int64_t g = 0; g <= 60; ++g) {
    for (std::int64_t p = 0; p <= 60; ++p) {
      const auto fc = magic::agp_class(g, p);
      if (!fc.primitive) continue;
      REQUIRE(magic::agp_fiber_closed_form(g, p) == magic::fiber_data(fc.cls));
      ++checked;
    }
  }
  CHECK(checked > 2000);
}

TEST_CASE("1-prong obstruction") {
  CHECK(magic::no_one_prong(2, 0));
  CHECK_FALSE(magic::no_one_prong(0, 1));
  CHECK(magic::no_one_prong(1, 2));
  CHECK_FALSE(magic::agp_class(1, 1).primitive);
  for (std::int64_t g = 0; g <= 40; ++g) {
    for (std::int64_t p = 0; p <= 40; ++p) {
      if (!magic::agp_class(g, p).primitive) continue;
      const bool exceptional = (g == 0 && p <= 1) || (g == 1 && p == 0);
      REQUIRE(magic::no_one_prong(g, p) == !exceptional);
    }
  }
}

TEST_CASE("dilatation examples") {
  const auto r20 = magic::dilatation_r(2, 0);
  CHECK(r20.lo > magic::Dyadic::from_double(1.70));
  CHECK(r20.hi < magic::Dyadic::from_double(1.75));
  const auto r00 = magic::dilatation_r(0, 0);
  CHECK(std::abs(r00.approx() - (2.0 + std::sqrt(3.0))) <= 1e-12);
  const auto r21 = magic::dilatation_r(2, 1);
  CHECK(r21.lo > magic::Dyadic(1));
  CHECK(r21.hi < magic::Dyadic(2));
  // 1.40126836793985491510 (mpmath)
  CHECK(std::abs(r21.approx() - 1.4012683679398549) <= 1e-12);
}

TEST_CASE("filled variants") {
  const std::vector<FilledVariant> odd = {
      {6, Filling{false, false}}, {4, Filling{true, false}},
      {5, Filling{false, true}}, {3, Filling{true, true}}};
  CHECK(magic::filled_variants(2, 1) == odd);
  const std::vector<FilledVariant> even = {
      {4, Filling{false, false}}, {3, Filling{true, false}},
      {2, Filling{false, true}}, {1, Filling{true, true}}};
  CHECK(magic::filled_variants(2, 0) == even);
  CHECK_THROWS_AS(magic::filled_variants(0, 1), std::invalid_argument);
  CHECK(Filling{true, true}.to_string() == "alpha+gamma");

  for (std::int64_t g = 0; g <= 20; ++g) {
    for (std::int64_t p = 0; p <= 40; ++p) {
      if (!magic::agp_class(g, p).primitive || !magic::no_one_prong(g, p)) continue;
      std::vector<std::int64_t> ns;
      for (const auto& v : magic::filled_variants(g, p)) ns.push_back(v.n);
      std::sort(ns.begin(), ns.end());
      REQUIRE(ns == std::vector<std::int64_t>{2 * p + 1, 2 * p + 2, 2 * p + 3, 2 * p + 4});
    }
  }
}

TEST_CASE("coprimality conditions") {
  CHECK(magic::condition_star(4).holds);
  const auto seven = magic::condition_star(7);
  CHECK_FALSE(seven.holds);
  REQUIRE(seven.witness.has_value());
  CHECK(*seven.witness == 5);
  CHECK_FALSE(magic::condition_star_star(7));
  CHECK(magic::condition_star_star(5) == magic::condition_star(5).holds);
  CHECK(magic::condition_star_star(6) == magic::condition_star(6).holds);
  CHECK_THROWS_AS(magic::condition_star(1), std::invalid_argument);
  CHECK_THROWS_AS(magic::condition_star_star(4), std::invalid_argument);

  for (std::int64_t g = 2; g <= 2000; ++g) {
    if (oracle::is_prime(2 * g + 1)) REQUIRE(magic::condition_star(g).holds);
    REQUIRE(magic::condition_star(g).holds == oracle::star_full_period(g));
  }
  for (std::int64_t g = 5; g <= 10000; ++g) {
    REQUIRE(magic::condition_star(g).holds == magic::condition_star_star(g));
  }
}

TEST_CASE("bound table examples") {
  const auto rows = magic::upper_bound_table(2, 8, 8);
  REQUIRE(rows.size() == 1);
  REQUIRE(rows[0].candidates.size() == 2);
  CHECK(rows[0].candidates[0].p == 2);
  CHECK_FALSE(rows[0].candidates[0].primitive);
  CHECK(rows[0].candidates[1].p == 3);
  CHECK(rows[0].candidates[1].usable());
  REQUIRE(rows[0].record.has_value());
  CHECK(rows[0].record->witness_p == 3);

  for (const auto& row : magic::upper_bound_table(4, 3, 100)) {
    REQUIRE(row.record.has_value());
  }

  // n = 2 p_i + 4 is bounded by r_(2, p_i); the table keeps the smaller of
  // the two candidates, so its entry can only be lower.
  for (std::int64_t i = 0; i <= 6; ++i) {
    const std::int64_t p = 3 + 5 * i;
    const auto row = magic::upper_bound_table(2, 2 * p + 4, 2 * p + 4).front();
    REQUIRE(row.record.has_value());
    const auto r = magic::dilatation_r(2, p);
    REQUIRE(row.record->bound.lo <= r.lo);
    if (row.record->witness_p == p) REQUIRE(row.record->bound == r);
  }
  CHECK_THROWS_AS(magic::upper_bound_table(1, 3, 10), std::invalid_argument);
  CHECK_THROWS_AS(magic::upper_bound_table(2, 10, 3), std::invalid_argument);
}

TEST_CASE("bound records are complete for prime 2g+1 and self-consistent") {
  for (std::int64_t g : {2, 3, 5, 6, 8, 9}) {
    REQUIRE(oracle::is_prime(2 * g + 1));
    const auto rows = magic::upper_bound_table(g, 3, 500, {}, 4);
    REQUIRE(rows.size() == 498);
    for (const auto& row : rows) {
      REQUIRE(row.record.has_value());
      const auto& rec = *row.record;
      REQUIRE(rec.n == row.n);
      REQUIRE(magic::Dyadic(1) < rec.bound.lo);
      REQUIRE(magic::agp_class(g, rec.witness_p).primitive);
      REQUIRE(magic::punctures_after_filling(g, rec.witness_p, rec.filled) == rec.n);
      REQUIRE(rec.n - 2 * rec.witness_p >= 1);
      REQUIRE(rec.n - 2 * rec.witness_p <= 4);
    }
  }
}

TEST_CASE("g = 7 shows primitivity pruning and gaps") {
  const auto rows = magic::upper_bound_table(7, 3, 500, {}, 4);
  bool pruned = false;
  std::vector<std::int64_t> gaps;
  for (const auto& row : rows) {
    for (const auto& c : row.candidates) pruned = pruned || !c.primitive;
    if (!row.record) gaps.push_back(row.n);
  }
  CHECK(pruned);
  CHECK(std::find(gaps.begin(), gaps.end(), 27) != gaps.end());
  CHECK(std::find(gaps.begin(), gaps.end(), 28) != gaps.end());
}

TEST_CASE("table content is independent of the job count") {
  const auto serial = magic::upper_bound_table(3, 3, 120, {}, 1);
  const auto parallel = magic::upper_bound_table(3, 3, 120, {}, 8);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    REQUIRE(serial[i].record.has_value() == parallel[i].record.has_value());
    if (!serial[i].record) continue;
    REQUIRE(serial[i].record->bound == parallel[i].record->bound);
    REQUIRE(serial[i].record->witness_p == parallel[i].record->witness_p);
  }
}

}
