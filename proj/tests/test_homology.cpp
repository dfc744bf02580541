#include <doctest.h>

#include <random>
#include <stdexcept>

#include "magic/homology.hpp"
#include "oracles.hpp"

using magic::FiberedClass;

TEST_SUITE("homology") {

TEST_CASE("thurston norm on named classes") {
  CHECK(magic::thurston_norm({1, 0, 0}) == 1);
  CHECK(magic::thurston_norm({0, 0, 0}) == 0);
  CHECK(magic::thurston_norm({3, 1, -2}) == 6);
  CHECK(magic::thurston_norm({1, 1, 0}) == 2);
}

TEST_CASE("norm of a_(g,p) is 2p+2g+2") {
  for (std::int64_t g = 0; g <= 20; ++g) {
    for (std::int64_t p = 0; p <= 20; ++p) {
      CHECK(magic::thurston_norm({p + g + 1, 2 * p + 1, p - g}) == 2 * p + 2 * g + 2);
    }
  }
}

TEST_CASE("norm is 1 on the eight vertices of the unit ball") {
  for (const FiberedClass v : {FiberedClass{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1},
                               {-1, 0, 0}, {0, -1, 0}, {0, 0, -1}, {-1, -1, -1}}) {
    CHECK(magic::thurston_norm(v) == 1);
  }
}

TEST_CASE("norm agrees with the atomic-norm oracle on a box") {
  for (std::int64_t x = -12; x <= 12; ++x) {
    for (std::int64_t y = -12; y <= 12; ++y) {
      for (std::int64_t z = -12; z <= 12; ++z) {
        REQUIRE(magic::thurston_norm({x, y, z}) == oracle::atomic_norm(x, y, z));
      }
    }
  }
}

TEST_CASE("norm is x+y-z on the cone and linear on rays") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> coord(-1000, 1000);
  std::uniform_int_distribution<std::int64_t> scale(-50, 50);
  for (int i = 0; i < 5000; ++i) {
    const FiberedClass c{coord(rng), coord(rng), coord(rng)};
    const std::int64_t k = scale(rng);
    const FiberedClass kc{k * c.x, k * c.y, k * c.z};
    const magic::wide_int abs_k = k < 0 ? -k : k;
    CHECK(magic::thurston_norm(kc) == abs_k * magic::thurston_norm(c));
    if (magic::in_cone_delta(c)) {
      CHECK(magic::thurston_norm(c) == c.x + c.y - c.z);
    }
  }
}

TEST_CASE("cone membership") {
  CHECK(magic::in_cone_delta({1, 1, 0}));
  CHECK_FALSE(magic::in_cone_delta({1, 0, 0}));
  CHECK(magic::in_cone_delta({3, 1, -2}));
  CHECK_FALSE(magic::in_cone_delta({0, 0, 0}));
  CHECK_FALSE(magic::in_cone_delta({2, 2, 2}));  // x > z fails
  CHECK_FALSE(magic::in_cone_delta({0, 1, -1}));
}

TEST_CASE("primitivity") {
  CHECK(magic::is_primitive({3, 1, -2}));
  CHECK_FALSE(magic::is_primitive({2, 4, 6}));
  CHECK_FALSE(magic::is_primitive({5, 5, 0}));
  CHECK(magic::is_primitive({-3, 0, 0}) == false);
  CHECK(magic::is_primitive({0, -1, 0}));
  CHECK_THROWS_AS(magic::is_primitive({0, 0, 0}), std::invalid_argument);
}

TEST_CASE("gcd convention") {
  CHECK(magic::signed_gcd(0, 5) == 5);
  CHECK(magic::signed_gcd(0, -5) == 5);
  CHECK(magic::signed_gcd(-4, 6) == 2);
  CHECK(magic::signed_gcd(0, 0) == 0);
}

TEST_CASE("boundary counts") {
  CHECK(magic::boundary_counts({3, 1, -2}) == magic::BoundaryCounts{1, 1, 2});
  CHECK(magic::boundary_counts({1, 1, 0}) == magic::BoundaryCounts{1, 1, 2});
  CHECK(magic::boundary_counts({2, 3, 1}) == magic::BoundaryCounts{2, 3, 1});
  CHECK_THROWS_AS(magic::boundary_counts({1, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(magic::boundary_counts({2, 2, 0}), std::invalid_argument);
}

TEST_CASE("fiber data of named classes") {
  const auto a = magic::fiber_data({3, 1, -2});
  CHECK(a.norm == 6);
  CHECK(a.boundary == magic::BoundaryCounts{1, 1, 2});
  CHECK(a.n_total == 4);
  CHECK(a.genus == 2);
  CHECK(a.prongs_alpha == 3);
  CHECK(a.prongs_beta == 1);
  CHECK(a.prongs_gamma == 4);

  const auto b = magic::fiber_data({1, 1, 0});
  CHECK(b.norm == 2);
  CHECK(b.genus == 0);
  CHECK(b.n_total == 4);
  CHECK(b.prongs_alpha == 1);
  CHECK(b.prongs_beta == 1);
  CHECK(b.prongs_gamma == 1);

  const auto c = magic::fiber_data({2, 3, 1});
  CHECK(c.norm == 4);
  CHECK(c.boundary == magic::BoundaryCounts{2, 3, 1});
  CHECK(c.genus == 0);
  CHECK(c.prongs_alpha == 1);
  CHECK(c.prongs_beta == 1);
  CHECK(c.prongs_gamma == 3);
}

TEST_CASE("euler-poincare check") {
  auto d = magic::fiber_data({3, 1, -2});
  CHECK(magic::euler_poincare_check(d));
  CHECK(magic::euler_poincare_check(magic::fiber_data({1, 1, 0})));
  d.prongs_gamma += 1;
  CHECK_FALSE(magic::euler_poincare_check(d));
}

TEST_CASE("fiber data invariants over every primitive cone class of norm <= 60") {
  const auto classes = oracle::primitive_cone_classes(60);
  REQUIRE(classes.size() > 10000);
  for (const auto& c : classes) {
    const auto d = magic::fiber_data(c);
    REQUIRE(d.n_total == d.boundary.alpha + d.boundary.beta + d.boundary.gamma);
    REQUIRE((d.norm - d.n_total) % 2 == 0);
    REQUIRE(d.genus >= 0);
    REQUIRE(2 * d.genus == 2 - d.n_total + d.norm);
    REQUIRE(magic::euler_poincare_check(d));
    REQUIRE(magic::fiber_data(c) == d);
  }
}

TEST_CASE("range limits") {
  const std::int64_t big = magic::kMaxCoordinate;
  const FiberedClass edge{big, big, -big};
  CHECK(magic::thurston_norm(edge) == 3 * static_cast<magic::wide_int>(big));
  CHECK(magic::in_cone_delta(edge));
  CHECK_THROWS_AS(magic::thurston_norm({big + 1, 0, 0}), std::out_of_range);
  CHECK_THROWS_AS(magic::is_primitive({0, -big - 1, 0}), std::out_of_range);
  // Large primitive cone class: counts stay exact.
  const FiberedClass c{big, big - 1, -big};
  const auto d = magic::fiber_data(c);
  CHECK(d.norm == 3 * static_cast<magic::wide_int>(big) - 1);
  CHECK(magic::euler_poincare_check(d));
}

TEST_CASE("wide integer formatting") {
  CHECK(magic::to_string(magic::wide_int{0}) == "0");
  CHECK(magic::to_string(magic::wide_int{-42}) == "-42");
  CHECK(magic::to_string(3 * static_cast<magic::wide_int>(magic::kMaxCoordinate)) ==
        "13835058055282163712");
}

}
