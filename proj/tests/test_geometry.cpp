#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "subdiv/experiments.hpp"
#include "subdiv/geometry.hpp"
#include "test_util.hpp"

using namespace subdiv;

TEST_CASE("forward_diff: open differences") {
  PointSequence f({{0, 0}, {1, 1}, {2, 4}}, Boundary::open);
  PointSequence d = forward_diff(f);
  REQUIRE(d.size() == 2);
  CHECK(d[0] == Point{1, 1});
  CHECK(d[1] == Point{1, 3});
}

TEST_CASE("forward_diff: constant data vanishes") {
  PointSequence f({{3, -1}, {3, -1}, {3, -1}, {3, -1}}, Boundary::open);
  for (const Point& p : forward_diff(f)) CHECK(p.norm() == 0.0);
}

TEST_CASE("forward_diff: closed differences wrap and sum to zero") {
  PointSequence f({{0, 0}, {1, 0}, {0, 1}}, Boundary::closed);
  PointSequence d = forward_diff(f);
  REQUIRE(d.size() == 3);
  CHECK(d[0] == Point{1, 0});
  CHECK(d[1] == Point{-1, 1});
  CHECK(d[2] == Point{0, -1});
  Point total = d[0] + d[1] + d[2];
  CHECK(total.norm() == 0.0);
}

TEST_CASE("forward_diff: too short throws") {
  PointSequence f({{0, 0}}, Boundary::open);
  CHECK_THROWS_AS(forward_diff(f), std::invalid_argument);
}

TEST_CASE("grid_ratios: uniform grid gives unit ratios") {
  GridRatios r = grid_ratios(Grid({0, 1, 2, 3}));
  REQUIRE(r.alpha.size() == 2);
  for (double a : r.alpha) CHECK(a == doctest::Approx(1.0).epsilon(1e-15));
  for (double b : r.beta) CHECK(b == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("grid_ratios: extremes of the embedded parabola grid") {
  GridRatios r = grid_ratios(parabola_grid());
  double amax = 0.0, amin = 1e300;
  std::size_t amax_at = 0, amin_at = 0;
  for (std::size_t j = 0; j < r.alpha.size(); ++j) {
    if (r.alpha[j] > amax) { amax = r.alpha[j]; amax_at = j; }
    if (r.alpha[j] < amin) { amin = r.alpha[j]; amin_at = j; }
  }
  // alpha[j] sits at interior point j+2 in 1-based numbering
  CHECK(amax == doctest::Approx(5.8299).epsilon(1e-4));
  CHECK(amax_at + 2 == 13);
  CHECK(amin == doctest::Approx(0.2339).epsilon(1e-4));
  CHECK(amin_at + 2 == 11);
}

TEST_CASE("grid_ratios: mixed spacing example") {
  GridRatios r = grid_ratios(Grid({0, 1, 2, 4}));
  // stencil around the middle interval pair: alpha = h0/h1, beta = h2/h1
  CHECK(r.alpha[0] == doctest::Approx(1.0));
  CHECK(r.beta[1] == doctest::Approx(2.0));
}

TEST_CASE("grid_ratios: non-increasing grid rejected") {
  CHECK_THROWS_AS(Grid({0, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Grid({0, 2, 1}), std::invalid_argument);
}

TEST_CASE("grid_ratios: beta * next alpha is 1") {
  testutil::Rng rng(7101);
  for (int t = 0; t < 50; ++t) {
    Grid g = testutil::random_grid(rng, 12, 0.1, 10.0);
    GridRatios r = grid_ratios(g);
    for (std::size_t j = 0; j < r.alpha.size(); ++j)
      CHECK(std::abs(r.beta[j] * r.alpha[j] - 1.0) <= 1e-14);
  }
}

TEST_CASE("chaikin_refine: two points") {
  Grid g = chaikin_refine(Grid({0, 1}));
  REQUIRE(g.size() == 2);
  CHECK(g[0] == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(g[1] == doctest::Approx(0.75).epsilon(1e-15));
}

TEST_CASE("chaikin_refine: first pair of the embedded grid") {
  Grid g = chaikin_refine(parabola_grid());
  CHECK(g[0] == doctest::Approx(-1.9009).epsilon(1e-12));
  CHECK(g[1] == doctest::Approx(-1.8265).epsilon(1e-12));
}

TEST_CASE("chaikin_refine: strictly increasing and size 2(L-1)") {
  testutil::Rng rng(7102);
  for (int t = 0; t < 100; ++t) {
    Grid g = testutil::random_grid(rng, 10, 0.1, 10.0);
    Grid r = chaikin_refine(g);
    REQUIRE(r.size() == 2 * (g.size() - 1));
    for (std::size_t i = 0; i + 1 < r.size(); ++i) CHECK(r[i] < r[i + 1]);
  }
}

TEST_CASE("chaikin_refine: ratio band contracts toward uniform") {
  testutil::Rng rng(7103);
  for (double rho : {0.5, 1.0, 4.0}) {
    const double lo = 1.0 / (1.0 + rho), hi = 1.0 + rho;
    const double lo2 = 1.0 / (1.0 + rho / 2.0), hi2 = 1.0 + rho / 2.0;
    for (int t = 0; t < 200; ++t) {
      Grid g = testutil::random_grid(rng, 14, lo, hi);
      GridRatios refined = grid_ratios(chaikin_refine(g));
      for (double a : refined.alpha) {
        CHECK(a >= lo2);
        CHECK(a <= hi2);
      }
    }
  }
}

TEST_CASE("chaikin_limit_grid: depth 0 and 1") {
  Grid g({0, 1});
  CHECK(chaikin_limit_grid(g, 0).values() == g.values());
  Grid d1 = chaikin_limit_grid(g, 1);
  CHECK(d1[0] == doctest::Approx(0.25));
  CHECK(d1[1] == doctest::Approx(0.75));
}

TEST_CASE("chaikin_limit_grid: uniform grid stays uniform") {
  Grid g({0, 1, 2, 3, 4, 5});
  Grid r = chaikin_limit_grid(g, 4);
  const double h = r[1] - r[0];
  for (std::size_t i = 0; i + 1 < r.size(); ++i)
    CHECK(r[i + 1] - r[i] == doctest::Approx(h).epsilon(1e-13));
}

TEST_CASE("PointSequence: dimension and finiteness are enforced") {
  CHECK_THROWS_AS(PointSequence({{0, 0}, {1}}, Boundary::open),
                  std::invalid_argument);
  CHECK_THROWS_AS(PointSequence({{0, 0}, {1, std::nan("")}}, Boundary::open),
                  std::invalid_argument);
}

TEST_CASE("PointSequence: wrapped indexing") {
  PointSequence f({{0, 0}, {1, 0}, {2, 0}}, Boundary::closed);
  CHECK(f.at_wrapped(-1) == Point{2, 0});
  CHECK(f.at_wrapped(3) == Point{0, 0});
  PointSequence open({{0, 0}, {1, 0}}, Boundary::open);
  CHECK_THROWS_AS(open.at_wrapped(-1), std::out_of_range);
}
