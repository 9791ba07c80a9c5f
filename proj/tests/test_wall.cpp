#include <doctest.h>

#include "test_util.hpp"
#include "tilt/search.hpp"

using namespace tilt;
using ttest::rand_chern;

namespace {
const PolarizedGeometry P3(1);
}

TEST_CASE("wall_equation: O_X against (1,1,1/2)") {
  const ChernVector v{1, 0, 0, 0};
  const ChernVector w{1, 1, Rational(1, 2), 0};
  const WallEquation eq = wall_equation(v, w);
  // A - 3 beta + 3 beta^2 = 0, i.e. A = 3 beta (1 - beta)
  CHECK(eq.a1 == 1);
  CHECK(eq.b2 == 3);
  CHECK(eq.b1 == -3);
  CHECK(eq.b0 == 0);

  // the beta-reflected partner is the beta -> -beta image
  const WallEquation mirror = wall_equation(v, {1, -1, Rational(1, 2), 0});
  CHECK(mirror.a1 == eq.a1);
  CHECK(mirror.b2 == eq.b2);
  CHECK(mirror.b1 == -eq.b1);
  CHECK(mirror.b0 == eq.b0);

  CHECK_THROWS_AS(wall_equation(v, v * 2), std::domain_error);
  CHECK_THROWS_AS(wall_equation(w, w * Rational(-1, 3)), std::domain_error);
}

TEST_CASE("wall_sample on A = 3 beta (1 - beta)") {
  const WallEquation eq = wall_equation({1, 0, 0, 0}, {1, 1, Rational(1, 2), 0});

  const auto pts = wall_sample(eq, 0, 1, 5);
  REQUIRE(pts.size() == 3);  // endpoints have A = 0 and are omitted
  CHECK(pts[0].beta == Rational(1, 4));
  CHECK(pts[0].alpha_sq == Rational(9, 16));
  CHECK(pts[1].beta == Rational(1, 2));
  CHECK(pts[1].alpha_sq == Rational(3, 4));
  CHECK(pts[2].beta == Rational(3, 4));
  CHECK(pts[2].alpha_sq == Rational(9, 16));

  const auto single = wall_sample(eq, Rational(1, 2), Rational(1, 2), 1);
  REQUIRE(single.size() == 1);
  CHECK(single[0].beta == Rational(1, 2));
  CHECK(single[0].alpha_sq == Rational(3, 4));

  CHECK(wall_sample(eq, 2, 3, 7).empty());  // no positive root there
  CHECK_THROWS_AS(wall_sample(eq, 0, 1, 0), std::domain_error);
  CHECK_THROWS_AS(wall_sample(eq, 1, 0, 3), std::domain_error);
}

TEST_CASE("wall points satisfy the slope equality with zero residual") {
  std::mt19937 rng(83);
  int done = 0;
  while (done < 100) {
    const ChernVector v = rand_chern(rng), w = rand_chern(rng);
    const Rational x01 = v.v0 * w.v1 - v.v1 * w.v0;
    const Rational x02 = v.v0 * w.v2 - v.v2 * w.v0;
    const Rational x12 = v.v1 * w.v2 - v.v2 * w.v1;
    if (x01 == 0 && x02 == 0 && x12 == 0) continue;
    const WallEquation eq = wall_equation(v, w);
    // normalization: integer coprime coefficients, leading sign positive
    Integer g = 0;
    for (const Rational& c : {eq.a1, eq.b2, eq.b1, eq.b0}) {
      CHECK(is_integer(c));
      g = boost::multiprecision::gcd(g, numerator(c));
    }
    CHECK(g == 1);
    for (const Rational& c : {eq.a1, eq.b2, eq.b1, eq.b0}) {
      if (c == 0) continue;
      CHECK(c > 0);
      break;
    }
    ++done;
    for (const auto& pt : wall_sample(eq, Rational(-3, 2), Rational(5, 2), 9)) {
      CHECK(eq.eval(pt.beta, pt.alpha_sq) == 0);
      // at the degenerate betas where a t1 vanishes the cross-multiplied
      // equation is satisfied trivially; the slope comparison needs both finite
      if (v.v1 - pt.beta * v.v0 == 0 || w.v1 - pt.beta * w.v0 == 0) continue;
      const TiltParameter p(pt.alpha_sq, pt.beta);
      CHECK(slope_nu_hat(v, p, P3) == slope_nu_hat(w, p, P3));
    }
  }
}
