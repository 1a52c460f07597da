#include "gauge/patch.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"

using namespace gauge;

TEST_CASE("patch validation and indexing") {
  CHECK_THROWS_AS(Patch::uniform(2, 4, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(Patch::uniform(0, 8, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(Patch::uniform(5, 8, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(Patch::uniform(2, 8, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(Patch::uniform(2, 8, -0.1), std::invalid_argument);

  Patch p = Patch::uniform(3, 6, 0.5, -1.0);
  p.extent = {5, 6, 7};
  p.validate();
  CHECK(p.size() == 210);
  CHECK(p.stride(2) == 1);
  CHECK(p.stride(1) == 7);
  CHECK(p.stride(0) == 42);
  for (std::size_t i = 0; i < p.size(); ++i) CHECK(p.linear(p.multi_index(i)) == i);
  const auto x = p.coordinates(p.linear({1, 2, 3}));
  CHECK(x == Point{-0.5, 0.0, 0.5});
  CHECK(p.cell_volume() == 0.125);
}

TEST_CASE("partial: constants and affine functions") {
  const Patch p = Patch::uniform(2, 9, 0.25);
  const auto c = sample(p, [](const Point&) { return 3.5; });
  for (int mu = 0; mu < 2; ++mu) {
    const auto d = partial(c, mu);
    CHECK(d.margin() == 1);
    CHECK(d.numerical());
    Region::interior(p).for_each(p, [&](std::size_t i) { CHECK(d[i] == 0.0); });
  }
  // dyadic spacing: central differences of x^1 are exactly 1
  const auto lin = sample(p, [](const Point& x) { return x[1]; });
  const auto d1 = partial(lin, 1);
  const auto d0 = partial(lin, 0);
  Region::interior(p).for_each(p, [&](std::size_t i) {
    CHECK(d1[i] == 1.0);
    CHECK(d0[i] == 0.0);
  });
  // non-dyadic spacing: exact up to rounding of the coordinates
  const Patch q = Patch::uniform(2, 9, 0.05, 0.3);
  const auto lin_q = sample(q, [](const Point& x) { return 2.0 * x[0] - x[1]; });
  const auto dq = partial(lin_q, 0);
  Region::interior(q).for_each(q, [&](std::size_t i) { CHECK(std::abs(dq[i] - 2.0) < 1e-12); });

  CHECK_THROWS_AS(partial(lin, 2), std::invalid_argument);
  CHECK_THROWS_AS(partial(lin, -1), std::invalid_argument);
}

TEST_CASE("partial: sin converges at second order") {
  auto max_error = [](double h) {
    const int extent = static_cast<int>(std::lround(2 * std::numbers::pi / h)) + 1;
    const Patch p = Patch::uniform(1, extent, h);
    const auto f = sample(p, [](const Point& x) { return std::sin(x[0]); });
    const auto d = partial(f, 0);
    double worst = 0.0;
    Region::interior(p).for_each(p, [&](std::size_t i) {
      worst = std::max(worst, std::abs(d[i] - std::cos(p.coordinates(i)[0])));
    });
    return worst;
  };
  const double e1 = max_error(0.01);
  const double e2 = max_error(0.005);
  CHECK(e1 <= 2e-5);
  CHECK(e1 / e2 >= 3.5);
  CHECK(e1 / e2 <= 4.5);
}

TEST_CASE("partial: linearity, conjugation, mixed partials") {
  const Patch p = Patch::uniform(2, 16, 0.05, 0.1);
  const GroupElement g0 = random_group_element(3, GroupSpec::su2());
  const AlgebraElement x = random_algebra_element(4, GroupSpec::su2());
  const AlgebraElement y = random_algebra_element(5, GroupSpec::su2());
  const auto f = sample(p, [&](const Point& pt) {
    return std::sin(pt[0] + 2 * pt[1]) * x + pt[0] * pt[0] * pt[1] * y;
  });
  const auto conj = map(f, [&](const AlgebraElement& v) { return adjoint(g0, v); });
  const auto twice = map(f, [&](const AlgebraElement& v) { return 2.0 * v; });
  for (int mu = 0; mu < 2; ++mu) {
    const auto df = partial(f, mu);
    const auto dconj = partial(conj, mu);
    const auto dtwice = partial(twice, mu);
    Region::interior(p).for_each(p, [&](std::size_t i) {
      CHECK(test::dist(dconj[i], adjoint(g0, df[i])) < 1e-13);
      CHECK(test::dist(dtwice[i], 2.0 * df[i]) < 1e-13);
    });
  }
  const auto d01 = partial(partial(f, 0), 1);
  const auto d10 = partial(partial(f, 1), 0);
  CHECK(d01.margin() == 2);
  const double h = 0.05;
  // third derivatives of the sample are bounded by 8 |x| + 2 |y| < 20
  Region::interior(p, 2).for_each(p, [&](std::size_t i) {
    CHECK(test::dist(d01[i], d10[i]) <= 10 * h * h * 20);
  });
}

TEST_CASE("integrate") {
  const Patch p = Patch::uniform(2, 10, 0.5);
  const Region k{{1, 2}, {5, 8}};
  const auto ones = sample(p, [](const Point&) { return 1.0; });
  const auto zeros = sample(p, [](const Point&) { return 0.0; });
  CHECK(integrate(ones, k) == 24 * 0.25);
  CHECK(integrate(zeros, k) == 0.0);

  // one full period of sin at 256 points
  const double h = 2 * std::numbers::pi / 256;
  const Patch line = Patch::uniform(1, 258, h, -h);
  const auto s = sample(line, [](const Point& x) { return std::sin(x[0]); });
  CHECK(std::abs(integrate(s, Region{{1}, {257}})) <= 1e-3);

  SUBCASE("additivity over disjoint regions") {
    // integer data and dyadic spacing: every partial sum is exact
    const auto ints = sample(p, [](const Point& x) { return std::floor(4 * x[0]) - 3 * x[1]; });
    const Region a{{1, 1}, {4, 9}};
    const Region b{{4, 1}, {9, 9}};
    const Region ab{{1, 1}, {9, 9}};
    CHECK(integrate(ints, a) + integrate(ints, b) == integrate(ints, ab));
    // generic data: equal to rounding
    const auto wavy = sample(p, [](const Point& x) { return std::cos(3.1 * x[0]) * std::exp(x[1]); });
    const double whole = integrate(wavy, ab);
    CHECK(std::abs(integrate(wavy, a) + integrate(wavy, b) - whole) <= 1e-13 * std::abs(whole));
  }

  SUBCASE("bit reproducible") {
    const auto wavy = sample(p, [](const Point& x) { return std::sin(7 * x[0] * x[1]); });
    CHECK(integrate(wavy, k) == integrate(wavy, k));
  }

  SUBCASE("region errors") {
    CHECK_THROWS_AS(integrate(ones, Region{{0, 2}, {5, 8}}), std::invalid_argument);
    CHECK_THROWS_AS(integrate(ones, Region{{1, 2}, {10, 8}}), std::invalid_argument);
    CHECK_THROWS_AS(integrate(ones, Region{{3, 2}, {3, 8}}), std::invalid_argument);
    CHECK_THROWS_AS(integrate(ones, Region{{1}, {5}}), std::invalid_argument);
    // a derivative field is invalid on its outer layer plus one more
    const auto d = partial(partial(ones, 0), 0);
    CHECK_THROWS_AS(integrate(d, Region{{1, 2}, {5, 8}}), std::invalid_argument);
    CHECK(integrate(d, Region{{2, 2}, {5, 8}}) == 0.0);
  }
}

TEST_CASE("field helpers") {
  const Patch p = Patch::uniform(1, 7, 1.0);
  const auto f = sample(p, [](const Point& x) { return x[0]; });
  CHECK_THROWS_AS(Field<double>(p, std::vector<double>(3)), std::invalid_argument);
  const auto d = partial(f, 0);
  CHECK_FALSE(d.valid(0));
  CHECK(d.valid(1));
  CHECK_FALSE(d.valid(6));
  const auto sum = zip_map(f, d, [](double a, double b) { return a + b; });
  CHECK(sum.margin() == 1);
  CHECK(sum[3] == 4.0);
  const Patch other = Patch::uniform(1, 8, 1.0);
  const auto g = sample(other, [](const Point& x) { return x[0]; });
  CHECK_THROWS_AS(zip_map(f, g, [](double a, double b) { return a + b; }), std::invalid_argument);
}
