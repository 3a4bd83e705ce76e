#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "balanced/balance.hpp"
#include "balanced/geom.hpp"
#include "balanced/search.hpp"

using namespace balanced;
using doctest::Approx;

namespace {

Vec2<Rational> q(long long a, long long b, long long c = 1, long long d = 1) {
  return {Rational(a, c), Rational(b, d)};
}

}  // namespace

TEST_CASE("det2 on the unit frame and a root of unity") {
  CHECK(det2(Vec2<double>(1, 0), Vec2<double>(0, 1)) == 1.0);
  const double s3 = std::sqrt(3.0) / 2;
  CHECK(det2(Vec2<double>(1, 0), Vec2<double>(-0.5, s3)) == Approx(std::sin(2 * std::numbers::pi / 3)));
  CHECK(det2(Vec2<double>(1, 0), Vec2<double>(-0.5, s3)) == Approx(0.8660254).epsilon(1e-7));
  const Vec2<double> v(0.3, -1.7);
  CHECK(det2(v, v) == 0.0);
  CHECK(det2(q(3, 5, 2, 7), q(3, 5, 2, 7)) == 0);
}

TEST_CASE("det2 is antisymmetric and bilinear in exact mode") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> pick(-9, 9);
  std::uniform_int_distribution<int> den(1, 9);
  for (int trial = 0; trial < 200; ++trial) {
    const Vec2<Rational> a = q(pick(rng), pick(rng), den(rng), den(rng));
    const Vec2<Rational> b = q(pick(rng), pick(rng), den(rng), den(rng));
    const Vec2<Rational> c = q(pick(rng), pick(rng), den(rng), den(rng));
    const Rational s(pick(rng), den(rng));
    CHECK(det2(a, b) == -det2(b, a));
    CHECK(det2(Vec2<Rational>(a * s + c), b) == s * det2(a, b) + det2(c, b));
  }
}

TEST_CASE("det2 scales by det(g) under a linear map") {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const Mat2<double> g = random_invertible(seed, 100);
    const Vec2<double> a(std::cos(0.1 * seed), std::sin(0.3 * seed));
    const Vec2<double> b(-std::sin(0.7 * seed), 1.5);
    const double lhs = det2(apply(g, a), apply(g, b));
    const double rhs = det2(g) * det2(a, b);
    CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(rhs)));
  }
}

TEST_CASE("argument lies in [0, 2pi)") {
  CHECK(argument(Vec2<double>(1, 0)) == 0.0);
  CHECK(argument(Vec2<double>(0, 1)) == Approx(std::numbers::pi / 2));
  CHECK(argument(Vec2<double>(-0.5, -std::sqrt(3.0) / 2)) == Approx(4 * std::numbers::pi / 3));
  CHECK(argument(Vec2<double>(-0.5, -std::sqrt(3.0) / 2)) == Approx(4.1887902).epsilon(1e-7));
  CHECK(argument(Vec2<double>(1, -1e-300)) < 2 * std::numbers::pi);
  CHECK(argument(q(-1, -1)) == Approx(5 * std::numbers::pi / 4));
  CHECK_THROWS_AS(argument(Vec2<double>(0, 0)), Error);
}

TEST_CASE("configurations reject the zero vector") {
  try {
    Configuration<double>({{1, 0}, {0, 0}});
    FAIL("expected ZeroVector");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroVector);
    CHECK(e.index() == 1);
  }
}

TEST_CASE("labeling by increasing arguments") {
  const auto u3 = roots_of_unity(3);
  const auto same = label_by_increasing_arguments(u3.config);
  CHECK(same.permutation == std::vector<std::size_t>{0, 1, 2});

  const Configuration<double> scrambled({u3[2], u3[0], u3[1]});
  const auto labeled = label_by_increasing_arguments(scrambled);
  CHECK(labeled.permutation == std::vector<std::size_t>{1, 2, 0});
  CHECK(labeled.config == u3.config);

  try {
    label_by_increasing_arguments(Configuration<Rational>({q(1, 0), q(2, 0), q(0, 1)}));
    FAIL("expected DuplicateArgument");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DuplicateArgument);
  }
  CHECK_THROWS_AS(label_by_increasing_arguments(Configuration<double>({{1, 0}, {2, 0}, {0, 1}})), Error);
  // 0 and 2pi - tiny collide cyclically.
  CHECK_THROWS_AS(label_by_increasing_arguments(Configuration<double>({{1, 0}, {1, -1e-16}, {0, 1}})), Error);
}

TEST_CASE("labeling is idempotent and permutation invariant") {
  const auto u9 = roots_of_unity(9).config;
  const Mat2<double> g = random_invertible(4, 50);
  const auto image = transform(g, u9);
  const auto reference = label_by_increasing_arguments(image).config;
  CHECK(label_by_increasing_arguments(reference).config == reference);
  for (std::uint64_t seed = 0; seed < 20; ++seed)
    CHECK(label_by_increasing_arguments(shuffle(image, seed)).config == reference);
}

TEST_CASE("cyclic_index") {
  CHECK(cyclic_index(7, 5) == 2);
  CHECK(cyclic_index(-1, 5) == 4);
  CHECK(cyclic_index(0, 3) == 0);
  CHECK(cyclic_index(-11, 5) == 4);
}

TEST_CASE("roots_of_unity") {
  const auto u3 = roots_of_unity(3);
  REQUIRE(u3.size() == 3);
  CHECK(u3[0].x() == 1.0);
  CHECK(u3[0].y() == 0.0);
  CHECK(u3[1].x() == Approx(-0.5));
  CHECK(u3[1].y() == Approx(0.8660254).epsilon(1e-7));
  CHECK(u3[2].x() == Approx(-0.5));
  CHECK(u3[2].y() == Approx(-0.8660254).epsilon(1e-7));

  const auto u1 = roots_of_unity(1);
  REQUIRE(u1.size() == 1);
  CHECK(u1[0] == Vec2<double>(1, 0));

  const auto u5 = roots_of_unity(5);
  for (long long k = 0; k < 5; ++k)
    for (long long a = 0; a < 5; ++a)
      CHECK(det2(u5.cyclic(k), u5.cyclic(k + a)) == Approx(-det2(u5.cyclic(k), u5.cyclic(k - a))));

  CHECK_THROWS_AS(roots_of_unity(0), Error);
  CHECK_THROWS_AS(roots_of_unity(-3), Error);
}

TEST_CASE("roots of unity satisfy the antisymmetry relations for odd m <= 101") {
  for (long long m = 3; m <= 101; m += 2) {
    const auto u = roots_of_unity(m);
    CHECK_MESSAGE(!verify_antisymmetry(u, 1e-12), "m = " << m);
  }
}

TEST_CASE("n() requires odd m >= 3") {
  CHECK(roots_of_unity(7).config.n() == 3);
  CHECK_THROWS_AS(roots_of_unity(1).config.n(), Error);
  CHECK_THROWS_AS(Configuration<double>({{1, 0}, {0, 1}}).n(), Error);
}
