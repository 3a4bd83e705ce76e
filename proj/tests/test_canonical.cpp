#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "balanced/canonical.hpp"
#include "balanced/recurrence.hpp"
#include "balanced/search.hpp"

using namespace balanced;
using doctest::Approx;

namespace {

Vec2<double> w(long long k, long long m) { return root_of_unity(k, m); }

Configuration<double> u(long long m) { return roots_of_unity(m).config; }

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::Parse;
}

}  // namespace

TEST_CASE("frame_map") {
  CHECK(frame_map(Vec2<double>(1, 0), Vec2<double>(0, 1)) == Mat2<double>::Identity());

  const Mat2<double> g = frame_map(Vec2<double>(1, 0), Vec2<double>(-0.5, std::sqrt(3.0) / 2));
  CHECK(g(0, 0) == Approx(1.0));
  CHECK(g(0, 1) == Approx(0.5773503).epsilon(1e-7));
  CHECK(g(1, 0) == Approx(0.0));
  CHECK(g(1, 1) == Approx(1.1547005).epsilon(1e-7));
  CHECK((apply(g, w(1, 3)) - Vec2<double>(0, 1)).norm() < 1e-15);

  CHECK(code_of([] { frame_map(Vec2<double>(1, 0), Vec2<double>(2, 0)); }) == ErrorCode::SingularFrame);

  const Vec2<Rational> a(Rational(2, 3), Rational(1));
  const Vec2<Rational> b(Rational(-1), Rational(5, 2));
  const Mat2<Rational> ge = frame_map(a, b);
  CHECK(apply(ge, a) == Vec2<Rational>(Rational(1), Rational(0)));
  CHECK(apply(ge, b) == Vec2<Rational>(Rational(0), Rational(1)));
  const Mat2<Rational> id = compose(ge, inverse(ge));
  CHECK(id(0, 0) == 1);
  CHECK(id(0, 1) == 0);
  CHECK(id(1, 0) == 0);
  CHECK(id(1, 1) == 1);
}

TEST_CASE("extract_t") {
  const Mat2<double> g3 = frame_map(w(0, 3), w(1, 3));
  CHECK(extract_t(g3, w(2, 3), 1e-12) == Approx(-1.0));

  const Mat2<double> g5 = frame_map(w(0, 5), w(2, 5));
  const double t5 = extract_t(g5, w(3, 5), 1e-12);
  CHECK(t5 == Approx(-1.6180340).epsilon(1e-7));
  CHECK(t5 == Approx(t_value(2, 5)).epsilon(1e-14));

  CHECK(code_of([] { extract_t(Mat2<double>(Mat2<double>::Identity()), Vec2<double>(3, 5), 1e-9); }) ==
        ErrorCode::NotNormalized);
}

TEST_CASE("match_k") {
  CHECK(match_k(-1, 3, 1e-6) == 1);
  CHECK(match_k(0.6180340, 5, 1e-6) == 1);
  CHECK(match_k(-1.6180340, 5, 1e-6) == 2);
  CHECK(code_of([] { match_k(1.0514622, 5, 1e-6); }) == ErrorCode::NoGridMatch);
}

TEST_CASE("reconstruct_from_triple") {
  const auto c3 = reconstruct_from_triple(w(0, 3), w(1, 3), w(2, 3), 3);
  CHECK(c3 == u(3));

  const auto c5 = reconstruct_from_triple(w(0, 5), w(2, 5), w(3, 5), 5);
  const auto u5 = u(5);
  for (std::size_t i = 0; i < 5; ++i) CHECK((c5[i] - u5[i]).norm() <= 1e-12);

  CHECK(code_of([] { reconstruct_from_triple(Vec2<double>(1, 0), Vec2<double>(2, 0), Vec2<double>(0, 1), 5); }) ==
        ErrorCode::SingularFrame);
  CHECK(code_of([] { reconstruct_from_triple(w(0, 5), w(2, 5), w(3, 5), 4); }) == ErrorCode::InvalidSize);
}

TEST_CASE("exact reconstruction satisfies both step relations") {
  const Vec2<Rational> v0(Rational(1), Rational(0));
  const Vec2<Rational> vn(Rational(1, 3), Rational(2));
  // det(v_0, v_{n+1}) = -det(v_0, v_n), as in any balanced configuration.
  const Vec2<Rational> vn1(Rational(-4, 5), Rational(-2));
  const long long m = 9;
  const auto c = reconstruct_from_triple(v0, vn, vn1, m);
  const long long n = 4;
  const Rational a1 = det2(vn, vn1);
  const Rational an = det2(v0, vn);
  for (long long i = 1; i < n; ++i) {
    CHECK(det2(c.cyclic(i - 1), c.cyclic(i)) == a1);
    CHECK(det2(c.cyclic(i), c.cyclic(n + i)) == an);
    CHECK(det2(c.cyclic(n + i), c.cyclic(n + i + 1)) == a1);
    CHECK(det2(c.cyclic(n + i + 1), c.cyclic(i)) == an);
  }

  const auto tri = reconstruct_from_triple(v0, Vec2<Rational>(Rational(0), Rational(1)),
                                           Vec2<Rational>(Rational(-1), Rational(-1)), 3);
  CHECK(tri[2] == Vec2<Rational>(Rational(-1), Rational(-1)));
}

TEST_CASE("canonicalize the regular pentagon") {
  const auto form = canonicalize(u(5));
  CHECK(form.k == 2);
  CHECK(form.t == Approx(-1.6180340).epsilon(1e-7));
  CHECK(form.t == Approx(2 * std::cos(4 * std::numbers::pi / 5)).epsilon(1e-14));
  CHECK(form.residual < 1e-12);
  CHECK(form.index_map == std::vector<long long>{0, 1, 2, 3, 4});
}

TEST_CASE("canonicalize a linear image of the heptagon") {
  const auto u7 = u(7);
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto c = shuffle(transform(random_invertible(seed, 100), u7), seed);
    const auto form = canonicalize(c);
    CHECK(form.residual < 1e-9);
    // g c is U_7 as a set.
    const auto image = label_by_increasing_arguments(transform(form.g, c)).config;
    for (std::size_t i = 0; i < 7; ++i) CHECK((image[i] - u7[i]).norm() < 1e-9);
  }
}

TEST_CASE("canonicalize rejects non-canonicalizable input") {
  const Configuration<double> skew({{1, 0}, {0, 1}, {1, 1}});
  CHECK(code_of([&] { canonicalize(skew); }) == ErrorCode::NotBalanced);
  CHECK(code_of([&] { canonicalize(perturb(u(5), 0.05, 1)); }) == ErrorCode::NotBalanced);
  CHECK(code_of([&] { canonicalize(Configuration<double>({{1, 0}, {0, 1}, {-1, 0}, {0, -1}})); }) ==
        ErrorCode::InvalidSize);
}

TEST_CASE("canonicalize exact input") {
  const Configuration<Rational> tri({{Rational(1), Rational(0)}, {Rational(0), Rational(1)},
                                     {Rational(-1), Rational(-1)}});
  const auto form = canonicalize(tri);
  CHECK(form.k == 1);
  CHECK(form.t == Approx(-1.0));
  CHECK(form.residual < 1e-12);
}

TEST_CASE("round trip for odd m <= 21") {
  for (long long m = 3; m <= 21; m += 2) {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
      const auto c = transform(random_invertible(seed * 31 + static_cast<std::uint64_t>(m), 100), u(m));
      const auto form = canonicalize(c);
      CHECK(form.residual <= 1e-8);
    }
  }
}

TEST_CASE("diagram consistency and bijective index map") {
  for (long long m = 3; m <= 21; m += 2) {
    const auto c = shuffle(transform(random_invertible(static_cast<std::uint64_t>(m), 30), u(m)), 9);
    const auto form = canonicalize(c);
    const long long n = (m - 1) / 2;
    std::set<long long> exponents(form.index_map.begin(), form.index_map.end());
    CHECK(exponents.size() == static_cast<std::size_t>(m));
    for (long long i = 0; i <= n; ++i)
      CHECK(form.index_map[static_cast<std::size_t>(i)] ==
            static_cast<long long>(cyclic_index(-2 * form.k * i, m)));
    for (long long i = 0; i < n; ++i)
      CHECK(form.index_map[static_cast<std::size_t>(n + 1 + i)] ==
            static_cast<long long>(cyclic_index(-form.k * (1 + 2 * i), m)));
    for (long long i = 0; i < m; ++i) {
      const auto& v = form.labeled[static_cast<std::size_t>(i)];
      CHECK((apply(form.g, v) - w(form.index_map[static_cast<std::size_t>(i)], m)).norm() <= 1e-8);
      CHECK(v == c[form.permutation[static_cast<std::size_t>(i)]]);
    }
  }
}

TEST_CASE("t_C and k_C are invariant under linear maps") {
  for (long long m : {5, 9, 13}) {
    const auto base = transform(random_invertible(100 + static_cast<std::uint64_t>(m), 100), u(m));
    const auto ref = canonicalize(base);
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      const auto other = canonicalize(transform(random_invertible(seed, 100), base));
      CHECK(other.k == ref.k);
      CHECK(std::abs(other.t - ref.t) <= 1e-9);
    }
  }
}

TEST_CASE("reconstruction from the canonical triple reproduces the rest") {
  for (long long m = 3; m <= 21; m += 2) {
    const auto c = transform(random_invertible(7 * static_cast<std::uint64_t>(m), 100), u(m));
    const auto form = canonicalize(c);
    const auto& v = form.labeled;
    const long long n = (m - 1) / 2;
    const auto rebuilt = reconstruct_from_triple(v[0], v.cyclic(n), v.cyclic(n + 1), m);
    for (long long i = 0; i < m; ++i)
      CHECK((rebuilt[static_cast<std::size_t>(i)] - v[static_cast<std::size_t>(i)]).norm() <= 1e-9);
  }
}

TEST_CASE("normalization never fails on balanced uniform input") {
  for (long long m = 3; m <= 15; m += 2)
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      const auto c = transform(random_invertible(seed, 100), u(m));
      REQUIRE(is_balanced(c).balanced);
      REQUIRE(is_uniform(c).uniform);
      const auto labeled = label_by_increasing_arguments(scale_to_unit(c));
      const long long n = (m - 1) / 2;
      const auto g = frame_map(labeled[0], labeled.cyclic(n));
      CHECK_NOTHROW(extract_t(g, labeled.cyclic(n + 1), 1e-9));
    }
}

TEST_CASE("gl2_equivalent") {
  const auto u5 = u(5);
  const auto mapped = transform(random_invertible(42, 100), u5);
  CHECK(gl2_equivalent(u5, mapped).equivalent);

  const auto diff = gl2_equivalent(u5, u(7));
  CHECK_FALSE(diff.equivalent);
  CHECK(diff.reason == ErrorCode::InvalidSize);

  const auto bent = gl2_equivalent(u5, perturb(u5, 0.05, 3));
  CHECK_FALSE(bent.equivalent);
  CHECK(bent.reason == ErrorCode::NotBalanced);
}
