#include "balanced/search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <string>

#include "balanced/balance.hpp"

namespace balanced {

namespace {

// std::uniform_real_distribution is implementation-defined; this mapping
// keeps seeded output identical across standard libraries.
double unit_interval(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

double symmetric_unit(std::mt19937_64& rng) { return 2 * unit_interval(rng) - 1; }

}  // namespace

double condition_number(const Mat2<double>& g) {
  const double d = std::abs(det2(g));
  if (d == 0) return std::numeric_limits<double>::infinity();
  const double f = g.squaredNorm();
  const double big = 0.5 * (f + std::sqrt(std::max(0.0, f * f - 4 * d * d)));
  return big / d;
}

Mat2<double> random_invertible(std::uint64_t seed, double cond_max) {
  std::mt19937_64 rng(seed);
  for (;;) {
    Mat2<double> g;
    g << symmetric_unit(rng), symmetric_unit(rng), symmetric_unit(rng), symmetric_unit(rng);
    if (std::abs(det2(g)) >= 1 / cond_max && condition_number(g) <= cond_max) return g;
  }
}

Configuration<double> perturb(const Configuration<double>& c, double eps, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Vec2<double>> out;
  out.reserve(c.size());
  for (const auto& v : c) {
    const double r = eps * unit_interval(rng);
    const double theta = 2 * std::numbers::pi * unit_interval(rng);
    out.push_back(v + Vec2<double>(r * std::cos(theta), r * std::sin(theta)));
  }
  return Configuration<double>(std::move(out));
}

Configuration<double> shuffle(const Configuration<double>& c, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Vec2<double>> out = c.vectors();
  for (std::size_t i = out.size(); i > 1; --i) std::swap(out[i - 1], out[rng() % i]);
  return Configuration<double>(std::move(out));
}

std::vector<Configuration<Rational>> enumerate_balanced(const SearchSpec& spec) {
  if (spec.m < 1) throw Error(ErrorCode::InvalidSize, "search needs m >= 1");
  std::vector<Rational> coords = spec.coordinates;
  if (coords.empty()) throw Error(ErrorCode::InvalidSize, "empty coordinate set");
  std::sort(coords.begin(), coords.end());
  coords.erase(std::unique(coords.begin(), coords.end()), coords.end());

  const double size = std::pow(static_cast<double>(coords.size()), 2.0 * spec.m);
  if (size > spec.budget)
    throw Error(ErrorCode::BudgetExceeded, std::to_string(coords.size()) + "^" + std::to_string(2 * spec.m) +
                                               " candidates exceed the budget");

  std::vector<Vec2<Rational>> grid;
  for (const auto& x : coords)
    for (const auto& y : coords)
      if (x != 0 || y != 0) grid.emplace_back(x, y);

  std::vector<Configuration<Rational>> hits;
  const auto m = static_cast<std::size_t>(spec.m);
  if (grid.size() < m) return hits;

  std::vector<std::size_t> idx(m, 0);
  std::vector<Vec2<Rational>> members(m);
  auto test = [&] {
    for (std::size_t i = 0; i < m; ++i) members[i] = grid[idx[i]];
    Configuration<Rational> c(members);
    if (!is_balanced(c, 0).balanced) return;
    if (spec.require_uniform && !is_uniform(c, 0).uniform) return;
    hits.push_back(std::move(c));
  };

  if (spec.dedupe) {
    // Strictly increasing index tuples.
    for (std::size_t i = 0; i < m; ++i) idx[i] = i;
    for (;;) {
      test();
      std::size_t pos = m;
      while (pos > 0 && idx[pos - 1] == grid.size() - m + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t j = pos; j < m; ++j) idx[j] = idx[j - 1] + 1;
    }
  } else {
    // All tuples in lexicographic order, skipping repeated members.
    for (;;) {
      bool distinct = true;
      for (std::size_t i = 0; i < m && distinct; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
          if (idx[i] == idx[j]) {
            distinct = false;
            break;
          }
      if (distinct) test();
      std::size_t pos = m;
      while (pos > 0 && idx[pos - 1] == grid.size() - 1) idx[--pos] = 0;
      if (pos == 0) break;
      ++idx[pos - 1];
    }
  }
  return hits;
}

}  // namespace balanced
