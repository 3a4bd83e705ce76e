#ifndef BALANCED_SEARCH_HPP
#define BALANCED_SEARCH_HPP

#include <cstdint>
#include <vector>

#include "balanced/geom.hpp"

namespace balanced {

/// 2-norm condition number of a 2x2 map (infinity when singular).
double condition_number(const Mat2<double>& g);

/// Deterministic in `seed`: entries drawn uniformly from [-1, 1] until the
/// map has condition number <= cond_max and |det| >= 1 / cond_max.
Mat2<double> random_invertible(std::uint64_t seed, double cond_max = 100);

/// Adds to each member an offset of length <= eps in a seeded direction.
Configuration<double> perturb(const Configuration<double>& c, double eps, std::uint64_t seed);

/// Seeded permutation of the members (Fisher-Yates on a portable generator).
Configuration<double> shuffle(const Configuration<double>& c, std::uint64_t seed);

struct SearchSpec {
  int m = 3;
  std::vector<Rational> coordinates;
  bool require_uniform = false;
  /// Enumerate sets instead of ordered tuples.
  bool dedupe = false;
  /// Upper bound on |coordinates|^(2m).
  double budget = 1e7;
};

/// All configurations of m distinct nonzero grid vectors that are balanced
/// in exact arithmetic, in lexicographic order of grid indices. Throws
/// BudgetExceeded when |coordinates|^(2m) exceeds the budget.
std::vector<Configuration<Rational>> enumerate_balanced(const SearchSpec& spec);

}  // namespace balanced

#endif  // BALANCED_SEARCH_HPP
