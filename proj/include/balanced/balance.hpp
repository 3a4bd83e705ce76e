#ifndef BALANCED_BALANCE_HPP
#define BALANCED_BALANCE_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "balanced/geom.hpp"

namespace balanced {

/// Index i whose determinant row is not symmetric, and a value x with
/// #{j : det(v_i,v_j) = x} != #{j : det(v_i,v_j) = -x}.
template <PlaneScalar S>
struct BalanceWitness {
  std::size_t index;
  S value;
};

template <PlaneScalar S>
struct BalanceReport {
  bool balanced = true;
  std::optional<BalanceWitness<S>> witness;
  /// rows[i] is the sorted multiset {det(v_i, v_j) : j != i}.
  std::vector<std::vector<S>> rows;
};

struct UniformReport {
  bool uniform = true;
  std::optional<std::pair<std::size_t, std::size_t>> witness;
};

namespace detail {

/// Result of the greedy +/- matching on one determinant row.
template <PlaneScalar S>
struct RowMatch {
  /// (j, l) with det(v_i, v_j) = -det(v_i, v_l), negative side first.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  /// Member left in the middle of an odd-length row; its determinant is zero.
  std::optional<std::size_t> zero;
  std::optional<S> unmatched;
  /// Two distinct members of the row share a determinant value.
  bool repeated = false;
  std::vector<S> sorted;
};

// Sort the row, then walk inward from both ends: the extreme values must
// cancel within tol, otherwise the larger one in magnitude has no partner.
template <PlaneScalar S>
RowMatch<S> match_row(const Configuration<S>& c, std::size_t i, double tol) {
  struct Entry {
    S value;
    std::size_t j;
  };
  std::vector<Entry> row;
  row.reserve(c.size());
  for (std::size_t j = 0; j < c.size(); ++j)
    if (j != i) row.push_back({det2(c[i], c[j]), j});
  std::stable_sort(row.begin(), row.end(),
                   [](const Entry& a, const Entry& b) { return a.value < b.value; });

  RowMatch<S> out;
  for (const auto& e : row) out.sorted.push_back(e.value);
  for (std::size_t p = 0; p + 1 < row.size(); ++p)
    if (nearly_equal(row[p].value, row[p + 1].value, tol)) out.repeated = true;

  if (row.empty()) return out;
  std::size_t lo = 0;
  std::size_t hi = row.size() - 1;
  while (lo < hi) {
    const S sum = row[lo].value + row[hi].value;
    if (is_zero(sum, tol)) {
      out.pairs.emplace_back(row[lo].j, row[hi].j);
      ++lo;
      --hi;
    } else {
      out.unmatched = sign_of(sum) < 0 ? row[lo].value : row[hi].value;
      return out;
    }
  }
  if (lo == hi) {
    if (is_zero(row[lo].value, tol))
      out.zero = row[lo].j;
    else
      out.unmatched = row[lo].value;
  }
  return out;
}

}  // namespace detail

/// Multiset symmetry of every determinant row. In float mode values are
/// matched greedily within absolute tolerance `tol`; exact mode ignores it.
template <PlaneScalar S>
BalanceReport<S> is_balanced(const Configuration<S>& c, double tol) {
  BalanceReport<S> report;
  report.rows.reserve(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    auto match = detail::match_row(c, i, tol);
    report.rows.push_back(std::move(match.sorted));
    if (match.unmatched && report.balanced) {
      report.balanced = false;
      report.witness = BalanceWitness<S>{i, *match.unmatched};
    }
  }
  return report;
}

template <PlaneScalar S>
BalanceReport<S> is_balanced(const Configuration<S>& c) {
  return is_balanced(c, default_tolerance(c));
}

template <PlaneScalar S>
UniformReport is_uniform(const Configuration<S>& c, double tol) {
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j)
      if (is_zero(det2(c[i], c[j]), tol)) return {false, std::make_pair(i, j)};
  return {};
}

template <PlaneScalar S>
UniformReport is_uniform(const Configuration<S>& c) {
  return is_uniform(c, default_tolerance(c));
}

/// For a balanced configuration with an even number of members, the row of
/// v_0 has odd length and is symmetric, so it contains a zero: returns the
/// first j >= 1 with det(v_0, v_j) = 0.
template <PlaneScalar S>
std::size_t even_m_witness(const Configuration<S>& c, double tol) {
  if (c.odd()) throw Error(ErrorCode::OddM, "configuration has an odd number of members");
  const auto report = is_balanced(c, tol);
  if (!report.balanced)
    throw Error(ErrorCode::NotBalanced, "row " + std::to_string(report.witness->index) + " is not symmetric",
                static_cast<long>(report.witness->index));
  for (std::size_t j = 1; j < c.size(); ++j)
    if (is_zero(det2(c[0], c[j]), tol)) return j;
  throw Error(ErrorCode::NotBalanced, "row 0 has no zero determinant");
}

struct IndexPair {
  std::size_t lo;
  std::size_t hi;

  IndexPair(std::size_t a, std::size_t b) : lo(std::min(a, b)), hi(std::max(a, b)) {}
  auto operator<=>(const IndexPair&) const = default;
};

/// For each index i, the partition of I \ {i} into pairs {k, l} with
/// det(v_i, v_k) = -det(v_i, v_l), together with the inverse map phi
/// sending each unordered pair to its unique i.
class PairingMap {
 public:
  explicit PairingMap(std::size_t m) : m_(m), rows_(m), phi_(m * m, npos) {}

  std::size_t size() const { return m_; }
  const std::vector<IndexPair>& row(std::size_t i) const { return rows_[i]; }

  /// phi({k, l}); npos when the pair is unassigned.
  std::size_t phi(std::size_t k, std::size_t l) const {
    const IndexPair p(k, l);
    return phi_[p.lo * m_ + p.hi];
  }

  /// Records {k, l} in row i. Returns false if the pair already has an owner.
  bool assign(std::size_t i, IndexPair p) {
    auto& slot = phi_[p.lo * m_ + p.hi];
    if (slot != npos) return false;
    slot = i;
    rows_[i].push_back(p);
    return true;
  }

  /// First broken invariant (row partition, cross-row disjointness, totality
  /// of phi), or nothing when all three hold.
  std::optional<std::string> violation() const {
    std::size_t assigned = 0;
    for (std::size_t i = 0; i < m_; ++i) {
      std::vector<int> seen(m_, 0);
      for (const auto& p : rows_[i]) {
        if (p.lo == p.hi || p.lo == i || p.hi == i)
          return "row " + std::to_string(i) + " contains a pair touching its own index";
        if (++seen[p.lo] > 1 || ++seen[p.hi] > 1)
          return "row " + std::to_string(i) + " pairs are not disjoint";
        if (phi(p.lo, p.hi) != i) return "phi disagrees with row " + std::to_string(i);
      }
      for (std::size_t j = 0; j < m_; ++j)
        if (j != i && seen[j] != 1) return "row " + std::to_string(i) + " does not cover I \\ {i}";
      assigned += rows_[i].size();
    }
    for (std::size_t k = 0; k < m_; ++k)
      for (std::size_t l = k + 1; l < m_; ++l)
        if (phi(k, l) == npos) return "phi undefined on a pair";
    if (assigned != m_ * (m_ - 1) / 2) return "pair count differs from |P2(I)|";
    return std::nullopt;
  }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  std::size_t m_;
  std::vector<std::vector<IndexPair>> rows_;
  std::vector<std::size_t> phi_;
};

/// Builds the pairing of a uniform balanced configuration with odd m >= 3.
/// Rows are matched independently; disjointness across rows is checked,
/// not assumed.
template <PlaneScalar S>
PairingMap build_pairing(const Configuration<S>& c, double tol) {
  c.n();
  if (const auto u = is_uniform(c, tol); !u.uniform)
    throw Error(ErrorCode::NotUniform,
                "members " + std::to_string(u.witness->first) + " and " +
                    std::to_string(u.witness->second) + " are parallel");

  PairingMap map(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    const auto match = detail::match_row(c, i, tol);
    if (match.unmatched)
      throw Error(ErrorCode::NotBalanced, "row " + std::to_string(i) + " is not symmetric",
                  static_cast<long>(i));
    if (match.repeated)
      throw Error(ErrorCode::AmbiguousPairing,
                  "row " + std::to_string(i) + " has repeated determinant values at this tolerance",
                  static_cast<long>(i));
    for (const auto& [k, l] : match.pairs)
      if (!map.assign(i, IndexPair(k, l)))
        throw Error(ErrorCode::AmbiguousPairing,
                    "pair {" + std::to_string(k) + "," + std::to_string(l) + "} claimed by two rows",
                    static_cast<long>(i));
  }
  if (auto bad = map.violation()) throw Error(ErrorCode::AmbiguousPairing, *bad);
  return map;
}

template <PlaneScalar S>
PairingMap build_pairing(const LabeledConfiguration<S>& c, double tol) {
  return build_pairing(c.config, tol);
}

struct AntisymmetryViolation {
  std::size_t k;
  std::size_t a;
};

/// Checks det(v_k, v_{k+a}) = -det(v_k, v_{k-a}) for all k and a = 1..n with
/// cyclic labels. Returns the first (k, a) that fails.
template <PlaneScalar S>
std::optional<AntisymmetryViolation> verify_antisymmetry(const LabeledConfiguration<S>& c, double tol) {
  const std::size_t n = c.config.n();
  for (std::size_t k = 0; k < c.size(); ++k) {
    const auto kk = static_cast<long long>(k);
    for (std::size_t a = 1; a <= n; ++a) {
      const auto aa = static_cast<long long>(a);
      const S sum = det2(c.cyclic(kk), c.cyclic(kk + aa)) + det2(c.cyclic(kk), c.cyclic(kk - aa));
      if (!is_zero(sum, tol)) return AntisymmetryViolation{k, a};
    }
  }
  return std::nullopt;
}

/// A1 = det(v_k, v_{k+1}) and An = det(v_k, v_{k+n}), common to every k.
template <PlaneScalar S>
struct StepConstants {
  S a1;
  S an;
};

template <PlaneScalar S>
StepConstants<S> step_constants(const LabeledConfiguration<S>& c, double tol) {
  const auto n = static_cast<long long>(c.config.n());
  StepConstants<S> out{det2(c[0], c[1]), det2(c.cyclic(0), c.cyclic(n))};
  if (is_zero(out.a1, tol) || is_zero(out.an, tol))
    throw Error(ErrorCode::NotUniform, "a step constant vanishes");
  for (long long k = 0; k < static_cast<long long>(c.size()); ++k) {
    if (!nearly_equal(det2(c.cyclic(k), c.cyclic(k + 1)), out.a1, tol) ||
        !nearly_equal(det2(c.cyclic(k), c.cyclic(k + n)), out.an, tol))
      throw Error(ErrorCode::InconsistentConstants, "step constants differ at k = " + std::to_string(k),
                  static_cast<long>(k));
  }
  return out;
}

}  // namespace balanced

#endif  // BALANCED_BALANCE_HPP
