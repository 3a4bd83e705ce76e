#ifndef BALANCED_RECURRENCE_HPP
#define BALANCED_RECURRENCE_HPP

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "balanced/geom.hpp"
#include "balanced/polynomial.hpp"

namespace balanced {

// Model sequences in the frame v_0 -> U = (1,0), v_n -> V = (0,1):
//
//   u_0 = U,            w_0 = (t, -1),
//   u_{i+1} = t w_i - u_i,
//   w_{i+1} = t u_{i+1} - w_i.
//
// This is the two-step linear solve that rebuilds v_1, v_{n+2}, v_2, ...
// from det(v_{i-1}, v_i) = A1, det(v_i, v_{n+i}) = An with A1 / An = -t.
// u_i(t) is the image of v_i and w_i(t) the image of v_{n+1+i}.

template <PlaneScalar S>
struct NumericSequences {
  std::vector<Vec2<S>> u;
  std::vector<Vec2<S>> w;
};

/// u_0..u_n and w_0..w_n evaluated at t. Exact for rational t.
template <PlaneScalar S>
NumericSequences<S> numeric_sequences(const S& t, std::size_t n) {
  NumericSequences<S> out;
  out.u.reserve(n + 1);
  out.w.reserve(n + 1);
  out.u.emplace_back(S(1), S(0));
  out.w.emplace_back(t, S(-1));
  for (std::size_t i = 0; i < n; ++i) {
    out.u.push_back(out.w[i] * t - out.u[i]);
    out.w.push_back(out.u[i + 1] * t - out.w[i]);
  }
  return out;
}

struct SymbolicSequences {
  std::vector<PolyPair> u;
  std::vector<PolyPair> w;
};

/// The same sequences as integer polynomials in t, indices 0..n.
SymbolicSequences symbolic_sequences(std::size_t n);

enum class PolyComponent { UX, UY, WX, WY };
enum class ParityDefect { Parity, Degree };

std::string_view to_string(PolyComponent c);
std::string_view to_string(ParityDefect d);

struct ParityViolation {
  std::size_t i;
  PolyComponent which;
  ParityDefect defect;
};

/// For every i >= 1: x(u_i) even of degree 2i, y(u_i) odd of degree 2i-1,
/// x(w_i) odd of degree 2i+1, y(w_i) even of degree 2i. Reports the first
/// component that breaks the pattern.
std::optional<ParityViolation> check_parity_degrees(const std::vector<PolyPair>& us,
                                                    const std::vector<PolyPair>& ws);

/// Sorted parameters t for which the model sequence closes up, for m = 2n+1.
struct RootGrid {
  long long m = 0;
  std::vector<double> values;
};

struct RootOptions {
  /// Certified width of each refined root interval.
  double width = 1e-14;
  /// Acceptance band for |x(w_n)(t) - 1| at the refined root.
  double filter_tol = 1e-9;
};

/// Solves w_n(t) = U: isolates the real roots of y(w_n) exactly, keeps those
/// where x(w_n) = 1. Throws RootCountMismatch unless exactly n survive.
RootGrid wn_equation_roots(std::size_t n, const RootOptions& options = {});

/// 2 cos(2 pi k / m): the coordinate of omega^{-k} on 1 in the basis
/// {1, omega^k}.
double t_value(long long k, long long m);

/// {t_value(k, m) : k = 1..n}, sorted ascending.
RootGrid t_grid(long long m);

/// The m vectors u_0(t_k), ..., u_{n-1}(t_k), V, w_0(t_k), ..., w_{n-1}(t_k)
/// at t_k = t_value(k, m), slot i holding the image of v_i. Throws
/// ClosureViolation if w_n(t_k) != U or u_n(t_k) != V within 1e-10.
Configuration<double> model_configuration(long long m, long long k);

}  // namespace balanced

#endif  // BALANCED_RECURRENCE_HPP
