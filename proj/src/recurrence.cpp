#include "balanced/recurrence.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "balanced/errors.hpp"
#include "balanced/roots.hpp"

namespace balanced {

SymbolicSequences symbolic_sequences(std::size_t n) {
  const IntPoly t = IntPoly::t();
  SymbolicSequences out;
  out.u.push_back({IntPoly{1}, IntPoly{}});
  out.w.push_back({t, IntPoly{-1}});
  for (std::size_t i = 0; i < n; ++i) {
    const PolyPair& u = out.u[i];
    const PolyPair& w = out.w[i];
    out.u.push_back({t * w.x - u.x, t * w.y - u.y});
    const PolyPair& u1 = out.u.back();
    out.w.push_back({t * u1.x - w.x, t * u1.y - w.y});
  }
  return out;
}

std::string_view to_string(PolyComponent c) {
  switch (c) {
    case PolyComponent::UX: return "x(u)";
    case PolyComponent::UY: return "y(u)";
    case PolyComponent::WX: return "x(w)";
    case PolyComponent::WY: return "y(w)";
  }
  return "?";
}

std::string_view to_string(ParityDefect d) { return d == ParityDefect::Parity ? "parity" : "degree"; }

namespace {

std::optional<ParityDefect> shape_defect(const IntPoly& p, bool even, int degree) {
  if (even ? !p.is_even() : !p.is_odd()) return ParityDefect::Parity;
  if (p.degree() != degree) return ParityDefect::Degree;
  return std::nullopt;
}

}  // namespace

std::optional<ParityViolation> check_parity_degrees(const std::vector<PolyPair>& us,
                                                    const std::vector<PolyPair>& ws) {
  const std::size_t count = std::min(us.size(), ws.size());
  for (std::size_t i = 1; i < count; ++i) {
    const int d = static_cast<int>(2 * i);
    if (auto e = shape_defect(us[i].x, true, d)) return ParityViolation{i, PolyComponent::UX, *e};
    if (auto e = shape_defect(us[i].y, false, d - 1)) return ParityViolation{i, PolyComponent::UY, *e};
    if (auto e = shape_defect(ws[i].x, false, d + 1)) return ParityViolation{i, PolyComponent::WX, *e};
    if (auto e = shape_defect(ws[i].y, true, d)) return ParityViolation{i, PolyComponent::WY, *e};
  }
  return std::nullopt;
}

RootGrid wn_equation_roots(std::size_t n, const RootOptions& options) {
  if (n == 0) throw Error(ErrorCode::InvalidSize, "wn_equation_roots needs n >= 1");
  const auto seq = symbolic_sequences(n);
  const PolyPair& wn = seq.w[n];

  const auto y_roots = real_roots(wn.y, Rational(options.width));
  const std::size_t count = y_roots.size();
  if (count > 2 * n)
    throw Error(ErrorCode::RootCountMismatch, "y(w_n) has more than 2n real roots");

  std::vector<double> mids;
  for (const auto& r : y_roots) mids.push_back(to_double(r.midpoint()));
  // y(w_n) is even: roots pair up as +/- t.
  for (std::size_t j = 0; j < count; ++j)
    if (std::abs(mids[j] + mids[count - 1 - j]) > 2 * options.width)
      throw Error(ErrorCode::RootCountMismatch, "roots of y(w_n) are not symmetric");

  std::vector<bool> keep(count, false);
  RootGrid grid{static_cast<long long>(2 * n + 1), {}};
  for (std::size_t j = 0; j < count; ++j) {
    const double x = to_double(Rational(wn.x(y_roots[j].midpoint()) - 1));
    if (std::abs(x) <= options.filter_tol) {
      keep[j] = true;
      grid.values.push_back(mids[j]);
    }
  }
  for (std::size_t j = 0; j < count; ++j)
    if (keep[j] && keep[count - 1 - j] && j != count - 1 - j)
      throw Error(ErrorCode::RootCountMismatch, "both members of a +/- root pair solve x(w_n) = 1");
  if (grid.values.size() != n)
    throw Error(ErrorCode::RootCountMismatch, "found " + std::to_string(grid.values.size()) +
                                                  " solutions of w_n(t) = U, expected " + std::to_string(n));
  return grid;
}

double t_value(long long k, long long m) {
  return 2 * std::cos(2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(m));
}

RootGrid t_grid(long long m) {
  if (m < 3 || m % 2 == 0) throw Error(ErrorCode::InvalidSize, "t_grid needs odd m >= 3");
  RootGrid grid{m, {}};
  for (long long k = 1; k <= (m - 1) / 2; ++k) grid.values.push_back(t_value(k, m));
  std::sort(grid.values.begin(), grid.values.end());
  return grid;
}

Configuration<double> model_configuration(long long m, long long k) {
  if (m < 3 || m % 2 == 0) throw Error(ErrorCode::InvalidSize, "model_configuration needs odd m >= 3");
  const auto n = static_cast<std::size_t>((m - 1) / 2);
  if (k < 1 || k > static_cast<long long>(n))
    throw Error(ErrorCode::InvalidSize, "k must lie in 1..n");
  const double t = t_value(k, m);
  const auto seq = numeric_sequences(t, n);
  const Vec2<double> unit_x(1, 0);
  const Vec2<double> unit_y(0, 1);
  if ((seq.w[n] - unit_x).norm() > 1e-10 || (seq.u[n] - unit_y).norm() > 1e-10)
    throw Error(ErrorCode::ClosureViolation, "model sequence does not close at t = " + std::to_string(t));

  std::vector<Vec2<double>> out;
  out.reserve(static_cast<std::size_t>(m));
  for (std::size_t i = 0; i < n; ++i) out.push_back(seq.u[i]);
  out.push_back(unit_y);
  for (std::size_t i = 0; i < n; ++i) out.push_back(seq.w[i]);
  return Configuration<double>(std::move(out));
}

}  // namespace balanced
