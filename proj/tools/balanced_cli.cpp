// balanced_cli: balance checks, canonical forms, and figures for plane
// vector configurations.
//
// Exit codes: 0 the property holds, 1 it fails (report carries the
// certificate), 2 input or usage error.

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "balanced/balance.hpp"
#include "balanced/canonical.hpp"
#include "balanced/io.hpp"
#include "balanced/recurrence.hpp"
#include "balanced/search.hpp"
#include "balanced/svg.hpp"

using namespace balanced;
using nlohmann::json;

namespace {

constexpr int kHolds = 0;
constexpr int kFails = 1;
constexpr int kInputError = 2;

struct Common {
  std::optional<double> tol;
  std::string out;
  std::string format = "json";
  bool timing = false;
};

json scalar_json(double x) { return x; }
json scalar_json(const Rational& x) { return format_rational(x); }

json map_json(const Mat2<double>& g) {
  return json::array({json::array({g(0, 0), g(0, 1)}), json::array({g(1, 0), g(1, 1)})});
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(out, std::ios::binary);
  if (!file) throw Error(ErrorCode::Parse, "cannot write " + out);
  file << text;
}

/// Writes the report (json) or the figure (svg) selected by --format.
void finish(json report, const Configuration<double>& figure, const std::string& title, const Common& opts,
            std::chrono::steady_clock::time_point started) {
  if (opts.timing)
    report["timing_ms"] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
  if (opts.format == "svg")
    emit(render_svg(figure, {title}), opts.out);
  else
    emit(dump_json(report), opts.out);
}

template <PlaneScalar S>
int check_config(const Configuration<S>& c, const std::string& path, const Common& opts) {
  const auto started = std::chrono::steady_clock::now();
  const double tol = opts.tol ? *opts.tol : default_tolerance(c);
  json report{{"command", "check"}, {"path", path}, {"m", c.size()},
              {"mode", is_exact_v<S> ? "exact" : "float"}, {"tol", tol}};

  const auto balance = is_balanced(c, tol);
  const auto uniform = is_uniform(c, tol);
  report["balanced"] = balance.balanced;
  report["uniform"] = uniform.uniform;
  if (balance.witness)
    report["balance_witness"] = {{"index", balance.witness->index}, {"value", scalar_json(balance.witness->value)}};
  if (uniform.witness) report["uniform_witness"] = json::array({uniform.witness->first, uniform.witness->second});

  if (balance.balanced && !c.odd()) report["even_m_witness"] = even_m_witness(c, tol);
  if (balance.balanced && uniform.uniform && c.odd() && c.size() >= 3) {
    const auto labeled = label_by_increasing_arguments(c);
    report["permutation"] = labeled.permutation;
    const auto violation = verify_antisymmetry(labeled, tol);
    report["antisymmetry"] = violation ? json{{"k", violation->k}, {"a", violation->a}} : json("pass");
    try {
      const auto sc = step_constants(labeled, tol);
      report["step_constants"] = {{"a1", scalar_json(sc.a1)}, {"an", scalar_json(sc.an)}};
    } catch (const Error& e) {
      report["step_constants"] = {{"error", std::string(to_string(e.code()))}, {"k", e.index()}};
    }
  }
  finish(report, to_float(c), path, opts, started);
  return balance.balanced ? kHolds : kFails;
}

int run_check(const std::string& path, const Common& opts) {
  const auto config = read_config(path);
  return std::visit([&](const auto& c) { return check_config(c, path, opts); }, config);
}

int run_canon(const std::string& path, const Common& opts) {
  const auto started = std::chrono::steady_clock::now();
  const auto config = read_config(path);
  const Configuration<double> c = std::visit([](const auto& x) { return to_float(x); }, config);
  json report{{"command", "canon"}, {"path", path}, {"m", c.size()}};
  CanonOptions options;
  if (opts.tol) options.balance_tol = *opts.tol;
  try {
    const CanonicalForm form = canonicalize(c, options);
    report["equivalent"] = true;
    report["t"] = form.t;
    report["k"] = form.k;
    report["residual"] = form.residual;
    report["map"] = map_json(form.g);
    report["frame_map"] = map_json(form.frame);
    report["index_map"] = form.index_map;
    report["permutation"] = form.permutation;
    finish(report, transform(form.g, c), path + " (canonical image)", opts, started);
    return kHolds;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::InvalidSize) throw;
    report["equivalent"] = false;
    report["reason"] = std::string(to_string(e.code()));
    report["detail"] = e.what();
    if (e.index() >= 0) report["witness_index"] = e.index();
    finish(report, c, path, opts, started);
    return kFails;
  }
}

int run_roots(long long n, long long m, const Common& opts) {
  const auto started = std::chrono::steady_clock::now();
  if (m > 0) {
    if (m < 3 || m % 2 == 0) throw CLI::ValidationError("--m", "must be odd and >= 3");
    n = (m - 1) / 2;
  }
  if (n < 1) throw CLI::ValidationError("--n", "must be >= 1");
  m = 2 * n + 1;
  const auto solved = wn_equation_roots(static_cast<std::size_t>(n));
  const auto grid = t_grid(m);
  double deviation = 0;
  for (std::size_t i = 0; i < grid.values.size(); ++i)
    deviation = std::max(deviation, std::abs(solved.values[i] - grid.values[i]));

  const auto wn = symbolic_sequences(static_cast<std::size_t>(n)).w.back();
  auto coeffs = [](const IntPoly& p) {
    json out = json::array();
    for (const auto& c : p.coeffs()) out.push_back(c.str());
    return out;
  };
  json report{{"command", "roots"},
              {"n", n},
              {"m", m},
              {"solver_roots", solved.values},
              {"grid", grid.values},
              {"max_deviation", deviation},
              {"w_n",
               {{"x", coeffs(wn.x)}, {"y", coeffs(wn.y)}, {"x_text", wn.x.to_string()}, {"y_text", wn.y.to_string()}}}};
  if (opts.format == "svg") throw CLI::ValidationError("--format", "roots has no figure");
  finish(report, Configuration<double>(), "", opts, started);
  return kHolds;
}

int run_gen(long long m, long long k, std::optional<std::uint64_t> seed, const Common& opts) {
  const auto started = std::chrono::steady_clock::now();
  if (m < 1) throw CLI::ValidationError("--m", "must be >= 1");
  Configuration<double> c = k > 0 ? model_configuration(m, k) : roots_of_unity(m).config;
  if (seed) c = shuffle(transform(random_invertible(*seed, 100), c), *seed);
  if (opts.format == "svg") {
    finish(json(), c, "generated m = " + std::to_string(m), opts, started);
  } else {
    emit(serialize_config(c), opts.out);
  }
  return kHolds;
}

int run_search(int m, const std::string& coords_csv, bool uniform_only, bool all_orders, const Common& opts) {
  const auto started = std::chrono::steady_clock::now();
  SearchSpec spec;
  spec.m = m;
  spec.require_uniform = uniform_only;
  spec.dedupe = !all_orders;
  json coords = json::array();
  std::stringstream ss(coords_csv);
  for (std::string item; std::getline(ss, item, ',');) {
    spec.coordinates.push_back(parse_rational(item));
    coords.push_back(format_rational(spec.coordinates.back()));
  }
  const auto hits = enumerate_balanced(spec);

  std::size_t uniform = 0;
  std::size_t witnessed = 0;
  std::size_t canonicalized = 0;
  json configs = json::array();
  for (const auto& c : hits) {
    configs.push_back(config_to_json(c));
    if (is_uniform(c, 0).uniform) ++uniform;
    if (!c.odd()) {
      even_m_witness(c, 0);
      ++witnessed;
    } else if (c.size() >= 3 && is_uniform(c, 0).uniform) {
      canonicalize(c);
      ++canonicalized;
    }
  }
  json summary{{"m", m},
               {"coordinates", coords},
               {"require_uniform", uniform_only},
               {"dedupe", spec.dedupe},
               {"balanced", hits.size()},
               {"uniform", uniform},
               {"even_m_witnessed", witnessed},
               {"canonicalized", canonicalized},
               {"text", std::to_string(hits.size()) + " balanced, " + std::to_string(uniform) + " uniform"}};
  finish({{"command", "search"}, {"summary", summary}, {"configurations", configs}}, Configuration<double>(), "",
         opts, started);
  return kHolds;
}

int run_render(const std::string& path, const Common& opts) {
  const auto config = read_config(path);
  const Configuration<double> c = std::visit([](const auto& x) { return to_float(x); }, config);
  emit(render_svg(c, {path}), opts.out);
  return kHolds;
}

void add_common(CLI::App* cmd, Common& opts, bool with_tol) {
  if (with_tol) cmd->add_option("--tol", opts.tol, "absolute determinant tolerance (default 1e-9 * max|det|)");
  cmd->add_option("--out", opts.out, "output file (default stdout)");
  cmd->add_option("--format", opts.format, "json or svg")->check(CLI::IsMember({"json", "svg"}));
  cmd->add_flag("--timing", opts.timing, "include wall time in the report");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Balanced plane vector configurations"};
  app.require_subcommand(1);
  Common opts;
  std::string path;
  long long m = 0;
  long long n = 0;
  long long k = 0;
  std::optional<std::uint64_t> seed;
  std::string coords = "-1,0,1";
  bool uniform_only = false;
  bool all_orders = false;

  auto* check = app.add_subcommand("check", "balanced / uniform verdicts for a config file");
  check->add_option("path", path, "config file")->required();
  add_common(check, opts, true);

  auto* canon = app.add_subcommand("canon", "map a uniform balanced configuration onto the roots of unity");
  canon->add_option("path", path, "config file")->required();
  add_common(canon, opts, true);

  auto* roots = app.add_subcommand("roots", "solve w_n(t) = U and compare with 2cos(2 pi k / m)");
  auto* n_opt = roots->add_option("--n", n, "sequence length n >= 1");
  auto* m_opt = roots->add_option("--m", m, "odd configuration size m = 2n + 1");
  n_opt->excludes(m_opt);
  add_common(roots, opts, false);

  auto* gen = app.add_subcommand("gen", "write the roots of unity or a model configuration");
  gen->add_option("--m", m, "configuration size")->required();
  gen->add_option("--k", k, "emit the model configuration for grid index k instead");
  gen->add_option("--seed", seed, "apply a seeded random invertible map and shuffle");
  add_common(gen, opts, false);

  auto* search = app.add_subcommand("search", "exhaustive exact search over a coordinate grid");
  search->add_option("--m", m, "configuration size")->required();
  search->add_option("--coords", coords, "comma-separated rationals (default -1,0,1)");
  search->add_flag("--uniform", uniform_only, "keep uniform configurations only");
  search->add_flag("--all-orders", all_orders, "list every ordering instead of one per set");
  add_common(search, opts, false);

  auto* render = app.add_subcommand("render", "draw a config file as SVG");
  render->add_option("path", path, "config file")->required();
  add_common(render, opts, false);

  try {
    app.parse(argc, argv);
    if (roots->parsed() && n_opt->count() == 0 && m_opt->count() == 0)
      throw CLI::ValidationError("roots", "one of --n or --m is required");
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  try {
    if (check->parsed()) return run_check(path, opts);
    if (canon->parsed()) return run_canon(path, opts);
    if (roots->parsed()) return run_roots(n, m, opts);
    if (gen->parsed()) return run_gen(m, k, seed, opts);
    if (search->parsed()) return run_search(static_cast<int>(m), coords, uniform_only, all_orders, opts);
    if (render->parsed()) return run_render(path, opts);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
