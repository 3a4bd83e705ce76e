#ifndef BALANCED_IO_HPP
#define BALANCED_IO_HPP

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

#include <json.hpp>

#include "balanced/geom.hpp"

namespace balanced {

using AnyConfiguration = std::variant<Configuration<double>, Configuration<Rational>>;

/// "p/q" or "p"; throws Error(Parse) on anything else or a zero denominator.
Rational parse_rational(std::string_view text);
/// Lowest-terms "p/q", or "p" for integers.
std::string format_rational(const Rational& r);
/// 17 significant digits ("%.17g"), enough to round-trip any double.
std::string format_double(double x);

// Config file layout:
//   {"mode": "exact", "vectors": [["1/2", "-3"], ...]}
//   {"mode": "float", "vectors": [[0.5, -3.0], ...]}
AnyConfiguration parse_config(const std::string& text);
AnyConfiguration read_config(const std::filesystem::path& path);

nlohmann::json config_to_json(const Configuration<double>& c);
nlohmann::json config_to_json(const Configuration<Rational>& c);
std::string serialize_config(const Configuration<double>& c);
std::string serialize_config(const Configuration<Rational>& c);

/// Deterministic pretty printer: sorted keys, two-space indent, doubles via
/// format_double, arrays of scalars kept on one line. Ends with a newline.
std::string dump_json(const nlohmann::json& value);

}  // namespace balanced

#endif  // BALANCED_IO_HPP
