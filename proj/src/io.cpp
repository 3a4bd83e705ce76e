#include "balanced/io.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "balanced/errors.hpp"

namespace balanced {

using nlohmann::json;

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) return false;
  for (std::size_t i = start; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

BigInt parse_integer(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return BigInt(std::string(s));
}

Error parse_error(const std::string& where, const std::string& what) {
  return Error(ErrorCode::Parse, where + ": " + what);
}

std::string field(std::size_t i, std::size_t j) {
  return "vectors[" + std::to_string(i) + "][" + std::to_string(j) + "]";
}

void dump(const json& v, int indent, std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
  switch (v.type()) {
    case json::value_t::object: {
      if (v.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (const auto& [key, item] : v.items()) {
        if (!first) out += ",\n";
        first = false;
        out += inner + json(key).dump() + ": ";
        dump(item, indent + 1, out);
      }
      out += "\n" + pad + "}";
      return;
    }
    case json::value_t::array: {
      bool flat = true;
      for (const auto& item : v)
        if (item.is_structured()) flat = false;
      if (v.empty()) {
        out += "[]";
        return;
      }
      if (flat) {
        out += "[";
        for (std::size_t i = 0; i < v.size(); ++i) {
          if (i) out += ", ";
          dump(v[i], indent + 1, out);
        }
        out += "]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",\n";
        out += inner;
        dump(v[i], indent + 1, out);
      }
      out += "\n" + pad + "]";
      return;
    }
    case json::value_t::number_float: {
      const double x = v.get<double>();
      out += std::isfinite(x) ? format_double(x) : "null";
      return;
    }
    default:
      out += v.dump();
  }
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  if (!is_integer_literal(num)) throw Error(ErrorCode::Parse, "not a rational: '" + std::string(text) + "'");
  if (slash == std::string_view::npos) return Rational(parse_integer(num));
  const std::string_view den = text.substr(slash + 1);
  if (!is_integer_literal(den)) throw Error(ErrorCode::Parse, "not a rational: '" + std::string(text) + "'");
  const BigInt d = parse_integer(den);
  if (d == 0) throw Error(ErrorCode::Parse, "zero denominator in '" + std::string(text) + "'");
  return Rational(parse_integer(num), d);
}

std::string format_rational(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  return den == 1 ? num.str() : num.str() + "/" + den.str();
}

std::string format_double(double x) {
  if (x == 0) x = 0;  // drop the sign of -0
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

AnyConfiguration parse_config(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1;
    for (std::size_t i = 0; i < e.byte && i < text.size(); ++i)
      if (text[i] == '\n') ++line;
    throw parse_error("line " + std::to_string(line), e.what());
  }
  if (!doc.is_object()) throw parse_error("document", "expected an object");
  if (!doc.contains("mode") || !doc["mode"].is_string()) throw parse_error("mode", "expected \"exact\" or \"float\"");
  const std::string mode = doc["mode"].get<std::string>();
  if (mode != "exact" && mode != "float") throw parse_error("mode", "expected \"exact\" or \"float\", got \"" + mode + "\"");
  if (!doc.contains("vectors") || !doc["vectors"].is_array()) throw parse_error("vectors", "expected an array");

  const json& rows = doc["vectors"];
  std::vector<Vec2<double>> floats;
  std::vector<Vec2<Rational>> exacts;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const json& row = rows[i];
    if (!row.is_array() || row.size() != 2)
      throw parse_error("vectors[" + std::to_string(i) + "]", "expected a pair [x, y]");
    if (mode == "exact") {
      Vec2<Rational> v;
      for (std::size_t j = 0; j < 2; ++j) {
        if (!row[j].is_string()) throw parse_error(field(i, j), "exact mode expects a \"p/q\" string");
        try {
          v[static_cast<Eigen::Index>(j)] = parse_rational(row[j].get<std::string>());
        } catch (const Error& e) {
          throw parse_error(field(i, j), e.message());
        }
      }
      exacts.push_back(v);
    } else {
      Vec2<double> v;
      for (std::size_t j = 0; j < 2; ++j) {
        if (!row[j].is_number()) throw parse_error(field(i, j), "float mode expects a number");
        v[static_cast<Eigen::Index>(j)] = row[j].get<double>();
      }
      floats.push_back(v);
    }
  }
  try {
    if (mode == "exact") return Configuration<Rational>(std::move(exacts));
    return Configuration<double>(std::move(floats));
  } catch (const Error& e) {
    throw parse_error("vectors[" + std::to_string(e.index()) + "]", "zero vector");
  }
}

AnyConfiguration read_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Parse, "cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_config(buf.str());
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.message(), e.index());
  }
}

json config_to_json(const Configuration<double>& c) {
  json rows = json::array();
  for (const auto& v : c) rows.push_back(json::array({v.x(), v.y()}));
  return {{"mode", "float"}, {"vectors", rows}};
}

json config_to_json(const Configuration<Rational>& c) {
  json rows = json::array();
  for (const auto& v : c) rows.push_back(json::array({format_rational(v.x()), format_rational(v.y())}));
  return {{"mode", "exact"}, {"vectors", rows}};
}

std::string serialize_config(const Configuration<double>& c) { return dump_json(config_to_json(c)); }
std::string serialize_config(const Configuration<Rational>& c) { return dump_json(config_to_json(c)); }

std::string dump_json(const json& value) {
  std::string out;
  dump(value, 0, out);
  out += "\n";
  return out;
}

}  // namespace balanced
