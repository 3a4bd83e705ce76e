#include "balanced/svg.hpp"

#include <algorithm>
#include <cstdio>

namespace balanced {

namespace {

constexpr double kCanvas = 800;
constexpr double kCenter = kCanvas / 2;
constexpr double kReach = 340;

std::string fixed(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  // Avoid "-0.00".
  if (std::string(buf) == "-0.00") return "0.00";
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

}  // namespace

std::string render_svg(const Configuration<double>& c, const SvgOptions& options) {
  double longest = 1;
  for (const auto& v : c) longest = std::max(longest, v.norm());
  const double scale = kReach / longest;
  auto px = [&](double x) { return fixed(kCenter + scale * x); };
  auto py = [&](double y) { return fixed(kCenter - scale * y); };

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" viewBox=\"0 0 800 800\">\n";
  out += "  <defs>\n";
  out += "    <marker id=\"head\" markerWidth=\"10\" markerHeight=\"8\" refX=\"9\" refY=\"4\" orient=\"auto\">\n";
  out += "      <path d=\"M0,0 L10,4 L0,8 z\" fill=\"#1f4e9c\"/>\n";
  out += "    </marker>\n";
  out += "  </defs>\n";
  out += "  <rect x=\"0\" y=\"0\" width=\"800\" height=\"800\" fill=\"white\"/>\n";
  if (!options.title.empty())
    out += "  <text x=\"20\" y=\"30\" font-family=\"sans-serif\" font-size=\"18\">" + escape(options.title) +
           "</text>\n";
  out += "  <line x1=\"20.00\" y1=\"400.00\" x2=\"780.00\" y2=\"400.00\" stroke=\"#cccccc\"/>\n";
  out += "  <line x1=\"400.00\" y1=\"20.00\" x2=\"400.00\" y2=\"780.00\" stroke=\"#cccccc\"/>\n";
  out += "  <circle cx=\"400.00\" cy=\"400.00\" r=\"" + fixed(scale) +
         "\" fill=\"none\" stroke=\"#999999\" stroke-dasharray=\"6,4\"/>\n";
  for (std::size_t i = 0; i < c.size(); ++i) {
    const auto& v = c[i];
    out += "  <line x1=\"400.00\" y1=\"400.00\" x2=\"" + px(v.x()) + "\" y2=\"" + py(v.y()) +
           "\" stroke=\"#1f4e9c\" stroke-width=\"2\" marker-end=\"url(#head)\"/>\n";
    const double n = v.norm();
    const double lx = v.x() + 18 / scale * v.x() / n;
    const double ly = v.y() + 18 / scale * v.y() / n;
    out += "  <text x=\"" + px(lx) + "\" y=\"" + py(ly) +
           "\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\" dominant-baseline=\"middle\">" +
           std::to_string(i) + "</text>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace balanced
