#ifndef BALANCED_SVG_HPP
#define BALANCED_SVG_HPP

#include <string>

#include "balanced/geom.hpp"

namespace balanced {

struct SvgOptions {
  std::string title;
};

/// 800x800 figure: members as arrows from the origin labeled by index, with
/// the unit circle overlaid. Coordinates are printed with fixed precision so
/// the output is byte-stable.
std::string render_svg(const Configuration<double>& c, const SvgOptions& options = {});

}  // namespace balanced

#endif  // BALANCED_SVG_HPP
