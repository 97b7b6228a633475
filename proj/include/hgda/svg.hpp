#pragma once

#include <string>
#include <vector>

#include "hgda/graph.hpp"
#include "hgda/layout.hpp"

namespace hgda {

struct SvgOutline {
  Point center;  // layout coordinates
  double radius = 0.0;
  std::string stroke = "#d62728";
};

struct SvgStyle {
  double width = 800.0;
  double height = 800.0;
  double margin = 0.05;          // fraction of each side kept empty
  double vertex_radius = 4.0;    // pixels
  double stroke_width = 1.0;
  std::vector<int> cluster_of;   // optional per-vertex color index
  std::vector<SvgOutline> outlines;  // e.g. cluster and component circles
};

/// Fixed 12-color palette used for cluster fills.
const std::vector<std::string>& cluster_palette();

/// Straight-line drawing: every edge a <line>, every vertex a <circle>, all
/// mapped by one uniform affine transform into the viewBox.
std::string render_svg(const Graph& g, const Layout& layout, const SvgStyle& style = {});

}  // namespace hgda
