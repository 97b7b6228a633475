#include "hgda/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace hgda {

namespace {

std::string fixed(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

struct Transform {
  double scale = 1.0;
  double ox = 0.0, oy = 0.0;  // layout point mapped to the viewBox center
  double cx = 0.0, cy = 0.0;  // viewBox center

  Point apply(Point p) const { return {cx + scale * (p.x - ox), cy - scale * (p.y - oy)}; }
};

Transform fit(const Layout& layout, const SvgStyle& style) {
  double lo_x = std::numeric_limits<double>::infinity(), lo_y = lo_x;
  double hi_x = -lo_x, hi_y = -lo_x;
  auto include = [&](Point p, double r) {
    lo_x = std::min(lo_x, p.x - r);
    lo_y = std::min(lo_y, p.y - r);
    hi_x = std::max(hi_x, p.x + r);
    hi_y = std::max(hi_y, p.y + r);
  };
  for (const Point& p : layout.positions) include(p, 0.0);
  for (const SvgOutline& o : style.outlines) include(o.center, o.radius);

  Transform t;
  t.cx = style.width / 2;
  t.cy = style.height / 2;
  if (!(hi_x >= lo_x)) return t;  // nothing to draw
  t.ox = (lo_x + hi_x) / 2;
  t.oy = (lo_y + hi_y) / 2;
  // vertex markers take pixels too; keep them off the border
  const double usable_w = style.width * (1 - 2 * style.margin) - 2 * style.vertex_radius;
  const double usable_h = style.height * (1 - 2 * style.margin) - 2 * style.vertex_radius;
  const double span_x = hi_x - lo_x, span_y = hi_y - lo_y;
  double scale = std::numeric_limits<double>::infinity();
  if (span_x > 0) scale = std::min(scale, usable_w / span_x);
  if (span_y > 0) scale = std::min(scale, usable_h / span_y);
  t.scale = std::isfinite(scale) && scale > 0 ? scale : 1.0;
  return t;
}

}  // namespace

const std::vector<std::string>& cluster_palette() {
  static const std::vector<std::string> palette{
      "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b",
      "#e377c2", "#7f7f7f", "#bcbd22", "#17becf", "#393b79", "#637939"};
  return palette;
}

std::string render_svg(const Graph& g, const Layout& layout, const SvgStyle& style) {
  if (layout.size() != g.vertex_count()) throw std::invalid_argument("layout size does not match graph");
  if (!style.cluster_of.empty() && style.cluster_of.size() != layout.size())
    throw std::invalid_argument("cluster_of must have one entry per vertex");
  const Transform t = fit(layout, style);

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fixed(style.width) + "\" height=\"" +
         fixed(style.height) + "\" viewBox=\"0 0 " + fixed(style.width) + " " + fixed(style.height) + "\">\n";
  out += "<rect x=\"0\" y=\"0\" width=\"" + fixed(style.width) + "\" height=\"" + fixed(style.height) +
         "\" fill=\"white\"/>\n";

  out += "<g fill=\"none\" stroke-dasharray=\"4 3\">\n";
  for (const SvgOutline& o : style.outlines) {
    const Point c = t.apply(o.center);
    out += "<circle cx=\"" + fixed(c.x) + "\" cy=\"" + fixed(c.y) + "\" r=\"" + fixed(t.scale * o.radius) +
           "\" stroke=\"" + o.stroke + "\"/>\n";
  }
  out += "</g>\n";

  out += "<g stroke=\"#555555\" stroke-width=\"" + fixed(style.stroke_width) + "\">\n";
  for (const Edge& e : g.edges()) {
    const Point a = t.apply(layout.positions[e.u]);
    const Point b = t.apply(layout.positions[e.v]);
    out += "<line x1=\"" + fixed(a.x) + "\" y1=\"" + fixed(a.y) + "\" x2=\"" + fixed(b.x) + "\" y2=\"" +
           fixed(b.y) + "\"/>\n";
  }
  out += "</g>\n";

  const auto& palette = cluster_palette();
  out += "<g stroke=\"black\" stroke-width=\"0.5\">\n";
  for (std::size_t v = 0; v < layout.size(); ++v) {
    const Point p = t.apply(layout.positions[v]);
    const std::string& fill =
        style.cluster_of.empty() ? palette.front()
                                 : palette[static_cast<std::size_t>(std::max(style.cluster_of[v], 0)) % palette.size()];
    out += "<circle id=\"v" + std::to_string(v) + "\" cx=\"" + fixed(p.x) + "\" cy=\"" + fixed(p.y) + "\" r=\"" +
           fixed(style.vertex_radius) + "\" fill=\"" + fill + "\"/>\n";
  }
  out += "</g>\n</svg>\n";
  return out;
}

}  // namespace hgda
