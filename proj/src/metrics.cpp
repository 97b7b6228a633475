#include "hgda/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hgda {

namespace {

int orientation(Point a, Point b, Point c) {
  const double cross = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  return (cross > 0) - (cross < 0);
}

// Collinear segments ab and cd: positive-length overlap?
bool collinear_overlap(Point a, Point b, Point c, Point d) {
  const bool use_x = std::abs(b.x - a.x) >= std::abs(b.y - a.y);
  auto key = [use_x](Point p) { return use_x ? p.x : p.y; };
  const double lo = std::max(std::min(key(a), key(b)), std::min(key(c), key(d)));
  const double hi = std::min(std::max(key(a), key(b)), std::max(key(c), key(d)));
  return hi > lo;
}

}  // namespace

CrossingStats crossing_stats(const Graph& g, const Layout& layout) {
  if (layout.size() != g.vertex_count()) throw std::invalid_argument("layout size does not match graph");
  CrossingStats stats;
  const auto edges = g.edges();
  const auto& p = layout.positions;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge e = edges[i];
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const Edge f = edges[j];
      if (e.u == f.u || e.u == f.v || e.v == f.u || e.v == f.v) continue;
      const int o1 = orientation(p[e.u], p[e.v], p[f.u]);
      const int o2 = orientation(p[e.u], p[e.v], p[f.v]);
      const int o3 = orientation(p[f.u], p[f.v], p[e.u]);
      const int o4 = orientation(p[f.u], p[f.v], p[e.v]);
      if (o1 * o2 < 0 && o3 * o4 < 0) {
        ++stats.crossings;
      } else if (o1 == 0 && o2 == 0 && collinear_overlap(p[e.u], p[e.v], p[f.u], p[f.v])) {
        ++stats.crossings;
        ++stats.collinear_overlaps;
      }
    }
  }
  return stats;
}

}  // namespace hgda
