#pragma once

#include <cmath>
#include <vector>

namespace hgda {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
  friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
  friend Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }
};

inline double distance(Point a, Point b) { return std::hypot(a.x - b.x, a.y - b.y); }

/// Per-vertex 2D coordinates plus the side of the square canvass they were
/// laid out for.
struct Layout {
  std::vector<Point> positions;
  double canvass = 1.0;

  std::size_t size() const noexcept { return positions.size(); }
  friend bool operator==(const Layout&, const Layout&) = default;
};

inline Point centroid(const std::vector<Point>& points) {
  Point c;
  if (points.empty()) return c;
  for (const Point& p : points) c = c + p;
  return (1.0 / static_cast<double>(points.size())) * c;
}

}  // namespace hgda
