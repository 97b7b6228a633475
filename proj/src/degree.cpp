#include "hgda/degree.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace hgda {

DegreeStats degree_stats(const Graph& g) {
  DegreeStats stats;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) ++stats.histogram[g.degree(static_cast<VertexId>(v))];

  std::vector<double> xs, ys;
  for (auto [degree, count] : stats.histogram) {
    if (degree == 0 || count == 0) continue;
    xs.push_back(std::log(static_cast<double>(degree)));
    ys.push_back(std::log(static_cast<double>(count)));
  }
  if (xs.size() < 2) return stats;

  const double k = static_cast<double>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  const double slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
  const double intercept = (sy - slope * sx) / k;
  stats.fit = PowerLawFit{std::exp(intercept), slope};
  return stats;
}

Graph generate_scale_free(std::size_t n, std::size_t m, std::uint64_t seed) {
  if (m < 1 || n <= m) throw std::invalid_argument("scale-free generator requires n > m >= 1");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<VertexId, VertexId>> pairs;
  // every endpoint occurrence; sampling uniformly from it is degree-proportional
  std::vector<VertexId> endpoints;

  const std::size_t seed_size = m + 1;
  for (std::size_t a = 0; a < seed_size; ++a)
    for (std::size_t b = a + 1; b < seed_size; ++b) {
      pairs.emplace_back(static_cast<VertexId>(a), static_cast<VertexId>(b));
      endpoints.push_back(static_cast<VertexId>(a));
      endpoints.push_back(static_cast<VertexId>(b));
    }

  std::vector<VertexId> targets;
  for (std::size_t v = seed_size; v < n; ++v) {
    targets.clear();
    while (targets.size() < m) {
      std::uniform_int_distribution<std::size_t> pick(0, endpoints.size() - 1);
      const VertexId t = endpoints[pick(rng)];
      if (std::find(targets.begin(), targets.end(), t) == targets.end()) targets.push_back(t);
    }
    for (VertexId t : targets) {
      pairs.emplace_back(t, static_cast<VertexId>(v));
      endpoints.push_back(t);
      endpoints.push_back(static_cast<VertexId>(v));
    }
  }
  return from_edge_list(pairs, n);
}

}  // namespace hgda
