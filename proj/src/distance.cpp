#include "hgda/distance.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

#include "hgda/components.hpp"
#include "hgda/error.hpp"

namespace hgda {

bool DistanceMatrix::connected() const {
  return std::all_of(cells_.begin(), cells_.end(), [](double d) { return std::isfinite(d); });
}

double DistanceMatrix::diameter() const {
  double best = 0.0;
  for (double d : cells_)
    if (std::isfinite(d)) best = std::max(best, d);
  return best;
}

DistanceMatrix bfs_distances(const Graph& g) {
  const std::size_t n = g.vertex_count();
  DistanceMatrix d(n);
  std::vector<int> hops(n);
  std::deque<VertexId> queue;
  for (std::size_t s = 0; s < n; ++s) {
    std::fill(hops.begin(), hops.end(), -1);
    hops[s] = 0;
    queue.assign(1, static_cast<VertexId>(s));
    while (!queue.empty()) {
      const VertexId v = queue.front();
      queue.pop_front();
      for (VertexId w : g.neighbors(v)) {
        if (hops[w] >= 0) continue;
        hops[w] = hops[v] + 1;
        queue.push_back(w);
      }
    }
    for (std::size_t t = 0; t < n; ++t)
      if (hops[t] >= 0) d(s, t) = hops[t];
  }
  return d;
}

DistanceMatrix floyd_warshall(const Graph& g) {
  const std::size_t n = g.vertex_count();
  DistanceMatrix d(n);
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edges()[i];
    d(e.u, e.v) = d(e.v, e.u) = g.weight(i);
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      const double dik = d(i, k);
      if (!std::isfinite(dik)) continue;
      for (std::size_t j = 0; j < n; ++j) {
        const double through = dik + d(k, j);
        if (through < d(i, j)) d(i, j) = through;
      }
    }
  return d;
}

DistanceMatrix apsp(const Graph& g) {
  auto components = connected_components(g);
  if (components.size() > 1)
    throw DisconnectedGraphError("shortest paths requested on a graph with " +
                                     std::to_string(components.size()) + " components",
                                 std::move(components));
  return g.weighted() ? floyd_warshall(g) : bfs_distances(g);
}

}  // namespace hgda
