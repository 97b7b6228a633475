#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "hgda/graph.hpp"

namespace hgda {

inline constexpr double kUnreachable = std::numeric_limits<double>::infinity();

/// All-pairs graph-theoretic distances. Unreachable pairs hold kUnreachable.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t n) : n_(n), cells_(n * n, kUnreachable) {
    for (std::size_t i = 0; i < n; ++i) cells_[i * n + i] = 0.0;
  }

  std::size_t size() const noexcept { return n_; }
  double operator()(std::size_t i, std::size_t j) const { return cells_[i * n_ + j]; }
  double& operator()(std::size_t i, std::size_t j) { return cells_[i * n_ + j]; }

  bool connected() const;
  /// Largest finite entry (the graph diameter when connected).
  double diameter() const;

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<double> cells_;
};

/// Hop counts from every source by breadth-first search. Ignores weights.
DistanceMatrix bfs_distances(const Graph& g);

/// Floyd–Warshall over edge weights (1 when unweighted).
DistanceMatrix floyd_warshall(const Graph& g);

/// Shortest-path distances of a connected graph: BFS on unweighted input,
/// Floyd–Warshall on weighted input. Throws DisconnectedGraphError otherwise.
DistanceMatrix apsp(const Graph& g);

}  // namespace hgda
