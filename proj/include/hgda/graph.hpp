#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace hgda {

using VertexId = int;

/// Unordered edge, stored with u < v.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Undirected simple graph on dense vertex ids 0..n-1.
///
/// Edges are kept sorted and deduplicated; self-loops never enter the edge
/// set. A graph is either unweighted (every edge has weight 1) or carries one
/// positive weight per edge; an edgeless graph is always unweighted. Values
/// are immutable once built.
class Graph {
 public:
  Graph() = default;

  /// Builds from edges that are already normalized. Prefer from_edge_list().
  Graph(std::size_t n, std::vector<Edge> edges, std::optional<std::vector<double>> weights);

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  bool weighted() const noexcept { return weights_.has_value(); }

  std::span<const Edge> edges() const noexcept { return edges_; }
  double weight(std::size_t edge_index) const { return weights_ ? (*weights_)[edge_index] : 1.0; }
  const std::optional<std::vector<double>>& weights() const noexcept { return weights_; }

  /// Neighbors of v in ascending order.
  std::span<const VertexId> neighbors(VertexId v) const;
  /// Edge indices parallel to neighbors(v).
  std::span<const std::size_t> incident_edges(VertexId v) const;
  std::size_t degree(VertexId v) const { return neighbors(v).size(); }

  bool has_edge(VertexId a, VertexId b) const;
  /// Index of edge {a,b} in edges(), or nullopt.
  std::optional<std::size_t> find_edge(VertexId a, VertexId b) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_ && a.weights_ == b.weights_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::optional<std::vector<double>> weights_;
  // CSR adjacency
  std::vector<std::size_t> offsets_{0};
  std::vector<VertexId> adjacency_;
  std::vector<std::size_t> adjacency_edge_;
};

/// Builds a graph from raw id pairs. Duplicates and both orientations of a pair
/// collapse to one edge (first weight wins); self-loops are dropped.
/// Throws std::out_of_range for ids >= n and std::invalid_argument for
/// non-positive weights.
Graph from_edge_list(std::span<const std::pair<VertexId, VertexId>> pairs, std::size_t n);
Graph from_edge_list(std::span<const std::pair<VertexId, VertexId>> pairs,
                     std::span<const double> weights, std::size_t n);

/// Same graph with every weight replaced by w(e) = f(edge).
template <class F>
Graph reweighted(const Graph& g, F&& f) {
  std::vector<double> w(g.edge_count());
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = f(g.edges()[i], g.weight(i));
  return Graph(g.vertex_count(), std::vector<Edge>(g.edges().begin(), g.edges().end()), std::move(w));
}

/// Dense 0/1 adjacency matrix, row-major.
class AdjacencyMatrix {
 public:
  explicit AdjacencyMatrix(const Graph& g);

  std::size_t size() const noexcept { return n_; }
  int operator()(std::size_t row, std::size_t col) const { return cells_[row * n_ + col]; }
  std::size_t row_sum(std::size_t row) const;

 private:
  std::size_t n_ = 0;
  std::vector<int> cells_;
};

struct Subgraph {
  Graph graph;
  /// local id -> original id
  std::vector<VertexId> original_ids;
};

/// Subgraph induced by `vertices`, relabeled 0..|vertices|-1 in the given order.
Subgraph induced_subgraph(const Graph& g, std::span<const VertexId> vertices);

}  // namespace hgda
