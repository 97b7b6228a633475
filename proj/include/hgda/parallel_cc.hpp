#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hgda/components.hpp"
#include "hgda/graph.hpp"

namespace hgda {

/// Union-find with union by rank and path compression. Counts calls so
/// merge cost can be checked against its bound.
class DisjointSet {
 public:
  explicit DisjointSet(std::size_t n);

  std::size_t size() const noexcept { return parent_.size(); }
  VertexId find(VertexId x);
  /// Unites the sets of x and y; returns false if they were already one set.
  bool unite(VertexId x, VertexId y);
  /// Joins two distinct roots as returned by find().
  void link(VertexId root_x, VertexId root_y);

  std::size_t find_calls() const noexcept { return finds_; }
  std::size_t union_calls() const noexcept { return unions_; }

 private:
  std::vector<VertexId> parent_;
  std::vector<unsigned char> rank_;
  std::size_t finds_ = 0;
  std::size_t unions_ = 0;
};

struct SpanningForest {
  std::size_t n = 0;
  std::vector<Edge> edges;
};

struct MergeCost {
  std::size_t edges_examined = 0;
  std::size_t finds = 0;
  std::size_t unions = 0;
};

struct MergeResult {
  SpanningForest forest;
  MergeCost cost;
};

/// Splits E by contiguous row blocks of the adjacency matrix: block b owns
/// rows [b*n/p, (b+1)*n/p), and edge (u,v) with u < v belongs to u's block.
std::vector<std::vector<Edge>> partition_edges(const Graph& g, std::size_t p);

/// Spanning forest of (0..n-1, edges) by one union-find pass in sorted edge order.
SpanningForest spanning_forest(std::span<const Edge> edges, std::size_t n);

/// Seeds a disjoint set with b's edges, then adds each edge of a whose
/// endpoints are still in different trees. Only the pass over a is counted.
MergeResult merge_forests(const SpanningForest& a, const SpanningForest& b);

/// Components read off a forest; same ordering as connected_components().
VertexSets forest_components(const SpanningForest& forest);

struct ParallelComponents {
  VertexSets components;
  std::vector<MergeCost> merges;  // in merge-tree order
};

/// p per-block forests, merged pairwise level by level as a balanced binary
/// tree. Forests and merges within a level run concurrently.
ParallelComponents parallel_components(const Graph& g, std::size_t p);

}  // namespace hgda
