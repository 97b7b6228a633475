#pragma once

#include <cstddef>
#include <vector>

#include "hgda/graph.hpp"

namespace hgda {

/// Column-stochastic matrix (dense, row-major storage). Every column sums to 1.
class StochasticMatrix {
 public:
  StochasticMatrix() = default;
  /// Wraps `cells` (row-major n*n). Throws std::invalid_argument unless every
  /// entry is non-negative and every column sums to 1 within `tolerance`.
  StochasticMatrix(std::size_t n, std::vector<double> cells, double tolerance = 1e-9);

  static StochasticMatrix identity(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  double operator()(std::size_t row, std::size_t col) const { return cells_[row * n_ + col]; }
  const std::vector<double>& cells() const noexcept { return cells_; }

  /// Largest |column sum - 1|.
  double stochasticity_error() const;
  double max_abs_difference(const StochasticMatrix& other) const;

 private:
  struct Unchecked {};
  StochasticMatrix(std::size_t n, std::vector<double> cells, Unchecked)
      : n_(n), cells_(std::move(cells)) {}
  friend StochasticMatrix build_stochastic(const AdjacencyMatrix&, double);
  friend StochasticMatrix expand(const StochasticMatrix&, int);
  friend StochasticMatrix inflate(const StochasticMatrix&, double, double);

  std::size_t n_ = 0;
  std::vector<double> cells_;
};

struct MclParams {
  int expansion = 2;          // e >= 2
  double inflation = 2.0;     // r > 1
  double loop_weight = 1.0;   // self-loop added before normalization
  double prune_threshold = 1e-6;
  double tolerance = 1e-8;    // max-norm of successive difference
  int max_iterations = 100;
  double attractor_threshold = 1e-6;

  /// Throws std::invalid_argument on out-of-range values.
  void validate() const;
};

struct Clustering {
  std::vector<std::vector<VertexId>> clusters;  // sorted, ordered by smallest member
  std::vector<VertexId> attractors;             // attractors[i] is in clusters[i]
  bool converged = true;
  int iterations = 0;

  std::vector<int> labels(std::size_t n) const;
};

/// M = column-normalize(A + loop_weight * I). Throws std::invalid_argument if
/// loop_weight <= 0.
StochasticMatrix build_stochastic(const AdjacencyMatrix& a, double loop_weight);

/// M^e by repeated multiplication.
StochasticMatrix expand(const StochasticMatrix& m, int e);

/// Entrywise power r, entries below `prune` zeroed, columns renormalized.
/// Throws hgda::Error if a column is pruned away entirely.
StochasticMatrix inflate(const StochasticMatrix& m, double r, double prune);

/// Markov clustering of g. Iterates expand/inflate until the max cell change
/// falls below tolerance, then reads clusters off the limit matrix: attractors
/// are vertices with M[v][v] above the threshold, attractors exchanging flow
/// form one system, and each vertex u joins the system of the attractor v
/// maximizing M[v][u] (lowest id on ties). Clusters whose induced subgraph is
/// disconnected are split into their components.
Clustering mcl_cluster(const Graph& g, const MclParams& params = {});

}  // namespace hgda
