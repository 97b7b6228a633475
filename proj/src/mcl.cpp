#include "hgda/mcl.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "hgda/components.hpp"
#include "hgda/error.hpp"

namespace hgda {

namespace {

using RowMajor = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

Eigen::Map<const RowMajor> view(const std::vector<double>& cells, std::size_t n) {
  const auto dim = static_cast<Eigen::Index>(n);
  return Eigen::Map<const RowMajor>(cells.data(), dim, dim);
}

std::vector<double> to_cells(const RowMajor& m) {
  return std::vector<double>(m.data(), m.data() + m.size());
}

}  // namespace

StochasticMatrix::StochasticMatrix(std::size_t n, std::vector<double> cells, double tolerance)
    : n_(n), cells_(std::move(cells)) {
  if (cells_.size() != n_ * n_) throw std::invalid_argument("stochastic matrix must be n*n");
  if (std::any_of(cells_.begin(), cells_.end(), [](double x) { return !(x >= 0.0); }))
    throw std::invalid_argument("stochastic matrix entries must be non-negative");
  if (stochasticity_error() > tolerance)
    throw std::invalid_argument("stochastic matrix columns must sum to 1");
}

StochasticMatrix StochasticMatrix::identity(std::size_t n) {
  std::vector<double> cells(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) cells[i * n + i] = 1.0;
  return StochasticMatrix(n, std::move(cells), Unchecked{});
}

double StochasticMatrix::stochasticity_error() const {
  if (n_ == 0) return 0.0;
  const Eigen::VectorXd sums = view(cells_, n_).colwise().sum();
  return (sums.array() - 1.0).abs().maxCoeff();
}

double StochasticMatrix::max_abs_difference(const StochasticMatrix& other) const {
  if (other.n_ != n_) throw std::invalid_argument("dimension mismatch");
  if (n_ == 0) return 0.0;
  return (view(cells_, n_) - view(other.cells_, n_)).cwiseAbs().maxCoeff();
}

void MclParams::validate() const {
  if (expansion < 2) throw std::invalid_argument("MCL expansion must be >= 2");
  if (!(inflation > 1.0)) throw std::invalid_argument("MCL inflation must be > 1");
  if (!(loop_weight > 0.0)) throw std::invalid_argument("MCL loop weight must be > 0");
  if (!(prune_threshold >= 0.0)) throw std::invalid_argument("MCL prune threshold must be >= 0");
  if (!(tolerance > 0.0)) throw std::invalid_argument("MCL tolerance must be > 0");
  if (max_iterations < 1) throw std::invalid_argument("MCL max iterations must be >= 1");
}

std::vector<int> Clustering::labels(std::size_t n) const {
  std::vector<int> label(n, -1);
  for (std::size_t c = 0; c < clusters.size(); ++c)
    for (VertexId v : clusters[c]) label[v] = static_cast<int>(c);
  return label;
}

StochasticMatrix build_stochastic(const AdjacencyMatrix& a, double loop_weight) {
  if (!(loop_weight > 0.0)) throw std::invalid_argument("loop weight must be positive");
  const std::size_t n = a.size();
  RowMajor m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = a(i, j);
  m.diagonal().array() += loop_weight;
  for (Eigen::Index c = 0; c < m.cols(); ++c) m.col(c) /= m.col(c).sum();
  return StochasticMatrix(n, to_cells(m), StochasticMatrix::Unchecked{});
}

StochasticMatrix expand(const StochasticMatrix& m, int e) {
  if (e < 1) throw std::invalid_argument("expansion power must be >= 1");
  const std::size_t n = m.size();
  const auto base = view(m.cells(), n);
  RowMajor result = base;
  for (int i = 1; i < e; ++i) result = (result * base).eval();
  return StochasticMatrix(n, to_cells(result), StochasticMatrix::Unchecked{});
}

StochasticMatrix inflate(const StochasticMatrix& m, double r, double prune) {
  if (!(r > 1.0)) throw std::invalid_argument("inflation power must be > 1");
  const std::size_t n = m.size();
  RowMajor result = view(m.cells(), n).array().pow(r).matrix();
  result = (result.array() < prune).select(0.0, result);
  for (Eigen::Index c = 0; c < result.cols(); ++c) {
    const double sum = result.col(c).sum();
    if (!(sum > 0.0))
      throw Error("inflation pruned column " + std::to_string(c) + " to zero");
    result.col(c) /= sum;
  }
  return StochasticMatrix(n, to_cells(result), StochasticMatrix::Unchecked{});
}

namespace {

struct SmallDisjointSet {
  std::vector<int> parent;
  explicit SmallDisjointSet(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

// Reads clusters off a (near-)limit matrix.
std::vector<std::vector<VertexId>> interpret(const StochasticMatrix& m, double threshold) {
  const std::size_t n = m.size();
  std::vector<VertexId> attractors;
  for (std::size_t v = 0; v < n; ++v)
    if (m(v, v) > threshold) attractors.push_back(static_cast<VertexId>(v));

  // attractors that exchange flow belong to one attractor system
  SmallDisjointSet systems(n);
  for (VertexId a : attractors)
    for (VertexId b : attractors)
      if (a < b && (m(a, b) > threshold || m(b, a) > threshold)) systems.unite(a, b);

  std::vector<int> owner(n, -1);
  for (std::size_t u = 0; u < n; ++u) {
    VertexId best = -1;
    double best_flow = 0.0;
    for (VertexId a : attractors) {
      if (m(a, u) > best_flow) {
        best_flow = m(a, u);
        best = a;
      }
    }
    // no flow to any attractor (unconverged input): u stands alone
    owner[u] = best < 0 ? static_cast<int>(u) : systems.find(best);
  }

  std::vector<std::vector<VertexId>> by_owner(n);
  for (std::size_t u = 0; u < n; ++u) by_owner[owner[u]].push_back(static_cast<VertexId>(u));
  std::vector<std::vector<VertexId>> clusters;
  for (auto& members : by_owner)
    if (!members.empty()) clusters.push_back(std::move(members));
  return clusters;
}

}  // namespace

Clustering mcl_cluster(const Graph& g, const MclParams& params) {
  params.validate();
  const std::size_t n = g.vertex_count();
  Clustering out;
  if (n == 0) return out;

  StochasticMatrix m = build_stochastic(AdjacencyMatrix(g), params.loop_weight);
  out.converged = false;
  for (int it = 0; it < params.max_iterations; ++it) {
    StochasticMatrix next = inflate(expand(m, params.expansion), params.inflation, params.prune_threshold);
    const double change = next.max_abs_difference(m);
    m = std::move(next);
    out.iterations = it + 1;
    if (change < params.tolerance) {
      out.converged = true;
      break;
    }
  }

  // split clusters whose induced subgraph is disconnected
  for (const auto& cluster : interpret(m, params.attractor_threshold)) {
    const Subgraph sub = induced_subgraph(g, cluster);
    for (const auto& part : connected_components(sub.graph)) {
      std::vector<VertexId> members;
      for (VertexId local : part) members.push_back(sub.original_ids[local]);
      std::sort(members.begin(), members.end());
      out.clusters.push_back(std::move(members));
    }
  }
  std::sort(out.clusters.begin(), out.clusters.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });

  for (const auto& cluster : out.clusters) {
    // strongest self-flow in the cluster; lowest id on ties
    VertexId attractor = cluster.front();
    for (VertexId v : cluster)
      if (m(v, v) > m(attractor, attractor)) attractor = v;
    out.attractors.push_back(attractor);
  }
  return out;
}

}  // namespace hgda
