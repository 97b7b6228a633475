#include "hgda/graph.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace hgda {

Graph::Graph(std::size_t n, std::vector<Edge> edges, std::optional<std::vector<double>> weights)
    : n_(n), edges_(std::move(edges)), weights_(std::move(weights)) {
  if (weights_ && weights_->size() != edges_.size())
    throw std::invalid_argument("weight count does not match edge count");
  if (edges_.empty()) weights_.reset();  // no edge to carry a weight
  for (std::size_t i = 0; i + 1 < edges_.size(); ++i)
    if (!(edges_[i] < edges_[i + 1])) throw std::invalid_argument("edges must be sorted and unique");

  std::vector<std::size_t> degree(n_, 0);
  for (const Edge& e : edges_) {
    if (e.u < 0 || e.u >= e.v || static_cast<std::size_t>(e.v) >= n_)
      throw std::invalid_argument("malformed edge");
    ++degree[e.u];
    ++degree[e.v];
  }
  offsets_.assign(n_ + 1, 0);
  for (std::size_t v = 0; v < n_; ++v) offsets_[v + 1] = offsets_[v] + degree[v];
  adjacency_.resize(offsets_[n_]);
  adjacency_edge_.resize(offsets_[n_]);
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    adjacency_[cursor[e.u]] = e.v;
    adjacency_edge_[cursor[e.u]++] = i;
    adjacency_[cursor[e.v]] = e.u;
    adjacency_edge_[cursor[e.v]++] = i;
  }
  // edges are sorted by (u,v), so neighbors of v arrive as: smaller ids (via
  // their own rows, ascending u) then larger ids (ascending v); already sorted.
}

std::span<const VertexId> Graph::neighbors(VertexId v) const {
  return {adjacency_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
}

std::span<const std::size_t> Graph::incident_edges(VertexId v) const {
  return {adjacency_edge_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
}

std::optional<std::size_t> Graph::find_edge(VertexId a, VertexId b) const {
  if (a == b) return std::nullopt;
  const Edge key{std::min(a, b), std::max(a, b)};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

bool Graph::has_edge(VertexId a, VertexId b) const { return find_edge(a, b).has_value(); }

namespace {

Graph build(std::span<const std::pair<VertexId, VertexId>> pairs, std::span<const double> weights,
            bool weighted, std::size_t n) {
  struct Row {
    Edge e;
    std::size_t order;
    double w;
  };
  std::vector<Row> rows;
  rows.reserve(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    auto [a, b] = pairs[i];
    if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= n || static_cast<std::size_t>(b) >= n)
      throw std::out_of_range("vertex id out of range: (" + std::to_string(a) + ", " +
                              std::to_string(b) + ") with n = " + std::to_string(n));
    const double w = weighted ? weights[i] : 1.0;
    if (!(w > 0.0) || !std::isfinite(w))
      throw std::invalid_argument("edge weight must be positive and finite");
    if (a == b) continue;
    rows.push_back({{std::min(a, b), std::max(a, b)}, i, w});
  }
  std::stable_sort(rows.begin(), rows.end(), [](const Row& x, const Row& y) { return x.e < y.e; });
  std::vector<Edge> edges;
  std::vector<double> w;
  for (const Row& r : rows) {
    if (!edges.empty() && edges.back() == r.e) continue;
    edges.push_back(r.e);
    w.push_back(r.w);
  }
  if (!weighted) return Graph(n, std::move(edges), std::nullopt);
  return Graph(n, std::move(edges), std::move(w));
}

}  // namespace

Graph from_edge_list(std::span<const std::pair<VertexId, VertexId>> pairs, std::size_t n) {
  return build(pairs, {}, false, n);
}

Graph from_edge_list(std::span<const std::pair<VertexId, VertexId>> pairs,
                     std::span<const double> weights, std::size_t n) {
  if (weights.size() != pairs.size()) throw std::invalid_argument("one weight per pair required");
  return build(pairs, weights, true, n);
}

AdjacencyMatrix::AdjacencyMatrix(const Graph& g) : n_(g.vertex_count()), cells_(n_ * n_, 0) {
  for (const Edge& e : g.edges()) {
    cells_[e.u * n_ + e.v] = 1;
    cells_[e.v * n_ + e.u] = 1;
  }
}

std::size_t AdjacencyMatrix::row_sum(std::size_t row) const {
  std::size_t s = 0;
  for (std::size_t j = 0; j < n_; ++j) s += cells_[row * n_ + j];
  return s;
}

Subgraph induced_subgraph(const Graph& g, std::span<const VertexId> vertices) {
  std::vector<int> local(g.vertex_count(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const VertexId v = vertices[i];
    if (v < 0 || static_cast<std::size_t>(v) >= g.vertex_count())
      throw std::out_of_range("vertex id out of range: " + std::to_string(v));
    if (local[v] != -1) throw std::invalid_argument("duplicate vertex in subgraph selection");
    local[v] = static_cast<int>(i);
  }
  std::vector<std::pair<VertexId, VertexId>> pairs;
  std::vector<double> weights;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edges()[i];
    if (local[e.u] < 0 || local[e.v] < 0) continue;
    pairs.emplace_back(local[e.u], local[e.v]);
    weights.push_back(g.weight(i));
  }
  Subgraph out;
  out.graph = g.weighted() ? from_edge_list(pairs, weights, vertices.size())
                           : from_edge_list(pairs, vertices.size());
  out.original_ids.assign(vertices.begin(), vertices.end());
  return out;
}

}  // namespace hgda
