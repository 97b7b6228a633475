#include "hgda/parallel_cc.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace hgda {

DisjointSet::DisjointSet(std::size_t n) : parent_(n), rank_(n, 0) {
  std::iota(parent_.begin(), parent_.end(), 0);
}

VertexId DisjointSet::find(VertexId x) {
  ++finds_;
  VertexId root = x;
  while (parent_[root] != root) root = parent_[root];
  while (parent_[x] != root) x = std::exchange(parent_[x], root);
  return root;
}

bool DisjointSet::unite(VertexId x, VertexId y) {
  x = find(x);
  y = find(y);
  if (x == y) return false;
  link(x, y);
  return true;
}

void DisjointSet::link(VertexId root_x, VertexId root_y) {
  ++unions_;
  if (rank_[root_x] < rank_[root_y]) std::swap(root_x, root_y);
  parent_[root_y] = root_x;
  if (rank_[root_x] == rank_[root_y]) ++rank_[root_x];
}

std::vector<std::vector<Edge>> partition_edges(const Graph& g, std::size_t p) {
  if (p < 1) throw std::invalid_argument("partition count must be >= 1");
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<Edge>> parts(p);
  std::size_t block = 0;
  for (const Edge& e : g.edges()) {  // sorted by u
    while (block + 1 < p && static_cast<std::size_t>(e.u) >= (block + 1) * n / p) ++block;
    parts[block].push_back(e);
  }
  return parts;
}

SpanningForest spanning_forest(std::span<const Edge> edges, std::size_t n) {
  std::vector<Edge> sorted(edges.begin(), edges.end());
  std::sort(sorted.begin(), sorted.end());
  SpanningForest forest{n, {}};
  DisjointSet sets(n);
  for (const Edge& e : sorted) {
    if (static_cast<std::size_t>(e.v) >= n || static_cast<std::size_t>(e.u) >= n)
      throw std::out_of_range("edge endpoint out of range");
    if (sets.find(e.u) != sets.find(e.v)) {
      sets.unite(e.u, e.v);
      forest.edges.push_back(e);
    }
  }
  return forest;
}

MergeResult merge_forests(const SpanningForest& a, const SpanningForest& b) {
  if (a.n != b.n) throw std::invalid_argument("forests span different vertex counts");
  DisjointSet sets(b.n);
  for (const Edge& e : b.edges) sets.unite(e.u, e.v);
  const std::size_t finds_before = sets.find_calls();
  const std::size_t unions_before = sets.union_calls();

  MergeResult out;
  out.forest = b;
  for (const Edge& e : a.edges) {
    ++out.cost.edges_examined;
    const VertexId ru = sets.find(e.u);
    const VertexId rv = sets.find(e.v);
    if (ru == rv) continue;
    sets.link(ru, rv);
    out.forest.edges.push_back(e);
  }
  out.cost.finds = sets.find_calls() - finds_before;
  out.cost.unions = sets.union_calls() - unions_before;
  std::sort(out.forest.edges.begin(), out.forest.edges.end());
  return out;
}

VertexSets forest_components(const SpanningForest& forest) {
  DisjointSet sets(forest.n);
  for (const Edge& e : forest.edges) sets.unite(e.u, e.v);
  std::vector<int> slot(forest.n, -1);
  VertexSets out;
  for (std::size_t v = 0; v < forest.n; ++v) {
    const VertexId root = sets.find(static_cast<VertexId>(v));
    if (slot[root] < 0) {
      slot[root] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[slot[root]].push_back(static_cast<VertexId>(v));
  }
  return out;
}

ParallelComponents parallel_components(const Graph& g, std::size_t p) {
  const auto parts = partition_edges(g, p);
  const std::size_t n = g.vertex_count();

  std::vector<std::future<SpanningForest>> pending;
  for (const auto& part : parts)
    pending.push_back(std::async(std::launch::async, [&part, n] { return spanning_forest(part, n); }));
  std::vector<SpanningForest> level;
  for (auto& f : pending) level.push_back(f.get());

  ParallelComponents out;
  while (level.size() > 1) {
    std::vector<std::future<MergeResult>> merges;
    for (std::size_t i = 0; i + 1 < level.size(); i += 2)
      merges.push_back(std::async(std::launch::async,
                                  [&level, i] { return merge_forests(level[i], level[i + 1]); }));
    std::vector<SpanningForest> next;
    for (auto& m : merges) {
      MergeResult r = m.get();
      out.merges.push_back(r.cost);
      next.push_back(std::move(r.forest));
    }
    if (level.size() % 2 == 1) next.push_back(std::move(level.back()));
    level = std::move(next);
  }
  out.components = forest_components(level.front());
  return out;
}

}  // namespace hgda
