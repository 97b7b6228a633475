#include "hgda/components.hpp"

#include <algorithm>
#include <deque>

namespace hgda {

namespace {

// Iterative DFS; every vertex reached from `root` joins `out`.
void dfs_collect(const Graph& g, VertexId root, std::vector<char>& seen, std::vector<VertexId>& out) {
  std::vector<VertexId> stack{root};
  seen[root] = 1;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    out.push_back(v);
    for (VertexId w : g.neighbors(v)) {
      if (seen[w]) continue;
      seen[w] = 1;
      stack.push_back(w);
    }
  }
}

void bfs_collect(const Graph& g, VertexId root, std::vector<char>& seen, std::vector<VertexId>& out) {
  std::deque<VertexId> queue{root};
  seen[root] = 1;
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    out.push_back(v);
    for (VertexId w : g.neighbors(v)) {
      if (seen[w]) continue;
      seen[w] = 1;
      queue.push_back(w);
    }
  }
}

}  // namespace

VertexSets connected_components(const Graph& g, TraversalMethod method) {
  const std::size_t n = g.vertex_count();
  std::vector<char> seen(n, 0);
  VertexSets sets;
  for (std::size_t v = 0; v < n; ++v) {
    if (seen[v]) continue;
    std::vector<VertexId> members;
    if (method == TraversalMethod::dfs)
      dfs_collect(g, static_cast<VertexId>(v), seen, members);
    else
      bfs_collect(g, static_cast<VertexId>(v), seen, members);
    std::sort(members.begin(), members.end());
    sets.push_back(std::move(members));
  }
  // roots are visited in ascending order, so sets are already ordered by min id
  return sets;
}

std::vector<int> component_labels(const VertexSets& components, std::size_t n) {
  std::vector<int> label(n, -1);
  for (std::size_t c = 0; c < components.size(); ++c)
    for (VertexId v : components[c]) label[v] = static_cast<int>(c);
  return label;
}

}  // namespace hgda
