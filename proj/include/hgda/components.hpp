#pragma once

#include <vector>

#include "hgda/graph.hpp"

namespace hgda {

enum class TraversalMethod { dfs, bfs };

using VertexSets = std::vector<std::vector<VertexId>>;

/// Connected components of g. Each set is sorted ascending and the list is
/// ordered by smallest member, so both traversal methods return identical
/// values.
VertexSets connected_components(const Graph& g, TraversalMethod method = TraversalMethod::dfs);

/// Component index of every vertex, consistent with connected_components().
std::vector<int> component_labels(const VertexSets& components, std::size_t n);

}  // namespace hgda
