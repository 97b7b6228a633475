#pragma once

#include <cstddef>

#include "hgda/graph.hpp"
#include "hgda/layout.hpp"

namespace hgda {

struct CrossingStats {
  std::size_t crossings = 0;   // includes collinear overlaps
  std::size_t collinear_overlaps = 0;
};

/// Pairwise test of every two edges without a shared endpoint. A pair counts
/// when the open segments properly intersect, or when the segments are
/// collinear and overlap along a positive length (also tallied separately).
CrossingStats crossing_stats(const Graph& g, const Layout& layout);

inline std::size_t count_crossings(const Graph& g, const Layout& layout) {
  return crossing_stats(g, layout).crossings;
}

}  // namespace hgda
