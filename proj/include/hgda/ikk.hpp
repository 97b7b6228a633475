#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "hgda/graph.hpp"
#include "hgda/kk.hpp"

namespace hgda {

/// Graph whose vertices are circles of the given radii.
struct SizedGraph {
  Graph base;
  std::vector<double> radii;
};

struct IkkParams {
  KkParams inner;
  double growth = 1.3;
  int max_rounds = 15;
  double clearance = 0.1;  // fraction of the smaller radius

  void validate() const;
};

/// Every pair (u < v) with |p_u - p_v| < r_u + r_v + clearance * min(r_u, r_v).
std::vector<std::pair<VertexId, VertexId>> overlap_pairs(const Layout& layout,
                                                          std::span<const double> radii,
                                                          double clearance);

struct IkkResult {
  Layout layout;
  bool resolved = false;  // no overlapping pairs remain
  int rounds = 0;
  bool kk_converged = false;      // convergence of the last KK solve
  KkParams final_params;          // KK parameters of the last round
  std::vector<double> final_weights;  // edge weights of the last round
};

/// Iterative KK for sized vertices. Each round re-weights edges to at least
/// the required center separation, solves weighted KK on a canvass of
/// max(2 * sum of radii, weighted diameter) times a global scale, and then
/// grows the weight of every overlapping adjacent pair, or the global scale
/// when an overlapping pair is not adjacent. Never throws on an unresolved
/// layout; the result is flagged instead.
IkkResult ikk_layout(const SizedGraph& g, const IkkParams& params, std::uint64_t seed);

}  // namespace hgda
