#pragma once

#include <cstdint>
#include <map>
#include <optional>

#include "hgda/graph.hpp"

namespace hgda {

struct PowerLawFit {
  double alpha = 0.0;  // scale
  double beta = 0.0;   // exponent, rho(d) ~ alpha * d^beta
};

struct DegreeStats {
  std::map<std::size_t, std::size_t> histogram;  // degree -> vertex count
  std::optional<PowerLawFit> fit;                // absent with < 2 positive degrees
};

/// Degree histogram and a least-squares fit of log(frequency) on log(degree),
/// restricted to bins with degree > 0.
DegreeStats degree_stats(const Graph& g);

/// Barabási–Albert preferential attachment: an (m+1)-clique seed, then each
/// new vertex attaches to m distinct existing vertices chosen with
/// probability proportional to degree. Produces m(m+1)/2 + m(n-m-1) edges.
/// Throws std::invalid_argument unless n > m >= 1.
Graph generate_scale_free(std::size_t n, std::size_t m, std::uint64_t seed);

}  // namespace hgda
