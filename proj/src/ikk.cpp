#include "hgda/ikk.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "hgda/distance.hpp"

namespace hgda {

void IkkParams::validate() const {
  inner.validate();
  if (!(growth > 1.0)) throw std::invalid_argument("IKK growth must be > 1");
  if (max_rounds < 1) throw std::invalid_argument("IKK max rounds must be >= 1");
  if (!(clearance >= 0.0)) throw std::invalid_argument("IKK clearance must be >= 0");
}

namespace {

double separation(double ru, double rv, double clearance) {
  return ru + rv + clearance * std::min(ru, rv);
}

}  // namespace

std::vector<std::pair<VertexId, VertexId>> overlap_pairs(const Layout& layout,
                                                          std::span<const double> radii,
                                                          double clearance) {
  if (radii.size() != layout.size()) throw std::invalid_argument("one radius per vertex required");
  std::vector<std::pair<VertexId, VertexId>> out;
  const auto& p = layout.positions;
  for (std::size_t u = 0; u < p.size(); ++u)
    for (std::size_t v = u + 1; v < p.size(); ++v)
      if (distance(p[u], p[v]) < separation(radii[u], radii[v], clearance))
        out.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
  return out;
}

IkkResult ikk_layout(const SizedGraph& g, const IkkParams& params, std::uint64_t seed) {
  params.validate();
  const std::size_t n = g.base.vertex_count();
  if (g.radii.size() != n) throw std::invalid_argument("one radius per vertex required");
  if (std::any_of(g.radii.begin(), g.radii.end(), [](double r) { return !(r > 0.0); }))
    throw std::invalid_argument("vertex radii must be positive");

  IkkResult result;
  result.final_params = params.inner;
  if (n == 0) {
    result.resolved = true;
    result.kk_converged = true;
    return result;
  }

  std::vector<double> weights(g.base.edge_count());
  for (std::size_t i = 0; i < weights.size(); ++i) {
    const Edge& e = g.base.edges()[i];
    weights[i] = std::max(g.base.weight(i), separation(g.radii[e.u], g.radii[e.v], params.clearance));
  }
  const double radius_sum = std::accumulate(g.radii.begin(), g.radii.end(), 0.0);
  double scale = 1.0;

  for (int round = 1; round <= params.max_rounds; ++round) {
    result.rounds = round;
    const Graph weighted = reweighted(g.base, [&](const Edge& e, double) {
      return weights[*g.base.find_edge(e.u, e.v)];
    });
    const DistanceMatrix d = apsp(weighted);
    const double diameter = d.diameter();

    // the KK tolerance is expressed for a unit canvass and unit diameter;
    // gradients scale as canvass / diameter^2
    KkParams p = params.inner;
    p.L0 = scale * std::max(2.0 * radius_sum, diameter);
    const double unit = p.L0 / params.inner.L0;
    p.jitter = params.inner.jitter * unit;
    p.epsilon = params.inner.epsilon * unit / std::max(1.0, diameter * diameter);

    KkResult kk = kk_layout(d, p, seed);
    result.layout = std::move(kk.layout);
    result.kk_converged = kk.converged;
    result.final_params = p;
    result.final_weights = weights;

    const auto overlaps = overlap_pairs(result.layout, g.radii, params.clearance);
    if (overlaps.empty()) {
      result.resolved = true;
      return result;
    }
    bool grow_scale = false;
    for (auto [u, v] : overlaps) {
      if (auto e = g.base.find_edge(u, v))
        weights[*e] *= params.growth;
      else
        grow_scale = true;
    }
    if (grow_scale) scale *= params.growth;
  }
  return result;
}

}  // namespace hgda
