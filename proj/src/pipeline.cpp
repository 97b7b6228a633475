#include "hgda/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <future>
#include <map>
#include <numeric>
#include <stdexcept>

#include "hgda/components.hpp"
#include "hgda/distance.hpp"
#include "hgda/error.hpp"

namespace hgda {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

double snap(double value, double quantum) { return std::nearbyint(value / quantum) * quantum; }

struct StageClock {
  std::map<std::string, double> totals;
  void add(const std::string& stage, Clock::time_point since) { totals[stage] += elapsed_ms(since); }
};

// Offset that moves a cluster from its own frame into the final drawing.
Point cluster_offset(const Layout& local, Point cluster_center, Point component_centroid,
                     Point component_center) {
  const Point c = centroid(local.positions);
  return Point{-c.x + cluster_center.x - component_centroid.x + component_center.x,
               -c.y + cluster_center.y - component_centroid.y + component_center.y};
}

ComponentResult lay_out_component(const Graph& g, std::vector<VertexId> vertices,
                                  const HgdaConfig& config, StageClock& clock,
                                  std::vector<std::string>& warnings) {
  ComponentResult out;
  out.vertices = std::move(vertices);
  const Subgraph component = induced_subgraph(g, out.vertices);

  auto t = Clock::now();
  const Clustering clustering = mcl_cluster(component.graph, config.mcl);
  clock.add("mcl", t);
  out.mcl_converged = clustering.converged;
  if (!clustering.converged)
    warnings.push_back("MCL did not converge on component containing vertex " +
                       std::to_string(out.vertices.front()));

  t = Clock::now();
  std::vector<Layout> layouts;
  for (std::size_t c = 0; c < clustering.clusters.size(); ++c) {
    const auto& members = clustering.clusters[c];
    const Subgraph cluster = induced_subgraph(component.graph, members);
    KkResult kk = kk_layout(apsp(cluster.graph), config.kk, config.seed);
    ClusterResult cr;
    for (VertexId local : members) cr.vertices.push_back(component.original_ids[local]);
    cr.attractor = component.original_ids[clustering.attractors[c]];
    cr.kk_converged = kk.converged;
    if (!kk.converged)
      warnings.push_back("KK did not converge on cluster containing vertex " +
                         std::to_string(cr.vertices.front()) + " (max gradient " +
                         std::to_string(kk.max_gradient) + ")");
    cr.local = kk.layout;
    layouts.push_back(std::move(kk.layout));
    out.clusters.push_back(std::move(cr));
  }
  clock.add("kk", t);

  t = Clock::now();
  out.phantom = phantom_graph_for_component(component.graph, clustering, layouts,
                                            config.radius_margin, config.min_radius * config.kk.L0);
  for (std::size_t c = 0; c < out.clusters.size(); ++c) out.clusters[c].radius = out.phantom.radii[c];
  const IkkResult ikk = ikk_layout({out.phantom.graph, out.phantom.radii}, config.ikk, config.seed);
  out.cluster_centers = ikk.layout;
  out.ikk_resolved = ikk.resolved;
  if (!ikk.resolved)
    warnings.push_back("IKK left overlapping clusters in component containing vertex " +
                       std::to_string(out.vertices.front()));
  // provenance in original ids
  for (auto& members : out.phantom.provenance)
    for (VertexId& v : members) v = component.original_ids[v];

  const Point c = centroid(out.cluster_centers.positions);
  double radius = 0.0;
  for (std::size_t j = 0; j < out.clusters.size(); ++j)
    radius = std::max(radius, distance(out.cluster_centers.positions[j], c) + out.phantom.radii[j]);
  out.radius = radius * (1.0 + config.radius_margin);
  clock.add("cluster-ikk", t);
  return out;
}

}  // namespace

double bounding_radius(const Layout& layout, double margin) {
  const Point c = centroid(layout.positions);
  double r = 0.0;
  for (const Point& p : layout.positions) r = std::max(r, distance(p, c));
  return r * (1.0 + margin);
}

PhantomGraph phantom_graph_for_component(const Graph& component, const Clustering& clustering,
                                         std::span<const Layout> cluster_layouts, double margin,
                                         double min_radius) {
  const std::size_t m = clustering.clusters.size();
  if (cluster_layouts.size() != m) throw Error("one layout per cluster required");
  const std::vector<int> label = clustering.labels(component.vertex_count());
  if (std::find(label.begin(), label.end(), -1) != label.end())
    throw Error("clustering does not cover every vertex of the component");

  PhantomGraph out;
  for (std::size_t c = 0; c < m; ++c) {
    if (cluster_layouts[c].positions.empty()) throw Error("cluster " + std::to_string(c) + " has an empty layout");
    if (cluster_layouts[c].size() != clustering.clusters[c].size())
      throw Error("cluster " + std::to_string(c) + " layout does not match its vertex count");
    out.radii.push_back(std::max(bounding_radius(cluster_layouts[c], margin), min_radius));
    out.provenance.push_back(clustering.clusters[c]);
  }
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (const Edge& e : component.edges())
    if (label[e.u] != label[e.v]) pairs.emplace_back(label[e.u], label[e.v]);
  out.graph = from_edge_list(pairs, m);
  return out;
}

PhantomGraph chain_components(std::span<const std::pair<int, double>> phantoms) {
  const std::size_t k = phantoms.size();
  std::vector<char> seen(k, 0);
  for (auto [id, radius] : phantoms) {
    if (id < 0 || static_cast<std::size_t>(id) >= k || seen[id])
      throw std::invalid_argument("component ids must be a permutation of 0..k-1");
    if (!(radius > 0.0)) throw std::invalid_argument("component radii must be positive");
    seen[id] = 1;
  }
  std::vector<std::pair<int, double>> order(phantoms.begin(), phantoms.end());
  std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
    return a.second != b.second ? a.second > b.second : a.first < b.first;
  });

  PhantomGraph out;
  out.radii.assign(k, 0.0);
  out.provenance.assign(k, {});
  for (auto [id, radius] : phantoms) {
    out.radii[id] = radius;
    out.provenance[id] = {id};
  }
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (std::size_t i = 1; i < k; ++i) pairs.emplace_back(order[i - 1].first, order[i].first);
  out.graph = from_edge_list(pairs, k);
  return out;
}

double composition_quantum(const Layout& component_centers, std::span<const ComponentResult> components) {
  double bound = 0.0;
  for (std::size_t i = 0; i < components.size() && i < component_centers.size(); ++i) {
    const ComponentResult& comp = components[i];
    const Point cc = centroid(comp.cluster_centers.positions);
    for (std::size_t j = 0; j < comp.clusters.size() && j < comp.cluster_centers.size(); ++j) {
      const Layout& local = comp.clusters[j].local;
      const Point t = cluster_offset(local, comp.cluster_centers.positions[j], cc,
                                     component_centers.positions[i]);
      double extent = 0.0;
      for (const Point& p : local.positions) extent = std::max({extent, std::abs(p.x), std::abs(p.y)});
      bound = std::max(bound, extent + std::max(std::abs(t.x), std::abs(t.y)));
    }
  }
  if (!(bound > 0.0) || !std::isfinite(bound)) bound = 1.0;
  // leaves >= 2 spare mantissa bits for every sum of a coordinate and an offset
  return std::ldexp(1.0, std::ilogb(bound) + 1 - 50);
}

Layout compose(const Layout& component_centers, std::span<const ComponentResult> components,
               std::size_t vertex_count, double quantum) {
  if (component_centers.size() != components.size())
    throw Error("one component center per component required");
  if (quantum <= 0.0) quantum = composition_quantum(component_centers, components);

  Layout out;
  out.canvass = component_centers.canvass;
  out.positions.assign(vertex_count, Point{});
  std::vector<char> placed(vertex_count, 0);
  for (std::size_t i = 0; i < components.size(); ++i) {
    const ComponentResult& comp = components[i];
    if (comp.cluster_centers.size() != comp.clusters.size())
      throw Error("component " + std::to_string(i) + ": one cluster center per cluster required");
    const Point cc = centroid(comp.cluster_centers.positions);
    for (std::size_t j = 0; j < comp.clusters.size(); ++j) {
      const ClusterResult& cluster = comp.clusters[j];
      if (cluster.local.size() != cluster.vertices.size())
        throw Error("cluster layout does not match its vertex list");
      Point t = cluster_offset(cluster.local, comp.cluster_centers.positions[j], cc,
                               component_centers.positions[i]);
      t = Point{snap(t.x, quantum), snap(t.y, quantum)};
      for (std::size_t k = 0; k < cluster.vertices.size(); ++k) {
        const VertexId v = cluster.vertices[k];
        if (v < 0 || static_cast<std::size_t>(v) >= vertex_count || placed[v])
          throw Error("vertex " + std::to_string(v) + " is missing or placed twice");
        placed[v] = 1;
        out.positions[v] = cluster.local.positions[k] + t;
      }
    }
  }
  if (std::find(placed.begin(), placed.end(), 0) != placed.end())
    throw Error("composition left a vertex without a position");
  return out;
}

std::vector<int> HgdaResult::cluster_labels() const {
  std::vector<int> label(final.size(), -1);
  int next = 0;
  for (const auto& comp : components)
    for (const auto& cluster : comp.clusters) {
      for (VertexId v : cluster.vertices) label[v] = next;
      ++next;
    }
  return label;
}

std::vector<int> HgdaResult::component_labels() const {
  std::vector<int> label(final.size(), -1);
  for (std::size_t i = 0; i < components.size(); ++i)
    for (VertexId v : components[i].vertices) label[v] = static_cast<int>(i);
  return label;
}

HgdaResult run_hgda(const Graph& g, const HgdaConfig& config) {
  config.mcl.validate();
  config.ikk.validate();
  config.kk.validate();

  HgdaResult result;
  StageClock clock;
  const std::size_t n = g.vertex_count();
  result.final.canvass = config.kk.L0;
  if (n == 0) return result;

  auto t = Clock::now();
  VertexSets sets = connected_components(g, TraversalMethod::dfs);
  clock.add("components", t);

  const std::size_t k = sets.size();
  result.components.resize(k);
  std::vector<std::vector<std::string>> warnings(k);
  std::vector<StageClock> clocks(k);
  const unsigned workers = std::max(1u, std::min<unsigned>(config.workers, static_cast<unsigned>(k)));
  auto work = [&](unsigned worker) {
    for (std::size_t i = worker; i < k; i += workers)
      result.components[i] = lay_out_component(g, std::move(sets[i]), config, clocks[i], warnings[i]);
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::future<void>> tasks;
    for (unsigned w = 0; w < workers; ++w) tasks.push_back(std::async(std::launch::async, work, w));
    for (auto& task : tasks) task.get();
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (const auto& [stage, ms] : clocks[i].totals) clock.totals[stage] += ms;
    for (auto& w : warnings[i]) result.report.warnings.push_back(std::move(w));
  }

  t = Clock::now();
  std::vector<std::pair<int, double>> phantoms;
  for (std::size_t i = 0; i < k; ++i) phantoms.emplace_back(static_cast<int>(i), result.components[i].radius);
  result.component_graph = chain_components(phantoms);
  for (std::size_t i = 0; i < k; ++i) result.component_graph.provenance[i] = result.components[i].vertices;
  clock.add("chain", t);

  t = Clock::now();
  const IkkResult placed = ikk_layout({result.component_graph.graph, result.component_graph.radii},
                                      config.ikk, config.seed);
  result.component_centers = placed.layout;
  result.component_ikk_resolved = placed.resolved;
  if (!placed.resolved) result.report.warnings.push_back("IKK left overlapping components");
  clock.add("component-ikk", t);

  t = Clock::now();
  const double quantum = composition_quantum(result.component_centers, result.components);
  for (auto& comp : result.components)
    for (auto& cluster : comp.clusters)
      for (Point& p : cluster.local.positions) p = Point{snap(p.x, quantum), snap(p.y, quantum)};
  result.final = compose(result.component_centers, result.components, n, quantum);
  clock.add("compose", t);

  result.report.component_count = k;
  for (const auto& comp : result.components) result.report.cluster_counts.push_back(comp.clusters.size());
  for (const char* stage : {"components", "mcl", "kk", "cluster-ikk", "chain", "component-ikk", "compose"})
    result.report.timings.push_back({stage, clock.totals[stage]});
  return result;
}

}  // namespace hgda
