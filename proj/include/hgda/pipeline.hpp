#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hgda/graph.hpp"
#include "hgda/ikk.hpp"
#include "hgda/kk.hpp"
#include "hgda/mcl.hpp"

namespace hgda {

/// A cluster or a component abstracted to one sized vertex.
struct PhantomGraph {
  Graph graph;                                // unit-weight phantom edges
  std::vector<double> radii;
  std::vector<std::vector<VertexId>> provenance;  // phantom vertex -> underlying vertices
};

struct HgdaConfig {
  MclParams mcl;
  KkParams kk;
  IkkParams ikk;
  std::uint64_t seed = 1;
  double radius_margin = 0.05;       // added to every bounding radius
  double min_radius = 0.1;           // fraction of kk.L0, floor for single-vertex clusters
  unsigned workers = 1;              // components processed concurrently when > 1
};

struct ClusterResult {
  std::vector<VertexId> vertices;  // original ids, ascending
  VertexId attractor = 0;          // original id
  Layout local;                    // KK layout, indexed like `vertices`
  double radius = 0.0;
  bool kk_converged = true;
};

struct ComponentResult {
  std::vector<VertexId> vertices;  // original ids, ascending
  std::vector<ClusterResult> clusters;
  bool mcl_converged = true;
  PhantomGraph phantom;            // one vertex per cluster
  Layout cluster_centers;          // IKK layout of `phantom`
  bool ikk_resolved = true;
  double radius = 0.0;
};

struct StageTiming {
  std::string stage;
  double milliseconds = 0.0;
};

struct HgdaReport {
  std::size_t component_count = 0;
  std::vector<std::size_t> cluster_counts;
  std::vector<StageTiming> timings;
  std::vector<std::string> warnings;  // non-convergence notices; never fatal

  bool converged() const { return warnings.empty(); }
};

struct HgdaResult {
  Layout final;
  std::vector<ComponentResult> components;
  PhantomGraph component_graph;  // one vertex per component, a simple path
  Layout component_centers;
  bool component_ikk_resolved = true;
  HgdaReport report;

  /// Global cluster index per original vertex (components in order).
  std::vector<int> cluster_labels() const;
  std::vector<int> component_labels() const;
};

/// Radius of the smallest circle centered at the centroid that holds every
/// point, grown by `margin` (relative).
double bounding_radius(const Layout& layout, double margin);

/// One phantom vertex per cluster of a connected component, sized by the
/// bounding radius of its layout (floored at `min_radius`), and one phantom
/// edge per pair of clusters joined by at least one original edge.
PhantomGraph phantom_graph_for_component(const Graph& component, const Clustering& clustering,
                                         std::span<const Layout> cluster_layouts,
                                         double margin = 0.05, double min_radius = 0.1);

/// Links components into a simple path ordered by radius (descending, lower
/// id first on ties). Entries are (component id, radius) with ids 0..k-1.
PhantomGraph chain_components(std::span<const std::pair<int, double>> phantoms);

/// Places every vertex at local - cluster centroid + cluster center -
/// component centroid + component center. Offsets are snapped to a multiple
/// of `quantum` (auto-chosen when 0), so with local coordinates on the same
/// grid every translation is exact. Throws hgda::Error on inconsistent input.
Layout compose(const Layout& component_centers, std::span<const ComponentResult> components,
               std::size_t vertex_count, double quantum = 0.0);

/// Grid spacing compose() uses for the given inputs.
double composition_quantum(const Layout& component_centers, std::span<const ComponentResult> components);

/// The seven-stage hybrid drawing: DFS components, MCL per component, KK per
/// cluster, IKK over cluster phantoms, a component chain, IKK over component
/// phantoms, and composition by rigid translation.
HgdaResult run_hgda(const Graph& g, const HgdaConfig& config = {});

}  // namespace hgda
