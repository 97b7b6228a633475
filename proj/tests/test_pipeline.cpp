#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "hgda/components.hpp"
#include "hgda/distance.hpp"
#include "hgda/error.hpp"
#include "hgda/pipeline.hpp"
#include "test_support.hpp"

using namespace hgda;

TEST_SUITE_BEGIN("hybrid-pipeline");

namespace {

std::vector<double> pairwise(const std::vector<Point>& points) {
  std::vector<double> out;
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j) out.push_back(distance(points[i], points[j]));
  return out;
}

std::vector<Point> centered(std::vector<Point> points) {
  const Point c = centroid(points);
  for (Point& p : points) p = p - c;
  return points;
}

// Two triangles joined by a bridge, plus a separate triangle.
Graph bridged_plus_triangle() {
  return test::clique_union({3, 3, 3}, {{2, 3}});
}

// Three 4-cliques joined in a chain by single bridges, plus a triangle.
Graph three_cliques_plus_triangle() {
  return test::clique_union({4, 4, 4, 3}, {{3, 4}, {7, 8}});
}

ClusterResult cluster(std::vector<VertexId> vertices, std::vector<Point> local) {
  ClusterResult c;
  c.vertices = std::move(vertices);
  c.local = Layout{std::move(local), 1.0};
  return c;
}

}  // namespace

TEST_CASE("phantom_graph_for_component") {
  const Graph single = test::complete_graph(3);
  const Clustering one{{{0, 1, 2}}, {0}, true, 1};
  const std::vector<Layout> one_layout{Layout{{{0, 0}, {1, 0}, {0, 1}}}};
  const PhantomGraph p1 = phantom_graph_for_component(single, one, one_layout);
  CHECK(p1.graph.vertex_count() == 1);
  CHECK(p1.graph.edge_count() == 0);
  CHECK(p1.provenance == std::vector<std::vector<VertexId>>{{0, 1, 2}});

  const Graph bridged = test::bridged_triangles();
  const Clustering two{{{0, 1, 2}, {3, 4, 5}}, {0, 3}, true, 1};
  const std::vector<Layout> layouts{Layout{{{0, 0}, {2, 0}, {1, 3}}}, Layout{{{0, 0}, {1, 0}, {0, 1}}}};
  const PhantomGraph p2 = phantom_graph_for_component(bridged, two, layouts, 0.05, 0.0);
  CHECK(p2.graph.vertex_count() == 2);
  CHECK(p2.graph.edge_count() == 1);
  CHECK_FALSE(p2.graph.weighted());
  // centroid (1, 1); farthest vertex (1, 3)
  CHECK(p2.radii[0] == doctest::Approx(2.0 * 1.05));

  const Clustering singleton{{{0}}, {0}, true, 1};
  const std::vector<Layout> dot{Layout{{{5, 5}}}};
  CHECK(phantom_graph_for_component(from_edge_list({}, 1), singleton, dot, 0.05, 0.1).radii[0] == 0.1);

  const std::vector<Layout> empty{Layout{}, Layout{{{0, 0}, {1, 0}, {0, 1}}}};
  CHECK_THROWS_AS(phantom_graph_for_component(bridged, two, empty), Error);
  CHECK_THROWS_AS(phantom_graph_for_component(bridged, two, one_layout), Error);
}

TEST_CASE("chain_components") {
  const std::vector<std::pair<int, double>> lone{{0, 2.0}};
  CHECK(chain_components(lone).graph.edge_count() == 0);

  const std::vector<std::pair<int, double>> three{{0, 5.0}, {1, 1.0}, {2, 3.0}};
  const PhantomGraph chain = chain_components(three);
  const auto edges = chain.graph.edges();
  CHECK(std::vector<Edge>(edges.begin(), edges.end()) == std::vector<Edge>{{0, 2}, {1, 2}});
  CHECK(chain.radii == std::vector<double>{5.0, 1.0, 3.0});

  std::mt19937_64 rng(9);
  for (int k = 1; k <= 30; ++k) {
    std::vector<std::pair<int, double>> phantoms;
    for (int i = 0; i < k; ++i) phantoms.emplace_back(i, 0.5 + rng() % 5);
    const PhantomGraph g = chain_components(phantoms);
    CHECK(g.graph.edge_count() == static_cast<std::size_t>(k - 1));
    CHECK(connected_components(g.graph).size() == 1);
    for (int v = 0; v < k; ++v) CHECK(g.graph.degree(v) <= 2);
  }

  const std::vector<std::pair<int, double>> bad{{0, 1.0}, {0, 2.0}};
  CHECK_THROWS_AS(chain_components(bad), std::invalid_argument);
}

TEST_CASE("compose examples") {
  SUBCASE("single cluster at the origin") {
    ComponentResult comp;
    comp.clusters.push_back(cluster({0, 1}, {{1, 1}, {3, 1}}));
    comp.cluster_centers = Layout{{{0, 0}}};
    const Layout out = compose(Layout{{{0, 0}}}, std::span(&comp, 1), 2, 0.25);
    CHECK(out.positions == std::vector<Point>{{-1, 0}, {1, 0}});
  }
  SUBCASE("two clusters keep the phantom spacing") {
    ComponentResult comp;
    comp.clusters.push_back(cluster({0, 2}, {{0, 0}, {1, 0}}));
    comp.clusters.push_back(cluster({1}, {{9, 9}}));
    comp.cluster_centers = Layout{{{0, 0}, {3, 4}}};
    const Layout out = compose(Layout{{{10, 10}}}, std::span(&comp, 1), 3, 0.25);
    const Point a = 0.5 * (out.positions[0] + out.positions[2]);
    CHECK(distance(a, out.positions[1]) == 5.0);
    CHECK(out.positions[1] == Point{11.5, 12.0});
  }
  SUBCASE("inconsistent provenance") {
    ComponentResult comp;
    comp.clusters.push_back(cluster({0, 0}, {{0, 0}, {1, 0}}));
    comp.cluster_centers = Layout{{{0, 0}}};
    CHECK_THROWS_AS(compose(Layout{{{0, 0}}}, std::span(&comp, 1), 2), Error);
    comp.clusters[0].vertices = {0, 1};
    CHECK_THROWS_AS(compose(Layout{{{0, 0}}}, std::span(&comp, 1), 3), Error);
    CHECK_THROWS_AS(compose(Layout{}, std::span(&comp, 1), 2), Error);
  }
}

TEST_CASE("reduction to plain KK on cliques") {
  for (std::size_t n : {4u, 6u, 10u}) {
    const Graph g = test::complete_graph(n);
    HgdaConfig config;
    config.seed = 11;
    const HgdaResult r = run_hgda(g, config);
    CHECK(r.report.component_count == 1);
    CHECK(r.report.cluster_counts == std::vector<std::size_t>{1});
    const KkResult kk = kk_layout(apsp(g), config.kk, config.seed);
    const auto a = centered(r.final.positions);
    const auto b = centered(kk.layout.positions);
    for (std::size_t v = 0; v < n; ++v) CHECK(distance(a[v], b[v]) <= 1e-9);
  }
}

TEST_CASE("edgeless graphs") {
  for (std::size_t n : {1u, 5u, 10u, 20u}) {
    const HgdaResult r = run_hgda(from_edge_list({}, n));
    CHECK(r.report.component_count == n);
    CHECK(r.report.cluster_counts == std::vector<std::size_t>(n, 1));
    CHECK(r.component_graph.graph.edge_count() == n - 1);
    CHECK(overlap_pairs(r.component_centers, r.component_graph.radii, 0.0).empty());
    CHECK(r.final.size() == n);
  }
}

TEST_CASE("two triangles with a bridge beside a triangle") {
  const HgdaResult r = run_hgda(bridged_plus_triangle());
  CHECK(r.report.component_count == 2);
  CHECK(r.report.cluster_counts == std::vector<std::size_t>{2, 1});
  CHECK(r.components[0].clusters[0].vertices == std::vector<VertexId>{0, 1, 2});
  CHECK(r.components[0].clusters[1].vertices == std::vector<VertexId>{3, 4, 5});
  CHECK(r.report.converged());
}

TEST_CASE("three bridged cliques beside a triangle") {
  const HgdaResult r = run_hgda(three_cliques_plus_triangle());
  CHECK(r.report.component_count == 2);
  CHECK(r.report.cluster_counts == std::vector<std::size_t>{3, 1});
}

TEST_CASE("composition is a rigid translation of every cluster") {
  std::mt19937_64 rng(17);
  std::vector<Graph> graphs{three_cliques_plus_triangle(), bridged_plus_triangle()};
  for (int i = 0; i < 8; ++i) graphs.push_back(test::random_graph(10 + rng() % 30, 0.08, rng));
  for (const Graph& g : graphs) {
    const HgdaResult r = run_hgda(g);
    for (const auto& comp : r.components)
      for (const auto& c : comp.clusters) {
        std::vector<Point> after;
        for (VertexId v : c.vertices) after.push_back(r.final.positions[v]);
        CHECK(pairwise(c.local.positions) == pairwise(after));
      }
  }
}

TEST_CASE("counting and labels") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 15; ++trial) {
    const Graph g = test::random_graph(5 + rng() % 35, 0.06, rng);
    const HgdaResult r = run_hgda(g);
    const VertexSets sets = connected_components(g);
    REQUIRE(r.report.component_count == sets.size());
    for (std::size_t i = 0; i < sets.size(); ++i) {
      CHECK(r.components[i].vertices == sets[i]);
      std::size_t total = 0;
      for (const auto& c : r.components[i].clusters) total += c.vertices.size();
      CHECK(total == sets[i].size());
    }
    const auto labels = r.cluster_labels();
    CHECK(std::find(labels.begin(), labels.end(), -1) == labels.end());
  }
}

TEST_CASE("determinism across runs and worker counts") {
  std::mt19937_64 rng(29);
  const Graph g = test::random_graph(60, 0.04, rng);
  HgdaConfig config;
  config.seed = 3;
  const HgdaResult a = run_hgda(g, config);
  const HgdaResult b = run_hgda(g, config);
  config.workers = 4;
  const HgdaResult c = run_hgda(g, config);
  CHECK(a.final == b.final);
  CHECK(a.final == c.final);
  CHECK(a.component_centers == c.component_centers);
  CHECK(a.report.cluster_counts == c.report.cluster_counts);
}

TEST_CASE("empty graph") {
  const HgdaResult r = run_hgda(from_edge_list({}, 0));
  CHECK(r.final.size() == 0);
  CHECK(r.report.component_count == 0);
}

TEST_SUITE_END();
