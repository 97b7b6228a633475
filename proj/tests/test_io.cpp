#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cctype>
#include <map>
#include <random>
#include <string>

#include "hgda/error.hpp"
#include "hgda/io.hpp"
#include "hgda/metrics.hpp"
#include "hgda/pipeline.hpp"
#include "hgda/svg.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace hgda;
using test::coordinates_inside;
using test::parse_xml;
using test::XmlElement;

TEST_SUITE_BEGIN("cli-io");

namespace {

std::size_t count(const std::vector<XmlElement>& els, const std::string& name) {
  return static_cast<std::size_t>(std::count_if(els.begin(), els.end(), [&](const auto& e) { return e.name == name; }));
}

}  // namespace

TEST_CASE("parse_edge_list examples") {
  const Graph path = parse_edge_list("0 1\n1 2\n");
  CHECK(path == test::path_graph(3));

  const Graph weighted = parse_edge_list("# comment\n0 1 2.5\n");
  REQUIRE(weighted.edge_count() == 1);
  CHECK(weighted.weighted());
  CHECK(weighted.weight(0) == 2.5);

  try {
    (void)parse_edge_list("0 x\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
  }
}

TEST_CASE("edge-list document rules") {
  const EdgeListDocument doc = parse_edge_document("vertices 5\n0 1\n1 0\n2 2\n\n  # indented comment\n3 4\n");
  CHECK(doc.graph.vertex_count() == 5);
  CHECK(doc.graph.edge_count() == 2);
  CHECK(doc.warnings.size() == 2);
  CHECK_FALSE(doc.radii.has_value());

  const EdgeListDocument sized = parse_edge_document("0 1\nradius 0 1.5\nradius 1 0.5\n");
  REQUIRE(sized.radii.has_value());
  CHECK(*sized.radii == std::vector<double>{1.5, 0.5});

  auto error_line = [](const std::string& text) -> std::size_t {
    try {
      (void)parse_edge_document(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(error_line("0 1\n1 2 -3\n") == 2);
  CHECK(error_line("0 1\n1 2 0\n") == 2);
  CHECK(error_line("0 1 2 3\n") == 1);
  CHECK(error_line("0 1\nvertices 4\n") == 2);
  CHECK(error_line("vertices 2\n0 5\n") == 2);
  CHECK(error_line("-1 2\n") == 1);
  CHECK(error_line("\n\nradius 0\n") == 3);
  CHECK_THROWS_AS(parse_edge_document("0 1\n1 2\nradius 0 1\n"), Error);
  CHECK(parse_edge_list("").vertex_count() == 0);
}

TEST_CASE("edge-list round trip") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    Graph g = test::random_graph(rng() % 40, 0.1, rng);
    if (trial % 3 == 0) {
      std::uniform_real_distribution<double> w(0.01, 100.0);
      g = reweighted(g, [&](const Edge&, double) { return w(rng); });
    }
    CHECK(parse_edge_list(serialize_edge_list(g)) == g);
  }
  const std::vector<double> radii{0.1, 1.0 / 3, 7.0};
  const EdgeListDocument doc = parse_edge_document(serialize_edge_list(test::path_graph(3), &radii));
  CHECK(*doc.radii == radii);
}

TEST_CASE("layout documents round trip") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1e6, 1e6);
  Layout layout;
  layout.canvass = 0.1;
  for (int i = 0; i < 50; ++i) layout.positions.push_back({u(rng), u(rng) * 1e-12});
  CHECK(layout_from_tsv(layout_to_tsv(layout)).positions == layout.positions);
  CHECK(layout_from_json(nlohmann::json::parse(layout_to_json(layout).dump())) == layout);
  CHECK_THROWS_AS(layout_from_tsv("0 1 2\n2 3 4\n"), Error);
  CHECK_THROWS_AS(layout_from_tsv("0 1 nan\n"), ParseError);
}

TEST_CASE("pipeline JSON") {
  const HgdaResult r = run_hgda(test::clique_union({3, 3, 3}, {{2, 3}}));
  const nlohmann::json doc = hgda_to_json(r);
  CHECK(doc.at("report").at("component_count") == 2);
  CHECK(doc.at("report").at("cluster_counts") == nlohmann::json::array({2, 1}));
  CHECK_FALSE(doc.at("report").contains("timings_ms"));
  CHECK(hgda_to_json(r, true).at("report").contains("timings_ms"));
  CHECK(layout_from_json(nlohmann::json::parse(doc.dump())) == r.final);
  CHECK(doc.dump() == hgda_to_json(run_hgda(test::clique_union({3, 3, 3}, {{2, 3}}))).dump());
}

TEST_CASE("render_svg examples") {
  const auto one = parse_xml(render_svg(from_edge_list({}, 1), Layout{{{3, 3}}}));
  CHECK(count(one, "circle") == 1);
  CHECK(count(one, "line") == 0);
  CHECK(coordinates_inside(one, 800, 800));

  const Layout tri{{{0, 0}, {1, 0}, {0.5, 0.8}}};
  const auto three = parse_xml(render_svg(test::complete_graph(3), tri));
  CHECK(count(three, "circle") == 3);
  CHECK(count(three, "line") == 3);
  CHECK(coordinates_inside(three, 800, 800));

  SvgStyle style;
  style.cluster_of = {0, 0, 1};
  std::vector<std::string> fills;
  for (const auto& e : parse_xml(render_svg(test::complete_graph(3), tri, style)))
    if (e.name == "circle") fills.push_back(e.attributes.at("fill"));
  CHECK(fills == std::vector<std::string>{cluster_palette()[0], cluster_palette()[0], cluster_palette()[1]});

  CHECK(render_svg(test::complete_graph(3), tri, style) == render_svg(test::complete_graph(3), tri, style));
  CHECK_THROWS_AS(render_svg(test::complete_graph(3), Layout{{{0, 0}}}), std::invalid_argument);
}

TEST_CASE("every SVG is well-formed and inside the viewBox") {
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = test::random_graph(1 + rng() % 30, 0.1, rng);
    const HgdaResult r = run_hgda(g);
    SvgStyle style;
    style.width = 300 + rng() % 900;
    style.height = 300 + rng() % 900;
    style.cluster_of = r.cluster_labels();
    for (std::size_t i = 0; i < r.components.size(); ++i)
      style.outlines.push_back({r.component_centers.positions[i], r.components[i].radius, "#d62728"});
    const auto els = parse_xml(render_svg(g, r.final, style));
    CHECK(count(els, "line") == g.edge_count());
    CHECK(coordinates_inside(els, style.width, style.height));
  }
  // a degenerate layout: every vertex on one point
  const auto same = parse_xml(render_svg(test::path_graph(3), Layout{{{1, 1}, {1, 1}, {1, 1}}}));
  CHECK(coordinates_inside(same, 800, 800));
}

TEST_CASE("XML checker rejects malformed documents") {
  CHECK_THROWS(parse_xml("<a><b></a></b>"));
  CHECK_THROWS(parse_xml("<a x=\"1\" x=\"2\"/>"));
  CHECK_THROWS(parse_xml("<a/><b/>"));
  CHECK_THROWS(parse_xml("<a>"));
  CHECK_NOTHROW(parse_xml("<?xml version=\"1.0\"?>\n<a><b c=\"d\"/></a>\n"));
}

TEST_CASE("count_crossings examples") {
  const Layout square{{{0, 0}, {1, 0}, {1, 1}, {0, 1}}};
  CHECK(count_crossings(test::cycle_graph(4), square) == 0);

  // cycle visiting the corners in order 0, 2, 1, 3
  const std::vector<std::pair<int, int>> bowtie{{0, 2}, {2, 1}, {1, 3}, {3, 0}};
  CHECK(count_crossings(from_edge_list(bowtie, 4), square) == 1);

  CHECK(count_crossings(test::complete_graph(4), square) == 1);

  // overlapping collinear edges
  const std::vector<std::pair<int, int>> stacked{{0, 1}, {2, 3}};
  const CrossingStats s = crossing_stats(from_edge_list(stacked, 4), Layout{{{0, 0}, {2, 0}, {1, 0}, {3, 0}}});
  CHECK(s.crossings == 1);
  CHECK(s.collinear_overlaps == 1);
  // collinear but disjoint, and touching at a point
  CHECK(count_crossings(from_edge_list(stacked, 4), Layout{{{0, 0}, {1, 0}, {2, 0}, {3, 0}}}) == 0);
  const std::vector<std::pair<int, int>> tee{{0, 1}, {2, 3}};
  CHECK(count_crossings(from_edge_list(tee, 4), Layout{{{0, 0}, {2, 0}, {1, 0}, {1, 1}}}) == 0);
}

TEST_SUITE_END();
