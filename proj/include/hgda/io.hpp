#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hgda/graph.hpp"
#include "hgda/layout.hpp"
#include "hgda/pipeline.hpp"

namespace hgda {

/// Plain-text edge list:
///
///   # comment
///   vertices 5        optional, before any edge row; otherwise n = max id + 1
///   0 1               unweighted edge
///   1 2 2.5           weighted edge (any weighted row makes the graph weighted)
///   radius 3 0.75     optional vertex radius, for sized layouts
struct EdgeListDocument {
  Graph graph;
  std::optional<std::vector<double>> radii;
  std::vector<std::string> warnings;
};

/// Throws ParseError (with 1-based line number) on malformed input.
EdgeListDocument parse_edge_document(std::string_view text);
Graph parse_edge_list(std::string_view text);

std::string serialize_edge_list(const Graph& g, const std::vector<double>* radii = nullptr);

/// "id<TAB>x<TAB>y" rows, full round-trip precision.
std::string layout_to_tsv(const Layout& layout);
Layout layout_from_tsv(std::string_view text);

nlohmann::json layout_to_json(const Layout& layout);
Layout layout_from_json(const nlohmann::json& doc);

/// Full pipeline result. Timings are wall-clock and only emitted on request,
/// so the default document is reproducible byte for byte.
nlohmann::json hgda_to_json(const HgdaResult& result, bool include_timings = false);

std::string format_double(double value);

}  // namespace hgda
