#include "hgda/io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <set>
#include <sstream>

#include "hgda/error.hpp"

namespace hgda {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

template <class T>
std::optional<T> parse_number(std::string_view token) {
  T value{};
  const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || end != token.data() + token.size()) return std::nullopt;
  return value;
}

VertexId parse_id(std::string_view token, std::size_t line) {
  const auto id = parse_number<long long>(token);
  if (!id || *id < 0 || *id > std::numeric_limits<VertexId>::max())
    throw ParseError(line, "expected a non-negative vertex id, got '" + std::string(token) + "'");
  return static_cast<VertexId>(*id);
}

double parse_positive(std::string_view token, std::size_t line, const char* what) {
  const auto value = parse_number<double>(token);
  if (!value || !std::isfinite(*value))
    throw ParseError(line, std::string("expected a number for ") + what + ", got '" + std::string(token) + "'");
  if (!(*value > 0.0)) throw ParseError(line, std::string(what) + " must be positive");
  return *value;
}

}  // namespace

std::string format_double(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

EdgeListDocument parse_edge_document(std::string_view text) {
  std::optional<std::size_t> declared;
  std::vector<std::pair<VertexId, VertexId>> pairs;
  std::vector<double> weights;
  bool weighted = false;
  std::map<VertexId, double> radii;
  std::set<std::pair<VertexId, VertexId>> seen;
  EdgeListDocument doc;
  long long max_id = -1;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    const auto tokens = split_ws(line);
    if (tokens.empty() || tokens.front().front() == '#') {
      if (end == text.size()) break;
      continue;
    }

    if (tokens.front() == "vertices") {
      if (tokens.size() != 2) throw ParseError(line_no, "expected 'vertices N'");
      if (declared) throw ParseError(line_no, "vertex count declared twice");
      if (!pairs.empty() || !radii.empty())
        throw ParseError(line_no, "vertex count must precede edge rows");
      declared = static_cast<std::size_t>(parse_id(tokens[1], line_no));
    } else if (tokens.front() == "radius") {
      if (tokens.size() != 3) throw ParseError(line_no, "expected 'radius ID R'");
      const VertexId v = parse_id(tokens[1], line_no);
      if (declared && static_cast<std::size_t>(v) >= *declared)
        throw ParseError(line_no, "vertex id " + std::to_string(v) + " exceeds declared count");
      radii[v] = parse_positive(tokens[2], line_no, "radius");
      max_id = std::max<long long>(max_id, v);
    } else {
      if (tokens.size() != 2 && tokens.size() != 3)
        throw ParseError(line_no, "expected 'u v' or 'u v w'");
      const VertexId u = parse_id(tokens[0], line_no);
      const VertexId v = parse_id(tokens[1], line_no);
      if (declared && (static_cast<std::size_t>(u) >= *declared || static_cast<std::size_t>(v) >= *declared))
        throw ParseError(line_no, "vertex id exceeds declared count");
      double w = 1.0;
      if (tokens.size() == 3) {
        w = parse_positive(tokens[2], line_no, "edge weight");
        weighted = true;
      }
      max_id = std::max<long long>({max_id, u, v});
      if (u == v) {
        doc.warnings.push_back("line " + std::to_string(line_no) + ": self-loop dropped");
        continue;
      }
      if (!seen.insert({std::min(u, v), std::max(u, v)}).second)
        doc.warnings.push_back("line " + std::to_string(line_no) + ": duplicate edge collapsed");
      pairs.emplace_back(u, v);
      weights.push_back(w);
    }
    if (end == text.size()) break;
  }

  const std::size_t n = declared ? *declared : static_cast<std::size_t>(max_id + 1);
  doc.graph = weighted ? from_edge_list(pairs, weights, n) : from_edge_list(pairs, n);
  if (!radii.empty()) {
    std::vector<double> r(n, 0.0);
    for (auto [v, value] : radii) r[v] = value;
    for (std::size_t v = 0; v < n; ++v)
      if (!(r[v] > 0.0)) throw Error("radius missing for vertex " + std::to_string(v));
    doc.radii = std::move(r);
  }
  return doc;
}

Graph parse_edge_list(std::string_view text) { return parse_edge_document(text).graph; }

std::string serialize_edge_list(const Graph& g, const std::vector<double>* radii) {
  std::ostringstream out;
  out << "vertices " << g.vertex_count() << '\n';
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edges()[i];
    out << e.u << ' ' << e.v;
    if (g.weighted()) out << ' ' << format_double(g.weight(i));
    out << '\n';
  }
  if (radii)
    for (std::size_t v = 0; v < radii->size(); ++v) out << "radius " << v << ' ' << format_double((*radii)[v]) << '\n';
  return out.str();
}

std::string layout_to_tsv(const Layout& layout) {
  std::string out;
  for (std::size_t v = 0; v < layout.size(); ++v) {
    out += std::to_string(v);
    out += '\t';
    out += format_double(layout.positions[v].x);
    out += '\t';
    out += format_double(layout.positions[v].y);
    out += '\n';
  }
  return out;
}

Layout layout_from_tsv(std::string_view text) {
  std::map<VertexId, Point> rows;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    const auto tokens = split_ws(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (tokens.empty() || tokens.front().front() == '#') continue;
    if (tokens.size() != 3) throw ParseError(line_no, "expected 'id x y'");
    const VertexId v = parse_id(tokens[0], line_no);
    const auto x = parse_number<double>(tokens[1]);
    const auto y = parse_number<double>(tokens[2]);
    if (!x || !y || !std::isfinite(*x) || !std::isfinite(*y))
      throw ParseError(line_no, "coordinates must be finite numbers");
    if (!rows.emplace(v, Point{*x, *y}).second) throw ParseError(line_no, "duplicate vertex row");
  }
  Layout layout;
  for (auto [v, p] : rows) {
    if (static_cast<std::size_t>(v) != layout.size()) throw Error("layout rows must cover ids 0..n-1");
    layout.positions.push_back(p);
  }
  return layout;
}

nlohmann::json layout_to_json(const Layout& layout) {
  nlohmann::json positions = nlohmann::json::array();
  for (const Point& p : layout.positions) positions.push_back({p.x, p.y});
  return {{"canvass", layout.canvass}, {"positions", positions}};
}

Layout layout_from_json(const nlohmann::json& doc) {
  Layout layout;
  layout.canvass = doc.at("canvass").get<double>();
  for (const auto& p : doc.at("positions")) layout.positions.push_back({p.at(0).get<double>(), p.at(1).get<double>()});
  return layout;
}

nlohmann::json hgda_to_json(const HgdaResult& result, bool include_timings) {
  using nlohmann::json;
  json doc = layout_to_json(result.final);
  doc["vertex_count"] = result.final.size();
  doc["component_of"] = result.component_labels();
  doc["cluster_of"] = result.cluster_labels();

  json components = json::array();
  for (std::size_t i = 0; i < result.components.size(); ++i) {
    const ComponentResult& comp = result.components[i];
    json clusters = json::array();
    for (std::size_t j = 0; j < comp.clusters.size(); ++j) {
      const ClusterResult& c = comp.clusters[j];
      const Point center = comp.cluster_centers.positions[j];
      clusters.push_back({{"vertices", c.vertices},
                          {"attractor", c.attractor},
                          {"radius", c.radius},
                          {"center", {center.x, center.y}},
                          {"kk_converged", c.kk_converged}});
    }
    const Point center = result.component_centers.positions[i];
    components.push_back({{"vertices", comp.vertices},
                          {"radius", comp.radius},
                          {"center", {center.x, center.y}},
                          {"mcl_converged", comp.mcl_converged},
                          {"ikk_resolved", comp.ikk_resolved},
                          {"clusters", clusters}});
  }
  doc["components"] = components;

  json report = {{"component_count", result.report.component_count},
                 {"cluster_counts", result.report.cluster_counts},
                 {"component_ikk_resolved", result.component_ikk_resolved},
                 {"converged", result.report.converged()},
                 {"warnings", result.report.warnings}};
  if (include_timings) {
    json timings = json::object();
    for (const auto& t : result.report.timings) timings[t.stage] = t.milliseconds;
    report["timings_ms"] = timings;
  }
  doc["report"] = report;
  return doc;
}

}  // namespace hgda
