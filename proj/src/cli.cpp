#include "hgda/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "hgda/components.hpp"
#include "hgda/degree.hpp"
#include "hgda/distance.hpp"
#include "hgda/error.hpp"
#include "hgda/ikk.hpp"
#include "hgda/io.hpp"
#include "hgda/kk.hpp"
#include "hgda/mcl.hpp"
#include "hgda/metrics.hpp"
#include "hgda/parallel_cc.hpp"
#include "hgda/pipeline.hpp"
#include "hgda/svg.hpp"

namespace hgda {

namespace {

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kUnconverged = 2;

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(in), {}};
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error("cannot write '" + path + "'");
  file << text;
}

std::string join(const std::vector<VertexId>& ids) {
  std::string s;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(ids[i]);
  }
  return s;
}

struct Options {
  std::string input;
  std::string output;
  std::string format = "tsv";
  std::string algorithm = "hgda";
  std::string method = "dfs";
  std::size_t parallel = 0;
  std::string layout_path;
  bool strict = false;
  bool timings = false;
  unsigned workers = 1;
  std::size_t gen_n = 100;
  std::size_t gen_m = 2;
  double default_radius = 0.5;
  HgdaConfig config;
};

std::string render_layout(const Graph& g, const Layout& layout, const std::string& format,
                          nlohmann::json extra = {}) {
  if (format == "svg") return render_svg(g, layout);
  if (format == "json") {
    nlohmann::json doc = layout_to_json(layout);
    if (!extra.is_null()) doc.update(extra);
    return doc.dump(2) + "\n";
  }
  return layout_to_tsv(layout);
}

int run_layout(const Options& opt, std::ostream& out, std::ostream& err) {
  const EdgeListDocument doc = parse_edge_document(read_input(opt.input));
  for (const auto& w : doc.warnings) err << "warning: " << w << '\n';
  const Graph& g = doc.graph;
  bool converged = true;
  std::string text;

  if (opt.algorithm == "kk") {
    KkResult kk = kk_layout(apsp(g), opt.config.kk, opt.config.seed);
    converged = kk.converged;
    text = render_layout(g, kk.layout, opt.format,
                         {{"converged", kk.converged}, {"max_gradient", kk.max_gradient}});
  } else if (opt.algorithm == "ikk") {
    std::vector<double> radii = doc.radii.value_or(std::vector<double>(g.vertex_count(), opt.default_radius));
    IkkResult ikk = ikk_layout({g, radii}, opt.config.ikk, opt.config.seed);
    converged = ikk.resolved && ikk.kk_converged;
    if (opt.format == "svg") {
      SvgStyle style;
      for (std::size_t v = 0; v < radii.size(); ++v)
        style.outlines.push_back({ikk.layout.positions[v], radii[v], "#1f77b4"});
      text = render_svg(g, ikk.layout, style);
    } else {
      text = render_layout(g, ikk.layout, opt.format,
                           {{"resolved", ikk.resolved}, {"rounds", ikk.rounds}, {"radii", radii}});
    }
  } else {
    HgdaConfig config = opt.config;
    config.workers = opt.workers;
    const HgdaResult result = run_hgda(g, config);
    converged = result.report.converged();
    for (const auto& w : result.report.warnings) err << "warning: " << w << '\n';
    if (opt.format == "json") {
      text = hgda_to_json(result, opt.timings).dump(2) + "\n";
    } else if (opt.format == "svg") {
      SvgStyle style;
      style.cluster_of = result.cluster_labels();
      for (std::size_t i = 0; i < result.components.size(); ++i) {
        const ComponentResult& comp = result.components[i];
        const Point center = result.component_centers.positions[i];
        const Point cc = centroid(comp.cluster_centers.positions);
        for (std::size_t j = 0; j < comp.clusters.size(); ++j)
          style.outlines.push_back({comp.cluster_centers.positions[j] - cc + center, comp.clusters[j].radius, "#1f77b4"});
        style.outlines.push_back({center, comp.radius, "#d62728"});
      }
      text = render_svg(g, result.final, style);
    } else {
      text = layout_to_tsv(result.final);
    }
  }
  write_output(opt.output, text, out);
  if (!converged && opt.strict) {
    err << "error: layout did not converge\n";
    return kUnconverged;
  }
  return kOk;
}

int run_components(const Options& opt, std::ostream& out) {
  const Graph g = parse_edge_list(read_input(opt.input));
  std::string text;
  std::string method = opt.method;
  if (opt.parallel > 0 && method == "dfs") method = "parallel";
  if (method == "parallel") {
    const ParallelComponents pc = parallel_components(g, std::max<std::size_t>(opt.parallel, 1));
    for (const auto& c : pc.components) text += join(c) + '\n';
    for (std::size_t i = 0; i < pc.merges.size(); ++i)
      text += "# merge " + std::to_string(i) + ": edges=" + std::to_string(pc.merges[i].edges_examined) +
              " finds=" + std::to_string(pc.merges[i].finds) + " unions=" + std::to_string(pc.merges[i].unions) + '\n';
  } else {
    const auto method_id = method == "bfs" ? TraversalMethod::bfs : TraversalMethod::dfs;
    for (const auto& c : connected_components(g, method_id)) text += join(c) + '\n';
  }
  write_output(opt.output, text, out);
  return kOk;
}

int run_cluster(const Options& opt, std::ostream& out, std::ostream& err) {
  const Graph g = parse_edge_list(read_input(opt.input));
  const Clustering c = mcl_cluster(g, opt.config.mcl);
  std::string text;
  for (const auto& cluster : c.clusters) text += join(cluster) + '\n';
  write_output(opt.output, text, out);
  if (!c.converged) {
    err << "warning: MCL did not converge after " << c.iterations << " iterations\n";
    if (opt.strict) return kUnconverged;
  }
  return kOk;
}

int run_stats(const Options& opt, std::ostream& out) {
  const Graph g = parse_edge_list(read_input(opt.input));
  std::ostringstream s;
  s << "vertices " << g.vertex_count() << '\n';
  s << "edges " << g.edge_count() << '\n';
  s << "components " << connected_components(g).size() << '\n';
  const DegreeStats stats = degree_stats(g);
  for (auto [degree, count] : stats.histogram) s << "degree " << degree << ' ' << count << '\n';
  if (stats.fit)
    s << "power_law alpha=" << format_double(stats.fit->alpha) << " beta=" << format_double(stats.fit->beta) << '\n';
  else
    s << "power_law undefined\n";
  if (!opt.layout_path.empty()) {
    const Layout layout = layout_from_tsv(read_input(opt.layout_path));
    const CrossingStats cs = crossing_stats(g, layout);
    s << "crossings " << cs.crossings << '\n';
    if (cs.collinear_overlaps) s << "collinear_overlaps " << cs.collinear_overlaps << '\n';
  }
  write_output(opt.output, s.str(), out);
  return kOk;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Hybrid layout of large, clustered, disconnected graphs", "hgda"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "key=value file; flags given on the command line take precedence");

  auto& kk = opt.config.kk;
  auto& mcl = opt.config.mcl;
  auto& ikk = opt.config.ikk;
  app.add_option("--seed", opt.config.seed, "random seed")->envname("HGDA_SEED");
  app.add_option("--K", kk.K, "spring constant")->check(CLI::PositiveNumber);
  app.add_option("--L0", kk.L0, "canvass side")->check(CLI::PositiveNumber);
  app.add_option("--epsilon", kk.epsilon, "KK gradient threshold")->check(CLI::PositiveNumber);
  app.add_option("--max-inner", kk.max_inner, "Newton steps per selected vertex");
  app.add_option("--max-outer", kk.max_outer, "vertex selections (0 = 10n)");
  app.add_option("--inflation", mcl.inflation, "MCL inflation power");
  app.add_option("--expansion", mcl.expansion, "MCL expansion power");
  app.add_option("--loop-weight", mcl.loop_weight, "MCL self-loop weight");
  app.add_option("--prune", mcl.prune_threshold, "MCL pruning threshold");
  app.add_option("--mcl-tolerance", mcl.tolerance, "MCL convergence tolerance");
  app.add_option("--mcl-max-iter", mcl.max_iterations, "MCL iteration cap");
  app.add_option("--growth", ikk.growth, "IKK weight growth factor");
  app.add_option("--max-rounds", ikk.max_rounds, "IKK round cap");
  app.add_option("--clearance", ikk.clearance, "IKK gap, fraction of the smaller radius");
  app.add_flag("--strict", opt.strict, "exit 2 when a stage does not converge");

  auto add_io = [&](CLI::App* sub) {
    sub->add_option("input", opt.input, "edge-list file ('-' for stdin)")->required();
    sub->add_option("-o,--output", opt.output, "output file (default stdout)");
  };

  CLI::App* layout = app.add_subcommand("layout", "compute a drawing");
  add_io(layout);
  layout->add_option("--algorithm", opt.algorithm)->check(CLI::IsMember({"kk", "ikk", "hgda"}));
  layout->add_option("--format", opt.format)->check(CLI::IsMember({"tsv", "json", "svg"}));
  layout->add_option("--radius", opt.default_radius, "ikk radius for vertices without one")
      ->check(CLI::PositiveNumber);
  layout->add_option("--workers", opt.workers, "components laid out concurrently");
  layout->add_flag("--timings", opt.timings, "include stage timings in JSON output");

  CLI::App* components = app.add_subcommand("components", "list connected components");
  add_io(components);
  components->add_option("--method", opt.method)->check(CLI::IsMember({"dfs", "bfs", "parallel"}));
  components->add_option("--parallel", opt.parallel, "partitions for the forest-merge method")
      ->check(CLI::PositiveNumber);

  CLI::App* cluster = app.add_subcommand("cluster", "Markov clustering of the whole graph");
  add_io(cluster);

  CLI::App* stats = app.add_subcommand("stats", "degree statistics and crossing count");
  add_io(stats);
  stats->add_option("--layout", opt.layout_path, "TSV layout for the crossing count");

  CLI::App* generate = app.add_subcommand("generate", "scale-free test graph");
  generate->add_option("--n", opt.gen_n, "vertex count");
  generate->add_option("--m", opt.gen_m, "edges per new vertex");
  generate->add_option("-o,--output", opt.output, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    err << app.help();
    return kInputError;
  }

  try {
    if (*layout) return run_layout(opt, out, err);
    if (*components) return run_components(opt, out);
    if (*cluster) return run_cluster(opt, out, err);
    if (*stats) return run_stats(opt, out);
    if (*generate) {
      write_output(opt.output, serialize_edge_list(generate_scale_free(opt.gen_n, opt.gen_m, opt.config.seed)), out);
      return kOk;
    }
  } catch (const DisconnectedGraphError& e) {
    err << "error: " << e.what() << " (use --algorithm hgda for disconnected input)\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace hgda
