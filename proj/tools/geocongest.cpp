// Command-line front end: point generation, triangulation, graph ensembles,
// matching augmentation, congestion reports and parameter sweeps.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "geocongest/delaunay.hpp"
#include "geocongest/density.hpp"
#include "geocongest/ensembles.hpp"
#include "geocongest/error.hpp"
#include "geocongest/io.hpp"
#include "geocongest/metrics.hpp"
#include "geocongest/pointgen.hpp"
#include "geocongest/routing.hpp"

namespace gc = geocongest;

namespace {

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw gc::Error(gc::ErrorCode::IoError, "cannot write " + path);
  return out;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw gc::Error(gc::ErrorCode::IoError, "cannot open " + path);
  return in;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Random graph ensembles and geodesic-routing congestion"};
  app.require_subcommand(1);

  // gen-points
  std::string density = "euclidean";
  std::uint64_t n_points = 1000;
  std::uint64_t seed = 1;
  std::string out_path;
  auto* gen_points = app.add_subcommand("gen-points", "Sample a Poisson point set");
  gen_points->add_option("--density", density, "name[:param] or custom:\"<postfix>\"")
      ->capture_default_str();
  gen_points->add_option("--n", n_points, "Expected number of points")->capture_default_str();
  gen_points->add_option("--seed", seed)->capture_default_str();
  gen_points->add_option("--out", out_path, "Output CSV (x,y)")->required();

  // triangulate
  std::string in_path;
  auto* tri = app.add_subcommand("triangulate", "Delaunay triangulation of a point CSV");
  tri->add_option("--in", in_path, "Input CSV (x,y)")->required();
  tri->add_option("--out", out_path, "Output edge CSV (u,v)")->required();

  // graph
  std::string family;
  std::size_t n = 1000, k = 6, depth = 3;
  std::optional<double> p, radius;
  auto* graph = app.add_subcommand("graph", "Generate a random graph");
  graph->add_option("--family", family)
      ->required()
      ->check(CLI::IsMember({"er", "rgg", "regular", "bethe", "complete"}));
  graph->add_option("--n", n)->capture_default_str();
  graph->add_option("--k", k, "Degree for regular and bethe")->capture_default_str();
  graph->add_option("--depth", depth, "Depth for bethe")->capture_default_str();
  graph->add_option("--p", p, "Edge probability for er (default 2 ln n / n)");
  graph->add_option("--radius", radius, "Radius for rgg (default sqrt(2 ln n / n))");
  graph->add_option("--seed", seed)->capture_default_str();
  graph->add_option("--out", out_path)->required();

  // augment
  std::size_t matchings = 1;
  auto* augment = app.add_subcommand("augment", "Add random maximal matchings");
  augment->add_option("--in", in_path)->required();
  augment->add_option("--matchings", matchings)->capture_default_str();
  augment->add_option("--seed", seed)->capture_default_str();
  augment->add_option("--out", out_path)->required();

  // flow
  std::string per_vertex;
  bool largest = false;
  bool arrays = false;
  auto* flow = app.add_subcommand("flow", "Geodesic-routing congestion report");
  flow->add_option("--in", in_path)->required();
  flow->add_option("--out", out_path, "Report JSON")->required();
  flow->add_option("--per-vertex", per_vertex, "Per-vertex CSV (v,T)");
  flow->add_flag("--largest-component", largest, "Route within the largest component");
  flow->add_flag("--arrays", arrays, "Include per-vertex and per-edge arrays in the JSON");

  // degrees
  auto* degrees = app.add_subcommand("degrees", "Degree histogram of an edge CSV");
  degrees->add_option("--in", in_path)->required();
  degrees->add_option("--out", out_path, "Output CSV (degree,count); stdout if omitted");

  // sweep
  std::string config_path;
  auto* sweep = app.add_subcommand("sweep", "Run a congestion sweep from a JSON config");
  sweep->add_option("--config", config_path)->required();
  sweep->add_option("--out", out_path)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen_points) {
      const gc::DensityModel model = gc::parse_density_spec(density);
      const gc::PointSet set = gc::sample_points(model, n_points, seed);
      auto out = open_out(out_path);
      gc::io::write_points_csv(out, set.points);
      std::cerr << "wrote " << set.size() << " points\n";
    } else if (*tri) {
      auto in = open_in(in_path);
      const gc::Triangulation t = gc::triangulate(gc::io::read_points_csv(in));
      auto out = open_out(out_path);
      gc::io::write_edges_csv(out, t.graph);
      std::cerr << "vertices " << t.graph.order() << ", edges " << t.graph.size()
                << ", triangles " << t.triangles.size();
      if (t.degenerate) std::cerr << " (collinear input)";
      if (t.duplicates > 0) std::cerr << ", " << t.duplicates << " duplicate points";
      std::cerr << '\n';
    } else if (*graph) {
      gc::Graph g;
      if (family == "er") g = gc::gen_er(n, p, seed);
      else if (family == "rgg") g = gc::gen_rgg(n, radius, seed);
      else if (family == "regular") g = gc::gen_random_regular(n, k, seed);
      else if (family == "bethe") g = gc::gen_bethe(k, depth);
      else g = gc::gen_complete(n);
      auto out = open_out(out_path);
      gc::io::write_edges_csv(out, g);
      std::cerr << "vertices " << g.order() << ", edges " << g.size() << '\n';
    } else if (*augment) {
      auto in = open_in(in_path);
      gc::Graph g = gc::io::read_edges_csv(in);
      const std::size_t before = g.size();
      for (std::size_t i = 0; i < matchings; ++i) g = gc::add_random_matching(g, seed, i + 1);
      auto out = open_out(out_path);
      gc::io::write_edges_csv(out, g);
      std::cerr << "added " << g.size() - before << " edges\n";
    } else if (*flow) {
      auto in = open_in(in_path);
      const gc::Graph g = gc::io::read_edges_csv(in);
      const gc::CongestionReport report = gc::congestion(g, {largest});
      auto out = open_out(out_path);
      out << gc::io::report_json(report, arrays) << '\n';
      if (!per_vertex.empty()) {
        auto pv = open_out(per_vertex);
        gc::io::write_vertex_flow_csv(pv, report);
      }
      const double n2 = static_cast<double>(report.n) * static_cast<double>(report.n);
      const auto per_n2 = [&](std::size_t bytes) { return n2 > 0 ? bytes / n2 : 0.0; };
      std::cout << "n " << report.n << ", m " << report.m << ", diameter " << report.diameter
                << "\nmax vertex flow " << report.max_vertex_flow << ", max edge flow "
                << report.max_edge_flow << "\nmemory: matrix " << report.memory.matrix_bytes
                << " B (" << per_n2(report.memory.matrix_bytes) << " n^2), redistribution "
                << report.memory.redistribution_bytes << " B ("
                << per_n2(report.memory.redistribution_bytes) << " n^2), flow "
                << report.memory.flow_bytes << " B (" << per_n2(report.memory.flow_bytes)
                << " n^2)\n";
    } else if (*degrees) {
      auto in = open_in(in_path);
      const gc::DegreeHistogram h = gc::degree_histogram(gc::io::read_edges_csv(in));
      std::ofstream file;
      std::ostream* out = &std::cout;
      if (!out_path.empty()) {
        file = open_out(out_path);
        out = &file;
      }
      *out << "degree,count\n";
      for (const auto& [d, c] : h.counts) *out << d << ',' << c << '\n';
      std::cerr << "mean degree " << h.mean << '\n';
    } else if (*sweep) {
      const gc::SweepConfig cfg = gc::io::parse_sweep_config(gc::io::read_file(config_path));
      auto out = open_out(out_path);
      gc::io::write_sweep_header(out);
      gc::sweep(cfg, [&](const gc::SweepRow& row) {
        gc::io::write_sweep_row(out, row);
        out.flush();
        if (row.failed() && !row.is_mean()) {
          std::cerr << "cell " << row.cell << " seed " << *row.seed << " failed: " << row.error
                    << '\n';
        }
      });
    }
  } catch (const gc::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
