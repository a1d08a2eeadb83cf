#include "geocongest/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "json.hpp"

#include "geocongest/error.hpp"

namespace geocongest::io {

namespace {

std::string format17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

template <typename T>
T parse_field(std::string_view field, std::size_t line) {
  while (!field.empty() && (field.front() == ' ' || field.front() == '\t')) field.remove_prefix(1);
  while (!field.empty() && (field.back() == ' ' || field.back() == '\r' || field.back() == '\t')) {
    field.remove_suffix(1);
  }
  T value{};
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw Error(ErrorCode::ParseError,
                "line " + std::to_string(line) + ": bad field '" + std::string(field) + "'");
  }
  return value;
}

// Splits "a,b" rows after an optional header; calls f(first, second, line).
template <typename F>
void for_each_pair(std::istream& in, std::string_view header, F&& f) {
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    if (text.empty()) continue;
    if (line == 1 && text == header) continue;
    const auto comma = text.find(',');
    if (comma == std::string::npos) {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": expected two fields");
    }
    f(std::string_view(text).substr(0, comma), std::string_view(text).substr(comma + 1), line);
  }
}

}  // namespace

void write_points_csv(std::ostream& out, const Points& points) {
  out << "x,y\n";
  for (Eigen::Index i = 0; i < points.cols(); ++i) {
    out << format17(points(0, i)) << ',' << format17(points(1, i)) << '\n';
  }
}

Points read_points_csv(std::istream& in) {
  std::vector<double> xy;
  for_each_pair(in, "x,y", [&](std::string_view a, std::string_view b, std::size_t line) {
    xy.push_back(parse_field<double>(a, line));
    xy.push_back(parse_field<double>(b, line));
  });
  return Eigen::Map<const Points>(xy.data(), 2, static_cast<Eigen::Index>(xy.size() / 2));
}

void write_edges_csv(std::ostream& out, const Graph& g) {
  out << "u,v\n";
  for (const Edge& e : g.edges()) out << e.u << ',' << e.v << '\n';
}

Graph read_edges_csv(std::istream& in, std::size_t min_order) {
  std::vector<Edge> edges;
  std::size_t order = min_order;
  for_each_pair(in, "u,v", [&](std::string_view a, std::string_view b, std::size_t line) {
    const auto u = parse_field<Vertex>(a, line);
    const auto v = parse_field<Vertex>(b, line);
    order = std::max<std::size_t>(order, std::max(u, v) + std::size_t{1});
    edges.push_back({u, v});
  });
  return Graph::from_edges(order, edges);
}

std::string report_json(const CongestionReport& report, bool include_arrays) {
  nlohmann::ordered_json j;
  j["n"] = report.n;
  j["m"] = report.m;
  j["diameter"] = report.diameter;
  j["max_vertex_flow"] = report.max_vertex_flow;
  j["argmax_vertex"] = report.argmax_vertex;
  j["max_edge_flow"] = report.max_edge_flow;
  j["avg_vertex_flow"] = report.avg_vertex_flow;
  j["avg_edge_flow"] = report.avg_edge_flow;
  j["apsp_iterations"] = report.apsp_iterations;
  j["flow_iterations"] = report.flow_iterations;
  j["memory"] = {{"matrix_bytes", report.memory.matrix_bytes},
                 {"redistribution_bytes", report.memory.redistribution_bytes},
                 {"flow_bytes", report.memory.flow_bytes}};
  if (!report.vertex_ids.empty()) j["vertex_ids"] = report.vertex_ids;
  if (include_arrays) {
    j["vertex_flow"] = std::vector<double>(report.vertex_flow.begin(), report.vertex_flow.end());
    auto edges = nlohmann::ordered_json::array();
    for (std::size_t e = 0; e < report.edges.size(); ++e) {
      edges.push_back({report.edges[e].u, report.edges[e].v,
                       report.edge_flow(static_cast<Eigen::Index>(e))});
    }
    j["edge_flow"] = std::move(edges);
  }
  return j.dump(2);
}

void write_vertex_flow_csv(std::ostream& out, const CongestionReport& report) {
  out << "v,T\n";
  for (Eigen::Index v = 0; v < report.vertex_flow.size(); ++v) {
    const auto id = report.vertex_ids.empty() ? static_cast<Vertex>(v)
                                              : report.vertex_ids[static_cast<std::size_t>(v)];
    out << id << ',' << format17(report.vertex_flow(v)) << '\n';
  }
}

namespace {

std::uint64_t count_field(const nlohmann::json& j, const char* key, std::uint64_t fallback) {
  if (!j.contains(key)) return fallback;
  const auto& v = j.at(key);
  if (!v.is_number_integer() || (!v.is_number_unsigned() && v.get<std::int64_t>() < 0)) {
    throw Error(ErrorCode::ParseError, std::string("sweep config: '") + key + "' must be an integer >= 0");
  }
  return v.get<std::uint64_t>();
}

}  // namespace

SweepConfig parse_sweep_config(const std::string& json_text) {
  SweepConfig cfg;
  try {
    const auto j = nlohmann::json::parse(json_text);
    cfg.family = j.at("family").get<std::string>();
    if (j.contains("params")) {
      for (const auto& [key, value] : j.at("params").items()) {
        if (key == "expr") {
          cfg.expr = value.get<std::string>();
        } else if (value.is_array()) {
          cfg.params[key] = value.get<std::vector<double>>();
        } else {
          cfg.params[key] = {value.get<double>()};
        }
      }
    }
    if (j.contains("n_list")) cfg.n_list = j.at("n_list").get<std::vector<std::size_t>>();
    cfg.trials = count_field(j, "trials", 1);
    cfg.seed = count_field(j, "seed", 0);
    cfg.matchings = count_field(j, "matchings", 0);
    cfg.largest_component = j.value("largest_component", false);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("sweep config: ") + e.what());
  }
  return cfg;
}

void write_sweep_header(std::ostream& out) { out << kSweepHeader << '\n'; }

void write_sweep_row(std::ostream& out, const SweepRow& row) {
  out << row.family << ',' << row.params << ',';
  if (row.seed) {
    out << *row.seed;
  } else {
    out << "mean";
  }
  if (row.failed()) {
    out << ",nan,nan,nan,nan,nan,nan,nan\n";
    return;
  }
  out << ',' << format_number(row.n) << ',' << format_number(row.m) << ','
      << format_number(row.diameter) << ',' << format17(row.avg_vflow) << ','
      << format17(row.max_vflow) << ',' << format17(row.avg_eflow) << ','
      << format17(row.max_eflow) << '\n';
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace geocongest::io
