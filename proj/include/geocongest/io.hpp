#ifndef GEOCONGEST_IO_HPP
#define GEOCONGEST_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "geocongest/graph.hpp"
#include "geocongest/metrics.hpp"
#include "geocongest/pointgen.hpp"
#include "geocongest/routing.hpp"

namespace geocongest::io {

/// `x,y` header, one point per line, 17 significant digits.
void write_points_csv(std::ostream& out, const Points& points);
Points read_points_csv(std::istream& in);

/// `u,v` header, 0-based ids with u < v in lexicographic order.
void write_edges_csv(std::ostream& out, const Graph& g);

/// Reads a `u,v` edge list. The vertex count is one past the largest id
/// unless `min_order` is larger.
Graph read_edges_csv(std::istream& in, std::size_t min_order = 0);

/// Congestion report as a JSON document (the CongestionReport fields, minus
/// the per-vertex and per-edge arrays unless `include_arrays`).
std::string report_json(const CongestionReport& report, bool include_arrays = false);

/// `v,T` per-vertex flow dump.
void write_vertex_flow_csv(std::ostream& out, const CongestionReport& report);

/// Parses the sweep JSON config: family, params (object of numbers or number
/// arrays; "expr" may be a string), n_list, trials, seed, matchings, and the
/// optional largest_component flag.
SweepConfig parse_sweep_config(const std::string& json_text);

inline constexpr const char* kSweepHeader =
    "family,params,seed,n,m,diameter,avg_vflow,max_vflow,avg_eflow,max_eflow";

void write_sweep_header(std::ostream& out);
void write_sweep_row(std::ostream& out, const SweepRow& row);

std::string read_file(const std::string& path);

}  // namespace geocongest::io

#endif  // GEOCONGEST_IO_HPP
