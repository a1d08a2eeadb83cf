#ifndef GEOCONGEST_METRICS_HPP
#define GEOCONGEST_METRICS_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "geocongest/density.hpp"
#include "geocongest/graph.hpp"

namespace geocongest {

struct DegreeHistogram {
  std::map<std::size_t, std::size_t> counts;  // degree -> vertices
  std::size_t n = 0;
  double mean = 0.0;
};

DegreeHistogram degree_histogram(const Graph& g);

/// Maximum vertex flow of the complete k-regular tree on n vertices:
/// (k - 1) / (2k) * (n - 1)^2 + n - 1.
double bethe_mv_exact(std::size_t k, std::size_t n);

/// Upper bound Delta^2 (Delta - 1)^(D - 2) D^2 on the flow through any vertex
/// of a graph with maximum degree Delta and diameter D.
double lemma_flow_bound(std::size_t max_degree, std::size_t diameter);

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

/// Ordinary least squares y = slope * x + intercept.
LineFit fit_line(std::span<const double> x, std::span<const double> y);

/// Least-squares slope of log(value) against log(n). Needs at least three
/// samples; throws NonPositiveSample for n or value <= 0.
double fit_scaling_exponent(std::span<const std::pair<double, double>> samples);

/// Straight-line fit of log CCDF(d) = P(deg >= d) against log d over degrees
/// d >= min_degree that occur in the histogram.
LineFit fit_degree_ccdf(const DegreeHistogram& hist, std::size_t min_degree);

// ---------------------------------------------------------------------------
// Sweeps
// ---------------------------------------------------------------------------

/// Families: complete, er, rgg, regular, bethe, and <density>-delaunay for
/// each built-in density (e.g. poincare-delaunay). Parameter values are grids;
/// every combination with every n forms one cell.
struct SweepConfig {
  std::string family;
  std::map<std::string, std::vector<double>> params;
  std::string expr;  // custom-delaunay only
  std::vector<std::size_t> n_list;
  std::size_t trials = 1;
  std::uint64_t seed = 0;
  std::size_t matchings = 0;
  bool largest_component = false;
};

struct SweepRow {
  std::string family;
  std::string params;
  std::optional<std::uint64_t> seed;  // empty on mean rows
  std::size_t cell = 0;
  double n = 0.0;
  double m = 0.0;
  double diameter = 0.0;
  double avg_vflow = 0.0;
  double max_vflow = 0.0;
  double avg_eflow = 0.0;
  double max_eflow = 0.0;
  std::string error;  // non-empty when the trial failed

  bool is_mean() const noexcept { return !seed.has_value(); }
  bool failed() const noexcept { return !error.empty(); }
};

/// Builds one member of a sweep family. `n` is ignored by bethe (which reads
/// "k" and "depth"); Delaunay families use n as the Poisson target count.
Graph generate_family(std::string_view family, const DensityParams& params,
                      std::string_view expr, std::size_t n, std::uint64_t seed);

/// Runs generate -> (matchings) -> congestion for each cell and trial. Trial t
/// uses seed + t. Each cell's trials are followed by a mean row over its
/// successful trials. Failures are recorded on the row and the sweep moves on.
std::vector<SweepRow> sweep(const SweepConfig& config,
                            const std::function<void(const SweepRow&)>& on_row = {});

}  // namespace geocongest

#endif  // GEOCONGEST_METRICS_HPP
