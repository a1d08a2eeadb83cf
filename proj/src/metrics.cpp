#include "geocongest/metrics.hpp"

#include <cmath>
#include <cstdio>
#include <numeric>

#include <Eigen/Dense>

#include "geocongest/delaunay.hpp"
#include "geocongest/ensembles.hpp"
#include "geocongest/error.hpp"
#include "geocongest/pointgen.hpp"
#include "geocongest/routing.hpp"

namespace geocongest {

DegreeHistogram degree_histogram(const Graph& g) {
  DegreeHistogram h;
  h.n = g.order();
  for (Vertex v = 0; v < g.order(); ++v) ++h.counts[g.degree(v)];
  h.mean = h.n == 0 ? 0.0 : 2.0 * static_cast<double>(g.size()) / static_cast<double>(h.n);
  return h;
}

double bethe_mv_exact(std::size_t k, std::size_t n) {
  const double kk = static_cast<double>(k);
  const double span = static_cast<double>(n) - 1.0;
  return (kk - 1.0) / (2.0 * kk) * span * span + span;
}

double lemma_flow_bound(std::size_t max_degree, std::size_t diameter) {
  const double delta = static_cast<double>(max_degree);
  const double d = static_cast<double>(diameter);
  return delta * delta * std::pow(delta - 1.0, d - 2.0) * d * d;
}

LineFit fit_line(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw Error(ErrorCode::PreconditionViolated, "line fit needs two or more paired samples");
  }
  const auto n = static_cast<Eigen::Index>(x.size());
  Eigen::MatrixXd design(n, 2);
  design.col(0) = Eigen::Map<const Eigen::VectorXd>(x.data(), n);
  design.col(1).setOnes();
  const Eigen::Map<const Eigen::VectorXd> rhs(y.data(), n);
  const Eigen::Vector2d coef = design.colPivHouseholderQr().solve(rhs);

  LineFit fit{coef(0), coef(1), 1.0};
  const double ss_tot = (rhs.array() - rhs.mean()).square().sum();
  const double ss_res = (design * coef - rhs).squaredNorm();
  if (ss_tot > 0.0) fit.r_squared = 1.0 - ss_res / ss_tot;
  return fit;
}

double fit_scaling_exponent(std::span<const std::pair<double, double>> samples) {
  if (samples.size() < 3) {
    throw Error(ErrorCode::PreconditionViolated, "scaling fit needs at least three samples");
  }
  std::vector<double> lx, ly;
  for (const auto& [n, value] : samples) {
    if (!(n > 0.0) || !(value > 0.0)) {
      throw Error(ErrorCode::NonPositiveSample, "log-log fit needs positive samples");
    }
    lx.push_back(std::log(n));
    ly.push_back(std::log(value));
  }
  return fit_line(lx, ly).slope;
}

LineFit fit_degree_ccdf(const DegreeHistogram& hist, std::size_t min_degree) {
  std::vector<double> lx, ly;
  std::size_t at_least = hist.n;
  for (const auto& [degree, count] : hist.counts) {
    if (degree >= min_degree && degree > 0) {
      lx.push_back(std::log(static_cast<double>(degree)));
      ly.push_back(std::log(static_cast<double>(at_least) / static_cast<double>(hist.n)));
    }
    at_least -= count;
  }
  return fit_line(lx, ly);
}

// ---------------------------------------------------------------------------
// Sweeps
// ---------------------------------------------------------------------------

namespace {

constexpr std::string_view kDelaunaySuffix = "-delaunay";

std::size_t require_count(const DensityParams& params, std::string_view key) {
  const auto it = params.find(key);
  if (it == params.end()) {
    throw Error(ErrorCode::MissingParam, "family needs parameter '" + std::string(key) + "'");
  }
  return static_cast<std::size_t>(std::llround(it->second));
}

std::optional<double> optional_param(const DensityParams& params, std::string_view key) {
  const auto it = params.find(key);
  if (it == params.end()) return std::nullopt;
  return it->second;
}

std::string render_params(const DensityParams& params) {
  std::string out;
  char buf[64];
  for (const auto& [key, value] : params) {
    if (!out.empty()) out += ';';
    std::snprintf(buf, sizeof buf, "%g", value);
    out += key + "=" + buf;
  }
  return out;
}

std::vector<DensityParams> expand_grid(const std::map<std::string, std::vector<double>>& grid) {
  std::vector<DensityParams> cells{{}};
  for (const auto& [key, values] : grid) {
    std::vector<DensityParams> expanded;
    for (const DensityParams& base : cells) {
      for (double v : values) {
        DensityParams p = base;
        p[key] = v;
        expanded.push_back(std::move(p));
      }
    }
    cells = std::move(expanded);
  }
  return cells;
}

}  // namespace

Graph generate_family(std::string_view family, const DensityParams& params,
                      std::string_view expr, std::size_t n, std::uint64_t seed) {
  if (family == "complete") return gen_complete(n);
  if (family == "er") return gen_er(n, optional_param(params, "p"), seed);
  if (family == "rgg") return gen_rgg(n, optional_param(params, "radius"), seed);
  if (family == "regular") return gen_random_regular(n, require_count(params, "k"), seed);
  if (family == "bethe") return gen_bethe(require_count(params, "k"), require_count(params, "depth"));
  if (family.size() > kDelaunaySuffix.size() && family.ends_with(kDelaunaySuffix)) {
    const auto density = family.substr(0, family.size() - kDelaunaySuffix.size());
    const DensityModel model = builtin_density(density, params, expr);
    return triangulate(sample_points(model, n, seed)).graph;
  }
  throw Error(ErrorCode::PreconditionViolated, "unknown family '" + std::string(family) + "'");
}

std::vector<SweepRow> sweep(const SweepConfig& config,
                            const std::function<void(const SweepRow&)>& on_row) {
  std::vector<SweepRow> rows;
  const std::vector<DensityParams> grid = expand_grid(config.params);
  std::vector<std::size_t> n_list = config.n_list;
  if (n_list.empty()) n_list.push_back(0);

  auto emit = [&](SweepRow row) {
    if (on_row) on_row(row);
    rows.push_back(std::move(row));
  };

  std::size_t cell = 0;
  for (const DensityParams& params : grid) {
    for (std::size_t n : n_list) {
      SweepRow mean;
      mean.family = config.family;
      mean.params = render_params(params);
      mean.cell = cell;
      std::size_t ok = 0;
      for (std::size_t t = 0; t < config.trials; ++t) {
        SweepRow row;
        row.family = config.family;
        row.params = mean.params;
        row.seed = config.seed + t;
        row.cell = cell;
        try {
          Graph g = generate_family(config.family, params, config.expr, n, config.seed + t);
          for (std::size_t k = 0; k < config.matchings; ++k) {
            g = add_random_matching(g, config.seed + t, k + 1);
          }
          const CongestionReport rep =
              congestion(g, CongestionOptions{config.largest_component});
          row.n = static_cast<double>(rep.n);
          row.m = static_cast<double>(rep.m);
          row.diameter = static_cast<double>(rep.diameter);
          row.avg_vflow = rep.avg_vertex_flow;
          row.max_vflow = rep.max_vertex_flow;
          row.avg_eflow = rep.avg_edge_flow;
          row.max_eflow = rep.max_edge_flow;
          mean.n += row.n;
          mean.m += row.m;
          mean.diameter += row.diameter;
          mean.avg_vflow += row.avg_vflow;
          mean.max_vflow += row.max_vflow;
          mean.avg_eflow += row.avg_eflow;
          mean.max_eflow += row.max_eflow;
          ++ok;
        } catch (const Error& e) {
          row.error = e.what();
        }
        emit(std::move(row));
      }
      if (ok == 0) {
        mean.error = "no successful trials";
      } else {
        const double inv = 1.0 / static_cast<double>(ok);
        mean.n *= inv;
        mean.m *= inv;
        mean.diameter *= inv;
        mean.avg_vflow *= inv;
        mean.max_vflow *= inv;
        mean.avg_eflow *= inv;
        mean.max_eflow *= inv;
      }
      emit(std::move(mean));
      ++cell;
    }
  }
  return rows;
}

}  // namespace geocongest
