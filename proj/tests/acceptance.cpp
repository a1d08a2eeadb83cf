// Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any fail.
// Set GEOCONGEST_FULL_SCALE=1 to add the n = 10000 order-of-magnitude check
// to criterion 10.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "geocongest/delaunay.hpp"
#include "geocongest/ensembles.hpp"
#include "geocongest/metrics.hpp"
#include "geocongest/routing.hpp"
#include "oracles.hpp"

using namespace geocongest;

namespace {

int failures = 0;

void report(int id, bool ok, const std::string& detail, double seconds) {
  std::printf("%s criterion %d: %s [%.1f s]\n", ok ? "PASS" : "FAIL", id, detail.c_str(), seconds);
  std::fflush(stdout);
  if (!ok) ++failures;
}

void info(const std::string& line) {
  std::printf("     %s\n", line.c_str());
  std::fflush(stdout);
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Every congestion run in this binary goes through here so the conservation
// identities are checked on every graph generated.
struct Conservation {
  std::size_t graphs = 0;
  std::size_t violations = 0;
  double worst = 0.0;
} conservation;

CongestionReport checked_congestion(const Graph& g) {
  CongestionReport r = congestion(g);
  const auto sums = oracle::pair_sums(g);
  const double ev = std::fabs(r.vertex_flow.sum() - sums.hops_plus_one) / sums.hops_plus_one;
  const double ee = sums.hops == 0.0 ? 0.0 : std::fabs(r.edge_flow.sum() - sums.hops) / sums.hops;
  conservation.worst = std::max({conservation.worst, ev, ee});
  ++conservation.graphs;
  if (ev > 1e-9 || ee > 1e-9) ++conservation.violations;
  return r;
}

void criterion_bethe() {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  double worst = 0.0;
  for (std::size_t k : {3, 4, 6}) {
    for (std::size_t depth : {1, 2, 3}) {
      const Graph g = gen_bethe(k, depth);
      const CongestionReport r = checked_congestion(g);
      const double exact = bethe_mv_exact(k, g.order());
      const double rel = std::fabs(r.max_vertex_flow - exact) / exact;
      worst = std::max(worst, rel);
      ok &= rel <= 1e-9 && r.argmax_vertex == 0;
    }
  }
  const double t = seconds_since(t0);
  report(1, ok && t < 60.0, fmt("9 lattices, worst relative error %.2e, argmax at root", worst), t);
}

void criterion_complete() {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  for (std::size_t n = 3; n <= 50; ++n) {
    ok &= checked_congestion(gen_complete(n)).max_vertex_flow == static_cast<double>(n - 1);
  }
  report(2, ok, "M_v = N - 1 exactly for N = 3..50", seconds_since(t0));
}

void criterion_oracles() {
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937 gen(2024);
  std::uint64_t seed = 1;
  double worst_flow = 0.0;
  std::size_t pairs = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 4 + gen() % 37;
    const Graph g = oracle::connected_er(n, std::min(1.0, 2.5 * std::log(double(n)) / n), seed);
    const DistanceMatrix d = apsp(g);
    const auto table = build_redistribution(g, d);
    const auto N = static_cast<Eigen::Index>(n);
    // One source at a time: column t of the result is the s -> t flow alone.
    for (Vertex s = 0; s < n; ++s) {
      Eigen::MatrixXd demand = Eigen::MatrixXd::Zero(N, N);
      demand.col(s).setOnes();
      demand(s, s) = 0.0;
      const FlowState f = solve_flow(g, d, table, demand);
      for (Vertex t = 0; t < n; ++t) {
        if (t == s) continue;
        const auto pf = oracle::oracle_flow(g, s, t);
        for (Vertex v = 0; v < n; ++v) {
          worst_flow = std::max(worst_flow, std::fabs(f.flow(t, v) - pf.vertex[v]));
        }
        ++pairs;
      }
    }
    checked_congestion(g);
  }

  std::size_t mismatches = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + gen() % 63;
    const Graph g = oracle::connected_er(n, std::min(1.0, 3.0 * std::log(double(n)) / n), seed);
    const DistanceMatrix d = apsp(g);
    const auto ref = oracle::all_bfs(g);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex w = 0; w < n; ++w) mismatches += d(u, w) != ref[u][w];
  }
  const double t = seconds_since(t0);
  report(3, worst_flow <= 1e-9 && mismatches == 0 && t < 120.0,
         fmt("%zu pairs, worst flow error %.2e; APSP vs BFS mismatches %zu", pairs, worst_flow, mismatches),
         t);
}

void criterion_delaunay() {
  const auto t0 = std::chrono::steady_clock::now();
  std::size_t bad = 0;
  for (unsigned seed = 1; seed <= 20; ++seed) {
    std::mt19937_64 gen(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Points p(2, 200);
    for (Eigen::Index i = 0; i < 200; ++i) p.col(i) << u(gen), u(gen);
    const Triangulation tri = triangulate(p);
    for (const auto& t : tri.triangles) {
      for (Eigen::Index k = 0; k < 200; ++k) {
        if (k == t[0] || k == t[1] || k == t[2]) continue;
        bad += oracle::strictly_inside_circumcircle(p.col(t[0]), p.col(t[1]), p.col(t[2]), p.col(k));
      }
    }
    bad += tri.triangles.size() != 2 * 200 - 2 - oracle::hull_size(p);
  }
  const Graph big = triangulate(sample_points(builtin_density("euclidean"), 10000, 1)).graph;
  const double mean = degree_histogram(big).mean;
  report(5, bad == 0 && mean >= 5.5 && mean <= 6.0,
         fmt("20 sets clean (violations %zu); mean degree at n = %zu is %.3f", bad, big.order(), mean),
         seconds_since(t0));
}

struct KProfile {
  double share[8];
  double mean_k;
  double load;
  std::size_t n;
};

KProfile k_profile(const char* density, std::uint64_t target, std::uint64_t seed) {
  const Graph g = triangulate(sample_points(parse_density_spec(density), target, seed)).graph;
  const RedistributionTable t = build_redistribution(g, apsp(g));
  KProfile p{};
  for (std::size_t k = 1; k <= 8; ++k) p.share[k - 1] = t.k_share(k);
  p.mean_k = t.mean_k();
  p.load = t.load_factor();
  p.n = g.order();
  return p;
}

std::string describe(const KProfile& p) {
  std::string s;
  for (double x : p.share) s += fmt("%.2f ", 100.0 * x);
  return s + fmt("%% | mean k %.3f | load %.3f", p.mean_k, p.load);
}

void criterion_k_distribution() {
  const auto t0 = std::chrono::steady_clock::now();
  const double ref[7] = {49, 33, 12, 3.9, 1.0, 0.57, 0.13};
  const KProfile p = k_profile("euclidean", 10000, 1);
  bool ok = std::fabs(p.mean_k - 1.76) <= 0.15 && std::fabs(p.load - 0.293) <= 0.05;
  double worst = 0.0;
  for (int k = 0; k < 7; ++k) worst = std::max(worst, std::fabs(100.0 * p.share[k] - ref[k]));
  ok &= worst <= 5.0;
  report(6, ok,
         fmt("euclidean n = %zu: worst bin off by %.2f points; mean k %.3f; load %.3f", p.n, worst,
             p.mean_k, p.load),
         seconds_since(t0));
  info("euclidean   k = 1..7, >=8: " + describe(p));
  info("reference   k = 1..7:      49 33 12 3.9 1.0 0.57 0.13 % | mean k 1.76 | load 0.293");
  if (std::getenv("GEOCONGEST_FULL_SCALE")) {
    info("poincare:1  k = 1..7, >=8: " + describe(k_profile("poincare:1", 10000, 1)));
  }
}

void criterion_load_trace() {
  const auto t0 = std::chrono::steady_clock::now();
  const Graph g = triangulate(sample_points(builtin_density("euclidean"), 800, 1)).graph;
  const DistanceMatrix d = apsp(g);
  double sum = 0.0;
  for (double x : d.load_trace()) sum += x;
  const long gap = static_cast<long>(d.iterations()) - static_cast<long>(d.diameter());
  report(7, sum >= 5.0 && sum <= 10.0 && std::labs(gap) <= 4,
         fmt("euclidean n = %zu: load factor sum %.2f, %zu iterations, diameter %d", g.order(), sum,
             d.iterations(), int(d.diameter())),
         seconds_since(t0));
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    const Graph h = triangulate(sample_points(parse_density_spec("poincare:1"), 800, seed)).graph;
    const DistanceMatrix dh = apsp(h);
    double s = 0.0;
    for (double x : dh.load_trace()) s += x;
    info(fmt("poincare:1 n = %zu seed %llu: load factor sum %.2f, %zu iterations, diameter %d",
             h.order(), static_cast<unsigned long long>(seed), s, dh.iterations(), int(dh.diameter())));
  }
}

// Mean of max_vflow over trials for each n, and the fitted log-log slope.
double family_exponent(const std::string& family, const DensityParams& params,
                       const std::vector<std::size_t>& sizes, std::size_t trials, std::uint64_t seed,
                       std::size_t matchings = 0) {
  std::vector<std::pair<double, double>> samples;
  std::string line = family + ":";
  for (std::size_t n : sizes) {
    double mean_n = 0.0, mean_mv = 0.0;
    for (std::size_t t = 0; t < trials; ++t) {
      Graph g = generate_family(family, params, {}, n, seed + t);
      for (std::size_t k = 0; k < matchings; ++k) g = add_random_matching(g, seed + t, k + 1);
      if (!is_connected(g)) g = largest_component(g).graph;
      const CongestionReport r = checked_congestion(g);
      mean_n += static_cast<double>(r.n);
      mean_mv += r.max_vertex_flow;
    }
    mean_n /= static_cast<double>(trials);
    mean_mv /= static_cast<double>(trials);
    samples.emplace_back(mean_n, mean_mv);
    line += fmt(" (%.0f, %.4g)", mean_n, mean_mv);
  }
  const double slope = fit_scaling_exponent(samples);
  info(line + fmt(" -> %.3f", slope));
  return slope;
}

void criterion_exponents() {
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<std::size_t> sizes{250, 500, 1000, 2000, 4000};
  const double eu = family_exponent("euclidean-delaunay", {}, sizes, 5, 100);
  const double po = family_exponent("poincare-delaunay", {{"lambda", 1.0}}, sizes, 5, 100);
  const double er = family_exponent("er", {}, sizes, 5, 100);
  const double rgg = family_exponent("rgg", {}, sizes, 5, 100);
  const double reg = family_exponent("regular", {{"k", 6.0}}, sizes, 5, 100);
  const bool ok = eu >= 1.35 && eu <= 1.7 && po >= 1.7 && po <= 2.05 && er <= 1.4 && rgg <= 1.4 &&
                  reg <= 1.4 && reg < er && reg < rgg;
  report(8, ok,
         fmt("exponents euclidean %.3f, poincare %.3f, er %.3f, rgg %.3f, 6-regular %.3f", eu, po,
             er, rgg, reg),
         seconds_since(t0));
}

void criterion_matching() {
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<std::pair<double, double>> samples;
  double ratio = 0.0;
  for (std::size_t depth = 2; depth <= 5; ++depth) {
    const Graph g = gen_bethe(6, depth);
    const double before = checked_congestion(g).max_vertex_flow;
    double after = 0.0;
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      after += checked_congestion(add_random_matching(g, seed, 1)).max_vertex_flow;
    }
    after /= 5.0;
    samples.emplace_back(static_cast<double>(g.order()), after);
    ratio = after / before;
    info(fmt("bethe k = 6 depth %zu (N = %zu): M_v %.4g -> %.4g, ratio %.4f", depth, g.order(),
             before, after, ratio));
  }
  const double slope = fit_scaling_exponent(samples);
  report(9, ratio < 0.2 && slope < 1.4,
         fmt("ratio at N = %zu is %.4f; exponent after matching %.3f", bethe_order(6, 5), ratio, slope),
         seconds_since(t0));
}

void criterion_lambda_trend() {
  const auto t0 = std::chrono::steady_clock::now();
  const double lambdas[3] = {1, 5, 10};
  double diam[3] = {}, mv[3] = {};
  for (int i = 0; i < 3; ++i) {
    for (std::uint64_t t = 0; t < 5; ++t) {
      const Graph g = generate_family("poincare-delaunay", {{"lambda", lambdas[i]}}, {}, 2000, 500 + t);
      const CongestionReport r = checked_congestion(g);
      diam[i] += r.diameter / 5.0;
      mv[i] += r.max_vertex_flow / 5.0;
    }
    info(fmt("lambda %g: mean diameter %.1f, mean max_vflow %.4g", lambdas[i], diam[i], mv[i]));
  }
  bool ok = diam[0] < diam[1] && diam[1] < diam[2] && mv[0] > mv[1] && mv[1] > mv[2];
  std::string detail = "n = 2000: diameter increasing and max_vflow decreasing in lambda";

  if (std::getenv("GEOCONGEST_FULL_SCALE")) {
    // Printed single realizations at n = 10000, ordered-pair scale.
    const double printed_diam[3] = {20, 31, 37};
    const double printed_mv[3] = {3.57e7, 2.94e7, 2.50e7};
    for (int i = 0; i < 3; ++i) {
      const Graph g = generate_family("poincare-delaunay", {{"lambda", lambdas[i]}}, {}, 10000, 900);
      const CongestionReport r = checked_congestion(g);
      const double ordered = 2.0 * r.max_vertex_flow;
      const bool within = ordered / printed_mv[i] < 3.0 && printed_mv[i] / ordered < 3.0 &&
                          r.diameter / printed_diam[i] < 3.0 && printed_diam[i] / r.diameter < 3.0;
      ok &= within;
      info(fmt("n = 10000 lambda %g: diameter %zu (printed %g), max_vflow x2 %.3g (printed %.3g)",
               lambdas[i], r.diameter, printed_diam[i], ordered, printed_mv[i]));
    }
    detail += "; full-scale values within a factor 3";
  }
  report(10, ok, detail, seconds_since(t0));
}

void criterion_density_identity() {
  const auto t0 = std::chrono::steady_clock::now();
  struct Case {
    const char* name;
    double param;
  };
  const Case cases[] = {{"poincare", 1.0}, {"hyperbolic_r2", 0.0}, {"genhyp", 0.01},
                        {"cusp", 1.0},     {"slow", 0.0}};
  double worst = 0.0;
  for (const Case& c : cases) {
    DensityParams params;
    if (std::string(c.name) == "genhyp") params["a"] = c.param;
    if (std::string(c.name) == "poincare" || std::string(c.name) == "cusp") params["lambda"] = c.param;
    const DensityModel m = builtin_density(c.name, params);
    for (int i = 1; i <= 100; ++i) {
      const double x = 0.1 * i;
      const double lhs = oracle::cumulative(c.name, m.alpha(x), c.param);
      worst = std::max(worst, std::fabs(lhs - x * x / 2.0) / (x * x / 2.0));
    }
  }
  report(11, worst <= 1e-10, fmt("five families on x = 0.1..10, worst relative error %.2e", worst),
         seconds_since(t0));
}

void criterion_conservation() {
  report(4, conservation.violations == 0,
         fmt("%zu graphs, worst relative error %.2e", conservation.graphs, conservation.worst), 0.0);
}

}  // namespace

int main() {
  const std::vector<std::function<void()>> steps{
      criterion_bethe,     criterion_complete,   criterion_oracles,       criterion_delaunay,
      criterion_k_distribution, criterion_load_trace, criterion_exponents, criterion_matching,
      criterion_lambda_trend,   criterion_density_identity};
  for (const auto& step : steps) {
    try {
      step();
    } catch (const std::exception& e) {
      std::printf("FAIL criterion run aborted: %s\n", e.what());
      ++failures;
    }
  }
  criterion_conservation();
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
