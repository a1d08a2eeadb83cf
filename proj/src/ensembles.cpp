#include "geocongest/ensembles.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "geocongest/error.hpp"
#include "geocongest/rng.hpp"

namespace geocongest {

Graph gen_er(std::size_t n, std::optional<double> p, std::uint64_t seed) {
  if (n < 2) throw Error(ErrorCode::PreconditionViolated, "ER graph needs n >= 2");
  const double prob = p.value_or(2.0 * std::log(static_cast<double>(n)) / static_cast<double>(n));
  if (!(prob >= 0.0 && prob <= 1.0)) {
    throw Error(ErrorCode::InvalidProbability, "p = " + std::to_string(prob));
  }
  Rng rng(seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (rng.uniform() < prob) edges.push_back({u, v});
    }
  }
  return Graph::from_edges(n, edges);
}

Graph rgg_from_points(const Points& points, double radius) {
  if (!(radius >= 0.0)) throw Error(ErrorCode::InvalidRadius, "radius must be >= 0");
  const auto n = static_cast<std::size_t>(points.cols());
  std::vector<Edge> edges;
  if (n >= 2) {
    // Bucket into square cells of side >= radius; only adjacent cells can connect.
    const Eigen::Vector2d lo = points.rowwise().minCoeff();
    const Eigen::Vector2d hi = points.rowwise().maxCoeff();
    const double extent = std::max((hi - lo).maxCoeff(), 1e-12);
    const auto cells = static_cast<std::size_t>(
        std::clamp(radius > 0.0 ? extent / radius : 1.0, 1.0, std::sqrt(static_cast<double>(n)) + 1.0));
    const double side = extent / static_cast<double>(cells) * (1.0 + 1e-12);
    auto cell_of = [&](Eigen::Index i, int axis) {
      const auto c = static_cast<std::size_t>((points(axis, i) - lo(axis)) / side);
      return std::min(c, cells - 1);
    };
    std::vector<std::vector<Vertex>> grid(cells * cells);
    for (Eigen::Index i = 0; i < points.cols(); ++i) {
      grid[cell_of(i, 0) * cells + cell_of(i, 1)].push_back(static_cast<Vertex>(i));
    }
    const double r2 = radius * radius;
    for (Eigen::Index i = 0; i < points.cols(); ++i) {
      const std::size_t cx = cell_of(i, 0), cy = cell_of(i, 1);
      for (std::size_t x = cx == 0 ? 0 : cx - 1; x <= std::min(cx + 1, cells - 1); ++x) {
        for (std::size_t y = cy == 0 ? 0 : cy - 1; y <= std::min(cy + 1, cells - 1); ++y) {
          for (Vertex j : grid[x * cells + y]) {
            if (j <= i) continue;
            if ((points.col(i) - points.col(j)).squaredNorm() <= r2) {
              edges.push_back({static_cast<Vertex>(i), j});
            }
          }
        }
      }
    }
  }
  Graph g = Graph::from_edges(n, edges);
  g.set_coords(points);
  return g;
}

Graph gen_rgg(std::size_t n, std::optional<double> radius, std::uint64_t seed) {
  if (n < 2) throw Error(ErrorCode::PreconditionViolated, "RGG needs n >= 2");
  const double r =
      radius.value_or(std::sqrt(2.0 * std::log(static_cast<double>(n)) / static_cast<double>(n)));
  if (!(r >= 0.0)) throw Error(ErrorCode::InvalidRadius, "radius must be >= 0");
  Rng rng(seed);
  Points pts(2, static_cast<Eigen::Index>(n));
  for (Eigen::Index i = 0; i < pts.cols(); ++i) {
    const double x = rng.uniform();
    const double y = rng.uniform();
    pts.col(i) << x, y;
  }
  return rgg_from_points(pts, r);
}

Graph gen_random_regular(std::size_t n, std::size_t k, std::uint64_t seed) {
  if (k % 2 != 0) throw Error(ErrorCode::OddDegree, "k = " + std::to_string(k));
  if (k < 2 || n <= k) {
    throw Error(ErrorCode::PreconditionViolated,
                "need k >= 2 and n > k (n = " + std::to_string(n) + ", k = " + std::to_string(k) + ")");
  }
  Rng rng(seed);
  std::vector<Vertex> perm(n);
  std::vector<Edge> edges;
  edges.reserve(n * k / 2);
  for (std::size_t i = 0; i < k / 2; ++i) {
    std::iota(perm.begin(), perm.end(), Vertex{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    for (Vertex v = 0; v < n; ++v) edges.push_back({v, perm[v]});
  }
  return Graph::from_edges(n, edges);
}

std::size_t bethe_order(std::size_t k, std::size_t depth) {
  std::size_t total = 1, shell = 1;
  for (std::size_t d = 1; d <= depth; ++d) {
    shell *= (d == 1 ? k : k - 1);
    total += shell;
  }
  return total;
}

Graph gen_bethe(std::size_t k, std::size_t depth) {
  if (k < 3) throw Error(ErrorCode::PreconditionViolated, "Bethe lattice needs k >= 3");
  const std::size_t n = bethe_order(k, depth);
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  // Breadth-first numbering: children of each vertex are the next free ids.
  Vertex next_id = 1;
  for (Vertex v = 0; next_id < n; ++v) {
    const std::size_t children = v == 0 ? k : k - 1;
    for (std::size_t c = 0; c < children; ++c) edges.push_back({v, next_id++});
  }
  return Graph::from_edges(n, edges);
}

Graph gen_complete(std::size_t n) {
  if (n < 1) throw Error(ErrorCode::PreconditionViolated, "complete graph needs n >= 1");
  std::vector<Edge> edges;
  edges.reserve(n * (n - 1) / 2);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return Graph::from_edges(n, edges);
}

Graph add_random_matching(const Graph& g, std::uint64_t seed, std::uint64_t stream) {
  Rng rng(seed, stream);
  std::vector<Vertex> pool(g.order());
  std::iota(pool.begin(), pool.end(), Vertex{0});
  auto draw = [&] {
    const std::size_t i = rng.below(pool.size());
    const Vertex v = pool[i];
    pool[i] = pool.back();
    pool.pop_back();
    return v;
  };
  std::vector<Edge> added;
  while (pool.size() >= 2) {
    const Vertex a = draw();
    const Vertex b = draw();
    if (!g.has_edge(a, b)) added.push_back({std::min(a, b), std::max(a, b)});
  }
  return g.with_edges(added);
}

}  // namespace geocongest
