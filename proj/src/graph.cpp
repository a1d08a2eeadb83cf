#include "geocongest/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "geocongest/error.hpp"

namespace geocongest {

Graph::Graph(std::size_t n) : offsets_(n + 1, 0) {}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  pairs.reserve(edges.size());
  for (const Edge& e : edges) pairs.emplace_back(e.u, e.v);
  return from_edges(n, std::span<const std::pair<Vertex, Vertex>>(pairs));
}

Graph Graph::from_edges(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges) {
  std::vector<std::pair<Vertex, Vertex>> arcs;
  arcs.reserve(2 * edges.size());
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw Error(ErrorCode::PreconditionViolated,
                  "edge (" + std::to_string(u) + ", " + std::to_string(v) +
                      ") out of range for " + std::to_string(n) + " vertices");
    }
    if (u == v) continue;
    arcs.emplace_back(u, v);
    arcs.emplace_back(v, u);
  }
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());

  Graph g(n);
  g.targets_.reserve(arcs.size());
  for (const auto& [u, v] : arcs) {
    ++g.offsets_[u + 1];
    g.targets_.push_back(v);
  }
  std::partial_sum(g.offsets_.begin(), g.offsets_.end(), g.offsets_.begin());
  return g;
}

std::size_t Graph::max_degree() const noexcept {
  std::size_t best = 0;
  for (Vertex v = 0; v < order(); ++v) best = std::max(best, degree(v));
  return best;
}

bool Graph::has_edge(Vertex u, Vertex v) const noexcept {
  const auto adj = neighbors(u);
  return std::binary_search(adj.begin(), adj.end(), v);
}

std::size_t Graph::slot(Vertex u, Vertex v) const noexcept {
  const auto adj = neighbors(u);
  const auto it = std::lower_bound(adj.begin(), adj.end(), v);
  if (it == adj.end() || *it != v) return directed_edge_count();
  return offsets_[u] + static_cast<std::size_t>(it - adj.begin());
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(size());
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

Graph Graph::with_edges(std::span<const Edge> extra) const {
  std::vector<Edge> all = edges();
  all.insert(all.end(), extra.begin(), extra.end());
  Graph g = from_edges(order(), all);
  g.coords_ = coords_;
  return g;
}

void Graph::set_coords(Eigen::Matrix2Xd coords) {
  if (static_cast<std::size_t>(coords.cols()) != order()) {
    throw Error(ErrorCode::DimensionMismatch, "coordinate count does not match vertex count");
  }
  coords_ = std::move(coords);
}

Components connected_components(const Graph& g) {
  constexpr Vertex kUnset = ~Vertex{0};
  Components c;
  c.label.assign(g.order(), kUnset);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (c.label[s] != kUnset) continue;
    const auto id = static_cast<Vertex>(c.count++);
    c.label[s] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        if (c.label[w] == kUnset) {
          c.label[w] = id;
          stack.push_back(w);
        }
      }
    }
  }
  return c;
}

Subgraph largest_component(const Graph& g) {
  const Components c = connected_components(g);
  std::vector<std::size_t> sizes(c.count, 0);
  for (Vertex l : c.label) ++sizes[l];
  const auto best = static_cast<Vertex>(
      std::max_element(sizes.begin(), sizes.end()) - sizes.begin());

  Subgraph sub;
  std::vector<Vertex> renumber(g.order(), 0);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (c.label[v] == best) {
      renumber[v] = static_cast<Vertex>(sub.original.size());
      sub.original.push_back(v);
    }
  }
  std::vector<Edge> kept;
  for (const Edge& e : g.edges()) {
    if (c.label[e.u] == best) kept.push_back({renumber[e.u], renumber[e.v]});
  }
  sub.graph = Graph::from_edges(sub.original.size(), kept);
  if (g.coords()) {
    Eigen::Matrix2Xd xy(2, static_cast<Eigen::Index>(sub.original.size()));
    for (std::size_t i = 0; i < sub.original.size(); ++i) {
      xy.col(static_cast<Eigen::Index>(i)) = g.coords()->col(sub.original[i]);
    }
    sub.graph.set_coords(std::move(xy));
  }
  return sub;
}

}  // namespace geocongest
