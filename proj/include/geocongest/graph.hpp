#ifndef GEOCONGEST_GRAPH_HPP
#define GEOCONGEST_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Core>

namespace geocongest {

using Vertex = std::uint32_t;

/// Undirected edge with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  auto operator<=>(const Edge&) const = default;
};

/// Undirected simple graph in compressed sparse row form.
///
/// Neighbour lists are sorted, symmetric, loop-free and duplicate-free. The
/// slot of neighbour j in row i (offset(i) + position) doubles as the index of
/// the directed edge i -> j, which the routing tables key on.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);

  /// Builds from an arbitrary edge list: self-loops are dropped and duplicate
  /// or reversed edges merged. Throws PreconditionViolated on out-of-range ids.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);
  static Graph from_edges(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges);

  std::size_t order() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t size() const noexcept { return targets_.size() / 2; }

  std::span<const Vertex> neighbors(Vertex v) const noexcept {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const noexcept { return offsets_[v + 1] - offsets_[v]; }
  std::size_t max_degree() const noexcept;

  bool has_edge(Vertex u, Vertex v) const noexcept;

  /// Directed-edge slots: slot(u, k) is the k-th neighbour of u.
  std::size_t offset(Vertex v) const noexcept { return offsets_[v]; }
  std::size_t directed_edge_count() const noexcept { return targets_.size(); }
  Vertex target(std::size_t slot) const noexcept { return targets_[slot]; }
  /// Slot of the directed edge u -> v, or directed_edge_count() if absent.
  std::size_t slot(Vertex u, Vertex v) const noexcept;

  /// Edges with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  /// A copy with `extra` edges merged in. Coordinates are kept.
  Graph with_edges(std::span<const Edge> extra) const;

  const std::optional<Eigen::Matrix2Xd>& coords() const noexcept { return coords_; }
  void set_coords(Eigen::Matrix2Xd coords);

 private:
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> targets_;
  std::optional<Eigen::Matrix2Xd> coords_;
};

struct Components {
  std::vector<Vertex> label;  // component id per vertex, ids ordered by smallest member
  std::size_t count = 0;
};

Components connected_components(const Graph& g);
inline bool is_connected(const Graph& g) { return connected_components(g).count <= 1; }

/// Induced subgraph on the largest connected component (ties go to the
/// component holding the smallest vertex id), with the original id of each
/// kept vertex.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> original;
};
Subgraph largest_component(const Graph& g);

}  // namespace geocongest

#endif  // GEOCONGEST_GRAPH_HPP
