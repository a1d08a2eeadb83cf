#ifndef GEOCONGEST_ROUTING_HPP
#define GEOCONGEST_ROUTING_HPP

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "geocongest/error.hpp"
#include "geocongest/graph.hpp"

namespace geocongest {

// ---------------------------------------------------------------------------
// All-pairs hop distances
// ---------------------------------------------------------------------------

/// Hop-count distance matrix with a bitmap of finite entries.
///
/// Entries are 16-bit; kUnreachable marks an infinite distance. Rows are
/// sources. The bitmap is kept in sync by every mutating operation and lets
/// the min-plus kernel skip entries 64 at a time.
///
/// A matrix only arises from the adjacency seed followed by min-plus steps,
/// so after p steps every finite entry is the exact distance and the
/// unreached ones are exactly those farther than p + 1 hops.
class DistanceMatrix {
 public:
  using Hops = std::uint16_t;
  using Storage = Eigen::Matrix<Hops, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  static constexpr Hops kUnreachable = 0xFFFF;

  DistanceMatrix() = default;

  /// 0 on the diagonal, 1 on edges, unreachable elsewhere.
  static DistanceMatrix adjacency_seed(const Graph& g);

  std::size_t order() const noexcept { return static_cast<std::size_t>(dist_.rows()); }
  Hops operator()(std::size_t u, std::size_t w) const noexcept {
    return dist_(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(w));
  }
  bool finite(std::size_t u, std::size_t w) const noexcept {
    return (bits_[u * words_ + w / 64] >> (w % 64)) & 1u;
  }
  const Storage& hops() const noexcept { return dist_; }

  std::size_t finite_count() const noexcept { return finite_count_; }
  double load_factor() const noexcept;
  /// Largest finite entry.
  Hops diameter() const noexcept { return diameter_; }

  /// Load factor after each min-plus step, including the final unproductive one.
  std::span<const double> load_trace() const noexcept { return load_trace_; }
  std::size_t iterations() const noexcept { return load_trace_.size(); }

  /// Bytes held by the distance entries and the bitmap.
  std::size_t bytes() const noexcept;

 private:
  friend struct MinPlusKernel;

  Storage dist_;
  std::vector<std::uint64_t> bits_;
  std::size_t words_ = 0;
  std::size_t finite_count_ = 0;
  Hops diameter_ = 0;
  std::vector<double> load_trace_;
};

/// Load factor at or above which min_plus_step scans rows densely.
inline constexpr double kDenseThreshold = 0.5;

struct MinPlusStep {
  bool changed = false;
  double load_factor = 0.0;
};

/// One min-plus product with the adjacency matrix, in place:
/// D'[u][w] = min(D[u][w], min_{v in adj(w)} D[u][v] + 1).
/// Each step extends every known path by exactly one hop: only unreached
/// entries change, and only from neighbours finite before the step. Throws
/// DimensionMismatch.
MinPlusStep min_plus_step(DistanceMatrix& dist, const Graph& g);

/// Value-returning form of min_plus_step.
struct MinPlusResult {
  DistanceMatrix dist;
  bool changed = false;
  double load_factor = 0.0;
};
MinPlusResult min_plus_step(const DistanceMatrix& dist, const Graph& g);

struct ApspOptions {
  bool allow_disconnected = false;
};

/// Iterates min_plus_step from the adjacency seed until nothing changes.
/// Throws DisconnectedGraph (with the component count) unless allowed.
DistanceMatrix apsp(const Graph& g, const ApspOptions& options = {});

// ---------------------------------------------------------------------------
// Redistribution vectors
// ---------------------------------------------------------------------------

/// For each directed edge i -> j, the sparse vector over destinations w of the
/// fraction of i's outbound w-traffic sent to j. Non-zero entries are 1/k
/// where k counts the neighbours of i one hop closer to w.
///
/// Each vector is a byte stream of (gap, k) pairs, gap being the number of
/// zero entries since the previous non-zero. The common case packs into one
/// byte: k in the high 3 bits (1..7), gap in the low 5 bits (0..30). A zero
/// k field or a gap field of 31 means the value follows as a LEB128 varint.
class RedistributionTable {
 public:
  RedistributionTable() = default;

  std::size_t order() const noexcept { return order_; }
  std::size_t directed_edge_count() const noexcept {
    return offsets_.empty() ? 0 : offsets_.size() - 1;
  }

  /// Calls f(w, k) for every non-zero entry of the vector on directed-edge
  /// slot `slot` (see Graph::slot), in increasing w.
  template <typename F>
  void for_each(std::size_t slot, F&& f) const;

  /// r_{ij}[w] for the directed edge i -> j; 0 if the edge is absent.
  double fraction(const Graph& g, Vertex i, Vertex j, Vertex w) const;

  /// Indexed by k: the number of (vertex, destination) pairs whose next-hop count is k, for
  /// k = 1..kMaxTrackedK; the last bin collects k >= kMaxTrackedK.
  static constexpr std::size_t kMaxTrackedK = 8;
  const std::array<std::uint64_t, kMaxTrackedK + 1>& k_counts() const noexcept {
    return k_counts_;
  }
  /// Fraction of (vertex, destination) pairs with next-hop count k.
  double k_share(std::size_t k) const noexcept;
  double mean_k() const noexcept;
  std::size_t nonzeros() const noexcept { return nonzeros_; }
  /// Mean fraction of non-zero entries per vector.
  double load_factor() const noexcept;
  std::size_t bytes() const noexcept;

 private:
  friend RedistributionTable build_redistribution(const Graph&, const DistanceMatrix&);

  std::size_t order_ = 0;
  std::vector<std::uint8_t> data_;
  std::vector<std::size_t> offsets_;
  std::array<std::uint64_t, kMaxTrackedK + 1> k_counts_{};
  std::uint64_t k_sum_ = 0;
  std::uint64_t pairs_ = 0;
  std::size_t nonzeros_ = 0;
};

/// Requires dist = apsp(g). Throws DimensionMismatch.
RedistributionTable build_redistribution(const Graph& g, const DistanceMatrix& dist);

// ---------------------------------------------------------------------------
// Flow fixed point
// ---------------------------------------------------------------------------

/// flow(w, v) is the flow present at v destined for w, counting flow that
/// originates at v and, in column w, flow that has arrived.
struct FlowState {
  Eigen::MatrixXd flow;
  std::size_t iterations = 0;
  double last_change = 0.0;
};

struct FlowOptions {
  double tolerance = 1e-12;
};

/// Applies the redistribution operator once: out = demand + omega(flow).
/// Column j of the result is demand.col(j) + sum_{i in adj(j)} diag(r_ij) flow.col(i).
template <typename Demand>
void apply_redistribution(const Graph& g, const RedistributionTable& table,
                          const Eigen::MatrixBase<Demand>& demand, const Eigen::MatrixXd& flow,
                          Eigen::MatrixXd& out);

/// Iterates flow <- demand + omega(flow) from flow = demand until the largest
/// entrywise change is <= tolerance or diameter + 1 updates were made.
///
/// demand(w, v) is the traffic originating at v bound for w; it may be any
/// Eigen expression, so uniform demands need no storage. Throws
/// PreconditionViolated for negative or self-addressed demand,
/// DimensionMismatch, and NonConvergence if the operator fails to vanish
/// past the diameter.
template <typename Demand>
FlowState solve_flow(const Graph& g, const DistanceMatrix& dist, const RedistributionTable& table,
                     const Eigen::MatrixBase<Demand>& demand, const FlowOptions& options = {});

// ---------------------------------------------------------------------------
// Congestion
// ---------------------------------------------------------------------------

struct MemoryTelemetry {
  std::size_t matrix_bytes = 0;
  std::size_t redistribution_bytes = 0;
  std::size_t flow_bytes = 0;
};

struct CongestionReport {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t diameter = 0;
  Eigen::VectorXd vertex_flow;  // T(v)
  std::vector<Edge> edges;      // same order as edge_flow
  Eigen::VectorXd edge_flow;
  double max_vertex_flow = 0.0;
  Vertex argmax_vertex = 0;
  double max_edge_flow = 0.0;
  double avg_vertex_flow = 0.0;
  double avg_edge_flow = 0.0;
  std::size_t apsp_iterations = 0;
  std::size_t flow_iterations = 0;
  MemoryTelemetry memory;
  /// Original vertex ids when the report covers only the largest component.
  std::vector<Vertex> vertex_ids;
};

struct CongestionOptions {
  bool largest_component = false;
};

/// Routes a unit of traffic between every unordered pair, half in each
/// direction, along hop-count geodesics with locally-equal splitting.
/// Throws DisconnectedGraph unless options.largest_component is set.
CongestionReport congestion(const Graph& g, const CongestionOptions& options = {});

/// Vertex and edge totals from a solved flow.
void summarize_flow(const Graph& g, const RedistributionTable& table, const Eigen::MatrixXd& flow,
                    CongestionReport& report);

// ---------------------------------------------------------------------------
// Template definitions
// ---------------------------------------------------------------------------

namespace detail {

inline std::uint64_t read_varint(const std::uint8_t*& p) {
  std::uint64_t value = 0;
  int shift = 0;
  while (true) {
    const std::uint8_t byte = *p++;
    value |= static_cast<std::uint64_t>(byte & 0x7F) << shift;
    if ((byte & 0x80) == 0) return value;
    shift += 7;
  }
}

inline const std::array<double, 256>& reciprocals() {
  static const std::array<double, 256> table = [] {
    std::array<double, 256> t{};
    for (std::size_t k = 1; k < t.size(); ++k) t[k] = 1.0 / static_cast<double>(k);
    return t;
  }();
  return table;
}

inline double reciprocal(std::uint64_t k) {
  return k < 256 ? reciprocals()[k] : 1.0 / static_cast<double>(k);
}

}  // namespace detail

template <typename F>
void RedistributionTable::for_each(std::size_t slot, F&& f) const {
  const std::uint8_t* p = data_.data() + offsets_[slot];
  const std::uint8_t* const end = data_.data() + offsets_[slot + 1];
  std::uint64_t w = 0;
  while (p < end) {
    const std::uint8_t head = *p++;
    std::uint64_t k = head >> 5;
    std::uint64_t gap = head & 0x1F;
    if (k == 0) k = detail::read_varint(p);
    if (gap == 31) gap = detail::read_varint(p);
    w += gap;
    f(static_cast<Vertex>(w), k);
    ++w;
  }
}

template <typename Demand>
void apply_redistribution(const Graph& g, const RedistributionTable& table,
                          const Eigen::MatrixBase<Demand>& demand, const Eigen::MatrixXd& flow,
                          Eigen::MatrixXd& out) {
  const auto n = static_cast<Eigen::Index>(g.order());
  out.resize(n, n);
#pragma omp parallel for schedule(dynamic, 16)
  for (Eigen::Index j = 0; j < n; ++j) {
    auto target = out.col(j);
    target = demand.col(j);
    for (Vertex i : g.neighbors(static_cast<Vertex>(j))) {
      const auto source = flow.col(i);
      table.for_each(g.slot(i, static_cast<Vertex>(j)), [&](Vertex w, std::uint64_t k) {
        target(w) += source(w) * detail::reciprocal(k);
      });
    }
  }
}

template <typename Demand>
FlowState solve_flow(const Graph& g, const DistanceMatrix& dist, const RedistributionTable& table,
                     const Eigen::MatrixBase<Demand>& demand, const FlowOptions& options) {
  const auto n = static_cast<Eigen::Index>(g.order());
  if (dist.order() != g.order() || table.order() != g.order() || demand.rows() != n ||
      demand.cols() != n) {
    throw Error(ErrorCode::DimensionMismatch, "graph, distances, table and demand disagree in size");
  }

  FlowState state;
  state.flow = demand;
  if ((state.flow.array() < 0.0).any()) {
    throw Error(ErrorCode::PreconditionViolated, "demand must be non-negative");
  }
  if (n > 0 && state.flow.diagonal().cwiseAbs().maxCoeff() != 0.0) {
    throw Error(ErrorCode::PreconditionViolated, "demand from a vertex to itself must be zero");
  }

  const std::size_t limit = static_cast<std::size_t>(dist.diameter()) + 1;
  Eigen::MatrixXd next;
  while (true) {
    apply_redistribution(g, table, demand, state.flow, next);
    state.last_change = n == 0 ? 0.0 : (next - state.flow).cwiseAbs().maxCoeff();
    state.flow.swap(next);
    ++state.iterations;
    if (state.last_change <= options.tolerance) break;
    if (state.iterations >= limit) {
      throw Error(ErrorCode::NonConvergence,
                  "flow still changing by " + std::to_string(state.last_change) + " after " +
                      std::to_string(state.iterations) + " iterations");
    }
  }
  return state;
}

}  // namespace geocongest

#endif  // GEOCONGEST_ROUTING_HPP
