#include "geocongest/routing.hpp"

#include <algorithm>
#include <bit>

namespace geocongest {

// ---------------------------------------------------------------------------
// DistanceMatrix
// ---------------------------------------------------------------------------

DistanceMatrix DistanceMatrix::adjacency_seed(const Graph& g) {
  const std::size_t n = g.order();
  if (n >= kUnreachable) {
    throw Error(ErrorCode::PreconditionViolated,
                "hop distances are 16-bit; graphs must have fewer than 65535 vertices");
  }
  DistanceMatrix d;
  d.dist_.setConstant(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n), kUnreachable);
  d.words_ = (n + 63) / 64;
  d.bits_.assign(n * d.words_, 0);
  auto mark = [&](std::size_t u, std::size_t w, Hops h) {
    d.dist_(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(w)) = h;
    d.bits_[u * d.words_ + w / 64] |= std::uint64_t{1} << (w % 64);
    ++d.finite_count_;
  };
  for (Vertex u = 0; u < n; ++u) {
    mark(u, u, 0);
    for (Vertex w : g.neighbors(u)) mark(u, w, 1);
  }
  d.diameter_ = g.size() > 0 ? 1 : 0;
  return d;
}

double DistanceMatrix::load_factor() const noexcept {
  const double n = static_cast<double>(order());
  return n == 0.0 ? 1.0 : static_cast<double>(finite_count_) / (n * n);
}

std::size_t DistanceMatrix::bytes() const noexcept {
  return static_cast<std::size_t>(dist_.size()) * sizeof(Hops) +
         bits_.size() * sizeof(std::uint64_t);
}

// ---------------------------------------------------------------------------
// Min-plus kernel
// ---------------------------------------------------------------------------

struct MinPlusKernel {
  using Hops = DistanceMatrix::Hops;
  static constexpr Hops kInf = DistanceMatrix::kUnreachable;

  struct RowResult {
    bool changed = false;
    std::size_t gained = 0;
  };

  // Finite entries are already exact and the newest ones all equal
  // `frontier`; entries written during this step hold frontier + 1. Both
  // kernels therefore work in place and still extend paths by one hop only.

  // Pushes from frontier entries, found 64 at a time from the bitmap.
  static RowResult sparse_row(const Graph& g, std::size_t words, Hops frontier, Hops* row,
                              std::uint64_t* bits) {
    RowResult r;
    const Hops next = static_cast<Hops>(frontier + 1);
    for (std::size_t wi = 0; wi < words; ++wi) {
      std::uint64_t word = bits[wi];
      while (word != 0) {
        const std::size_t v = wi * 64 + static_cast<std::size_t>(std::countr_zero(word));
        word &= word - 1;
        if (row[v] != frontier) continue;
        for (Vertex w : g.neighbors(static_cast<Vertex>(v))) {
          if (row[w] == kInf) {
            bits[w / 64] |= std::uint64_t{1} << (w % 64);
            row[w] = next;
            ++r.gained;
          }
        }
      }
    }
    r.changed = r.gained > 0;
    return r;
  }

  // Pulls min over neighbours + 1 into every unreached entry, found from the
  // complement of the bitmap.
  static RowResult dense_row(const Graph& g, std::size_t n, std::size_t words, Hops frontier,
                             Hops* row, std::uint64_t* bits) {
    RowResult r;
    for (std::size_t wi = 0; wi < words; ++wi) {
      std::uint64_t word = ~bits[wi];
      if (wi + 1 == words && n % 64 != 0) word &= (std::uint64_t{1} << (n % 64)) - 1;
      while (word != 0) {
        const std::size_t w = wi * 64 + static_cast<std::size_t>(std::countr_zero(word));
        word &= word - 1;
        Hops best = kInf;
        for (Vertex v : g.neighbors(static_cast<Vertex>(w))) {
          if (row[v] <= frontier) best = std::min(best, row[v]);
        }
        if (best != kInf) {
          bits[wi] |= std::uint64_t{1} << (w % 64);
          row[w] = static_cast<Hops>(best + 1);
          ++r.gained;
        }
      }
    }
    r.changed = r.gained > 0;
    return r;
  }

  static MinPlusStep step(DistanceMatrix& d, const Graph& g) {
    const std::size_t n = d.order();
    if (g.order() != n) {
      throw Error(ErrorCode::DimensionMismatch, "distance matrix and graph differ in order");
    }
    const bool dense = d.load_factor() >= kDenseThreshold;
    const std::size_t words = d.words_;
    const auto frontier = static_cast<Hops>(d.load_trace_.size() + 1);

    bool changed = false;
    std::size_t gained = 0;
#pragma omp parallel for schedule(dynamic, 8) reduction(|| : changed) reduction(+ : gained)
    for (std::size_t u = 0; u < n; ++u) {
      Hops* row = d.dist_.data() + u * n;
      std::uint64_t* bits = d.bits_.data() + u * words;
      const RowResult r = dense ? dense_row(g, n, words, frontier, row, bits)
                                : sparse_row(g, words, frontier, row, bits);
      changed = changed || r.changed;
      gained += r.gained;
    }
    d.finite_count_ += gained;
    if (gained > 0) d.diameter_ = static_cast<Hops>(frontier + 1);
    const double load = d.load_factor();
    d.load_trace_.push_back(load);
    return {changed, load};
  }
};

MinPlusStep min_plus_step(DistanceMatrix& dist, const Graph& g) {
  return MinPlusKernel::step(dist, g);
}

MinPlusResult min_plus_step(const DistanceMatrix& dist, const Graph& g) {
  MinPlusResult out{dist, false, 0.0};
  const MinPlusStep s = MinPlusKernel::step(out.dist, g);
  out.changed = s.changed;
  out.load_factor = s.load_factor;
  return out;
}

DistanceMatrix apsp(const Graph& g, const ApspOptions& options) {
  DistanceMatrix d = DistanceMatrix::adjacency_seed(g);
  while (min_plus_step(d, g).changed) {
  }
  const std::size_t n = g.order();
  if (!options.allow_disconnected && d.finite_count() != n * n) {
    throw Error(ErrorCode::DisconnectedGraph,
                "graph has " + std::to_string(connected_components(g).count) + " components");
  }
  return d;
}

// ---------------------------------------------------------------------------
// Redistribution table
// ---------------------------------------------------------------------------

namespace {

void write_varint(std::vector<std::uint8_t>& out, std::uint64_t value) {
  while (value >= 0x80) {
    out.push_back(static_cast<std::uint8_t>(value | 0x80));
    value >>= 7;
  }
  out.push_back(static_cast<std::uint8_t>(value));
}

struct VectorWriter {
  std::vector<std::uint8_t> bytes;
  std::uint64_t next_w = 0;

  void push(std::uint64_t w, std::uint64_t k) {
    const std::uint64_t gap = w - next_w;
    const std::uint64_t k_field = k <= 7 ? k : 0;
    const std::uint64_t gap_field = gap <= 30 ? gap : 31;
    bytes.push_back(static_cast<std::uint8_t>((k_field << 5) | gap_field));
    if (k_field == 0) write_varint(bytes, k);
    if (gap_field == 31) write_varint(bytes, gap);
    next_w = w + 1;
  }
};

}  // namespace

RedistributionTable build_redistribution(const Graph& g, const DistanceMatrix& dist) {
  using Hops = DistanceMatrix::Hops;
  const std::size_t n = g.order();
  if (dist.order() != n) {
    throw Error(ErrorCode::DimensionMismatch, "distance matrix and graph differ in order");
  }
  RedistributionTable table;
  table.order_ = n;
  table.offsets_.reserve(g.directed_edge_count() + 1);
  table.offsets_.push_back(0);

  const Hops* base = dist.hops().data();
  std::vector<VectorWriter> writers;
  std::vector<const Hops*> rows;
  std::vector<std::size_t> closer;
  for (Vertex i = 0; i < n; ++i) {
    const auto adj = g.neighbors(i);
    writers.assign(adj.size(), {});
    rows.clear();
    for (Vertex j : adj) rows.push_back(base + static_cast<std::size_t>(j) * n);
    const Hops* own = base + static_cast<std::size_t>(i) * n;

    for (std::size_t w = 0; w < n; ++w) {
      const Hops dw = own[w];
      if (w == i || dw == DistanceMatrix::kUnreachable) continue;
      closer.clear();
      for (std::size_t s = 0; s < rows.size(); ++s) {
        if (rows[s][w] + 1 == dw) closer.push_back(s);
      }
      const std::size_t k = closer.size();
      for (std::size_t s : closer) writers[s].push(w, k);
      ++table.k_counts_[std::min(k, RedistributionTable::kMaxTrackedK)];
      table.k_sum_ += k;
      ++table.pairs_;
      table.nonzeros_ += k;
    }
    for (VectorWriter& wr : writers) {
      table.data_.insert(table.data_.end(), wr.bytes.begin(), wr.bytes.end());
      table.offsets_.push_back(table.data_.size());
    }
  }
  table.data_.shrink_to_fit();
  return table;
}

double RedistributionTable::fraction(const Graph& g, Vertex i, Vertex j, Vertex w) const {
  const std::size_t s = g.slot(i, j);
  if (s >= directed_edge_count()) return 0.0;
  double out = 0.0;
  for_each(s, [&](Vertex x, std::uint64_t k) {
    if (x == w) out = 1.0 / static_cast<double>(k);
  });
  return out;
}

double RedistributionTable::k_share(std::size_t k) const noexcept {
  if (pairs_ == 0 || k == 0) return 0.0;
  return static_cast<double>(k_counts_[std::min(k, kMaxTrackedK)]) / static_cast<double>(pairs_);
}

double RedistributionTable::mean_k() const noexcept {
  return pairs_ == 0 ? 0.0 : static_cast<double>(k_sum_) / static_cast<double>(pairs_);
}

double RedistributionTable::load_factor() const noexcept {
  const double vectors = static_cast<double>(directed_edge_count());
  if (vectors == 0.0 || order_ == 0) return 0.0;
  return static_cast<double>(nonzeros_) / (vectors * static_cast<double>(order_));
}

std::size_t RedistributionTable::bytes() const noexcept {
  return data_.size() + offsets_.size() * sizeof(std::size_t);
}

// ---------------------------------------------------------------------------
// Congestion
// ---------------------------------------------------------------------------

void summarize_flow(const Graph& g, const RedistributionTable& table, const Eigen::MatrixXd& flow,
                    CongestionReport& report) {
  report.n = g.order();
  report.m = g.size();
  report.vertex_flow = flow.colwise().sum().transpose();
  report.edges = g.edges();
  report.edge_flow.setZero(static_cast<Eigen::Index>(report.edges.size()));
  for (std::size_t e = 0; e < report.edges.size(); ++e) {
    const auto [u, v] = report.edges[e];
    double total = 0.0;
    const auto from_u = flow.col(u);
    table.for_each(g.slot(u, v), [&](Vertex w, std::uint64_t k) {
      total += from_u(w) * detail::reciprocal(k);
    });
    const auto from_v = flow.col(v);
    table.for_each(g.slot(v, u), [&](Vertex w, std::uint64_t k) {
      total += from_v(w) * detail::reciprocal(k);
    });
    report.edge_flow(static_cast<Eigen::Index>(e)) = total;
  }

  if (report.n > 0) {
    Eigen::Index arg = 0;
    report.max_vertex_flow = report.vertex_flow.maxCoeff(&arg);
    report.argmax_vertex = static_cast<Vertex>(arg);
    report.avg_vertex_flow = report.vertex_flow.mean();
  }
  if (report.m > 0) {
    report.max_edge_flow = report.edge_flow.maxCoeff();
    report.avg_edge_flow = report.edge_flow.mean();
  }
}

CongestionReport congestion(const Graph& g, const CongestionOptions& options) {
  const Components comps = connected_components(g);
  if (comps.count > 1) {
    if (!options.largest_component) {
      throw Error(ErrorCode::DisconnectedGraph,
                  "graph has " + std::to_string(comps.count) + " components");
    }
    const Subgraph sub = largest_component(g);
    CongestionReport report = congestion(sub.graph);
    report.vertex_ids = sub.original;
    for (Edge& e : report.edges) e = {sub.original[e.u], sub.original[e.v]};
    report.argmax_vertex = sub.original[report.argmax_vertex];
    return report;
  }

  const auto n = static_cast<Eigen::Index>(g.order());
  const DistanceMatrix dist = apsp(g);
  const RedistributionTable table = build_redistribution(g, dist);
  const auto demand =
      Eigen::MatrixXd::Constant(n, n, 0.5) - 0.5 * Eigen::MatrixXd::Identity(n, n);
  const FlowState state = solve_flow(g, dist, table, demand);

  CongestionReport report;
  summarize_flow(g, table, state.flow, report);
  report.diameter = dist.diameter();
  report.apsp_iterations = dist.iterations();
  report.flow_iterations = state.iterations;
  report.memory.matrix_bytes = dist.bytes();
  report.memory.redistribution_bytes = table.bytes();
  report.memory.flow_bytes = 2 * static_cast<std::size_t>(n * n) * sizeof(double);
  return report;
}

}  // namespace geocongest
