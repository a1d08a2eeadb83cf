#include "geocongest/delaunay.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "geocongest/error.hpp"
#include "geocongest/predicates.hpp"
#include "geocongest/rng.hpp"

namespace geocongest {

namespace {

using predicates::incircle;
using predicates::orient2d;

constexpr Vertex kInfinite = ~Vertex{0};
constexpr std::uint32_t kNone = ~std::uint32_t{0};

inline int next(int i) { return i == 2 ? 0 : i + 1; }
inline int prev(int i) { return i == 0 ? 2 : i - 1; }

struct Tri {
  std::array<Vertex, 3> v{};
  std::array<std::uint32_t, 3> nbr{kNone, kNone, kNone};  // nbr[i] is across the edge opposite v[i]
  bool alive = true;

  bool ghost() const { return v[0] == kInfinite || v[1] == kInfinite || v[2] == kInfinite; }
  int index_of(Vertex x) const { return v[0] == x ? 0 : (v[1] == x ? 1 : 2); }
  int index_of_nbr(std::uint32_t t) const { return nbr[0] == t ? 0 : (nbr[1] == t ? 1 : 2); }
};

std::uint64_t hilbert_key(std::uint32_t x, std::uint32_t y, int order) {
  std::uint64_t d = 0;
  for (std::uint32_t s = 1u << (order - 1); s > 0; s >>= 1) {
    const std::uint32_t rx = (x & s) ? 1 : 0;
    const std::uint32_t ry = (y & s) ? 1 : 0;
    d += static_cast<std::uint64_t>(s) * s * ((3 * rx) ^ ry);
    if (ry == 0) {
      if (rx == 1) {
        x = s - 1 - x;
        y = s - 1 - y;
      }
      std::swap(x, y);
    }
  }
  return d;
}

std::vector<Vertex> hilbert_order(const Points& pts) {
  constexpr int kOrder = 16;
  const Eigen::Vector2d lo = pts.rowwise().minCoeff();
  const Eigen::Vector2d hi = pts.rowwise().maxCoeff();
  const double span = std::max((hi - lo).maxCoeff(), 1e-300);
  const double scale = ((1u << kOrder) - 1) / span;

  const auto n = static_cast<std::size_t>(pts.cols());
  std::vector<std::uint64_t> keys(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Eigen::Vector2d q = (pts.col(static_cast<Eigen::Index>(i)) - lo) * scale;
    keys[i] = hilbert_key(static_cast<std::uint32_t>(q.x()), static_cast<std::uint32_t>(q.y()),
                          kOrder);
  }
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return keys[a] < keys[b]; });
  return order;
}

class Builder {
 public:
  explicit Builder(const Points& pts) : pts_(pts), rng_(0x5eed) {}

  // Returns false when every point is collinear (or coincident).
  bool run(std::size_t& duplicates);
  void break_cocircular_ties();
  std::vector<std::array<Vertex, 3>> finite_triangles() const;

 private:
  Eigen::Vector2d at(Vertex v) const { return pts_.col(static_cast<Eigen::Index>(v)); }
  bool same(Vertex a, Vertex b) const { return at(a) == at(b); }

  bool in_conflict(const Tri& t, Vertex p) const;
  // Returns a triangle in conflict with p, or kNone when p duplicates a vertex.
  std::uint32_t locate(Vertex p);
  void insert(Vertex p, std::uint32_t start);
  std::uint32_t make(Vertex a, Vertex b, Vertex c);
  void replace_nbr(std::uint32_t t, std::uint32_t from, std::uint32_t to) {
    Tri& x = tris_[t];
    x.nbr[x.index_of_nbr(from)] = to;
  }

  const Points& pts_;
  Rng rng_;
  std::vector<Tri> tris_;
  std::vector<std::uint32_t> free_;
  std::uint32_t last_ = 0;

  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
  std::vector<std::uint32_t> cavity_;
  struct Boundary {
    Vertex a, b;
    std::uint32_t outside;
  };
  std::vector<Boundary> boundary_;
};

std::uint32_t Builder::make(Vertex a, Vertex b, Vertex c) {
  std::uint32_t id;
  if (!free_.empty()) {
    id = free_.back();
    free_.pop_back();
    tris_[id] = Tri{};
  } else {
    id = static_cast<std::uint32_t>(tris_.size());
    tris_.emplace_back();
    stamp_.push_back(0);
  }
  tris_[id].v = {a, b, c};
  return id;
}

bool Builder::in_conflict(const Tri& t, Vertex p) const {
  if (!t.ghost()) return incircle(at(t.v[0]), at(t.v[1]), at(t.v[2]), at(p)) > 0;
  const int k = t.index_of(kInfinite);
  const Eigen::Vector2d a = at(t.v[next(k)]);
  const Eigen::Vector2d b = at(t.v[prev(k)]);
  const Eigen::Vector2d q = at(p);
  const int o = orient2d(a, b, q);
  if (o != 0) return o > 0;
  // On the hull line: in conflict only strictly inside the segment.
  return (q - a).dot(b - a) > 0.0 && (q - b).dot(a - b) > 0.0;
}

std::uint32_t Builder::locate(Vertex p) {
  std::uint32_t t = last_;
  const Eigen::Vector2d q = at(p);
  for (std::size_t steps = 0;; ++steps) {
    const Tri& tri = tris_[t];
    const int start = static_cast<int>(rng_.below(3));
    bool moved = false;
    for (int j = 0; j < 3; ++j) {
      const int i = (start + j) % 3;
      if (orient2d(at(tri.v[next(i)]), at(tri.v[prev(i)]), q) < 0) {
        t = tri.nbr[i];
        moved = true;
        break;
      }
    }
    if (!moved) break;
    if (tris_[t].ghost()) return t;
    if (steps > 4 * tris_.size() + 64) {
      throw Error(ErrorCode::NonConvergence, "point location walk did not terminate");
    }
  }
  const Tri& tri = tris_[t];
  for (Vertex v : tri.v) {
    if (same(v, p)) return kNone;
  }
  return t;
}

void Builder::insert(Vertex p, std::uint32_t start) {
  ++epoch_;
  cavity_.clear();
  boundary_.clear();
  cavity_.push_back(start);
  stamp_[start] = epoch_;
  for (std::size_t head = 0; head < cavity_.size(); ++head) {
    const std::uint32_t t = cavity_[head];
    for (int i = 0; i < 3; ++i) {
      const std::uint32_t u = tris_[t].nbr[i];
      if (stamp_[u] == epoch_) continue;
      if (in_conflict(tris_[u], p)) {
        stamp_[u] = epoch_;
        cavity_.push_back(u);
      } else {
        boundary_.push_back({tris_[t].v[next(i)], tris_[t].v[prev(i)], u});
      }
    }
  }

  for (std::uint32_t t : cavity_) {
    tris_[t].alive = false;
    free_.push_back(t);
  }

  // Fan the cavity boundary to p. Triangle (a, b, p) links to the new
  // triangle starting at b across (b, p) and to the one ending at a across (p, a).
  std::vector<std::pair<Vertex, std::uint32_t>> by_start;
  by_start.reserve(boundary_.size());
  std::vector<std::uint32_t> created;
  created.reserve(boundary_.size());
  for (const Boundary& e : boundary_) {
    const std::uint32_t t = make(e.a, e.b, p);
    Tri& outside = tris_[e.outside];
    for (int i = 0; i < 3; ++i) {
      if (outside.v[next(i)] == e.b && outside.v[prev(i)] == e.a) {
        outside.nbr[i] = t;
        break;
      }
    }
    tris_[t].nbr[2] = e.outside;
    by_start.emplace_back(e.a, t);
    created.push_back(t);
  }
  auto starting_at = [&](Vertex v) {
    for (const auto& [s, t] : by_start) {
      if (s == v) return t;
    }
    throw Error(ErrorCode::NonConvergence, "cavity boundary is not a closed loop");
  };
  for (std::uint32_t t : created) {
    Tri& tri = tris_[t];
    const std::uint32_t after = starting_at(tri.v[1]);
    tri.nbr[0] = after;
    tris_[after].nbr[1] = t;
    if (!tri.ghost()) last_ = t;
  }
}

bool Builder::run(std::size_t& duplicates) {
  const auto n = static_cast<std::size_t>(pts_.cols());
  const std::vector<Vertex> order = hilbert_order(pts_);

  // Seed triangle: first point, first distinct point, first non-collinear point.
  std::size_t i1 = 1;
  while (i1 < n && same(order[i1], order[0])) ++i1;
  if (i1 == n) return false;
  std::size_t i2 = i1 + 1;
  while (i2 < n && orient2d(at(order[0]), at(order[i1]), at(order[i2])) == 0) ++i2;
  if (i2 == n) return false;

  Vertex a = order[0], b = order[i1], c = order[i2];
  if (orient2d(at(a), at(b), at(c)) < 0) std::swap(b, c);
  const std::uint32_t t0 = make(a, b, c);
  const std::uint32_t gab = make(b, a, kInfinite);
  const std::uint32_t gbc = make(c, b, kInfinite);
  const std::uint32_t gca = make(a, c, kInfinite);
  tris_[t0].nbr = {gbc, gca, gab};
  tris_[gab].nbr = {gca, gbc, t0};
  tris_[gbc].nbr = {gab, gca, t0};
  tris_[gca].nbr = {gbc, gab, t0};
  last_ = t0;

  duplicates = 0;
  for (std::size_t k = 1; k < n; ++k) {
    if (k == i1 || k == i2) continue;
    const Vertex p = order[k];
    const std::uint32_t start = locate(p);
    if (start == kNone) {
      ++duplicates;
      continue;
    }
    insert(p, start);
  }
  return true;
}

void Builder::break_cocircular_ties() {
  // Each flip lowers the sum over edges of the smaller endpoint, so this ends.
  bool flipped = true;
  while (flipped) {
    flipped = false;
    for (std::uint32_t t1 = 0; t1 < tris_.size(); ++t1) {
      if (!tris_[t1].alive || tris_[t1].ghost()) continue;
      for (int i1 = 0; i1 < 3; ++i1) {
        const std::uint32_t t2 = tris_[t1].nbr[i1];
        if (tris_[t2].ghost()) continue;
        const Vertex c = tris_[t1].v[i1];
        const Vertex a = tris_[t1].v[next(i1)];
        const Vertex b = tris_[t1].v[prev(i1)];
        const int i2 = tris_[t2].index_of_nbr(t1);
        const Vertex d = tris_[t2].v[i2];
        if (std::min(c, d) >= std::min(a, b)) continue;
        if (incircle(at(a), at(b), at(c), at(d)) != 0) continue;

        const std::uint32_t n_bc = tris_[t1].nbr[next(i1)];
        const std::uint32_t n_ca = tris_[t1].nbr[prev(i1)];
        const std::uint32_t n_ad = tris_[t2].nbr[next(i2)];
        const std::uint32_t n_db = tris_[t2].nbr[prev(i2)];
        tris_[t1].v = {c, a, d};
        tris_[t1].nbr = {n_ad, t2, n_ca};
        tris_[t2].v = {d, b, c};
        tris_[t2].nbr = {n_bc, t1, n_db};
        replace_nbr(n_ad, t2, t1);
        replace_nbr(n_bc, t1, t2);
        flipped = true;
        break;
      }
    }
  }
}

std::vector<std::array<Vertex, 3>> Builder::finite_triangles() const {
  std::vector<std::array<Vertex, 3>> out;
  for (const Tri& t : tris_) {
    if (t.alive && !t.ghost()) out.push_back(t.v);
  }
  return out;
}

}  // namespace

Triangulation triangulate(const Points& points) {
  const auto n = static_cast<std::size_t>(points.cols());
  if (n < 2) throw Error(ErrorCode::DegenerateInput, "need at least two points");

  Triangulation out;
  Builder builder(points);
  if (!builder.run(out.duplicates)) {
    // Collinear or coincident: lexicographic order is the order along the line.
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), Vertex{0});
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
      const auto pa = points.col(a), pb = points.col(b);
      return pa.x() < pb.x() || (pa.x() == pb.x() && pa.y() < pb.y());
    });
    std::vector<Edge> path;
    for (std::size_t i = 0; i + 1 < n; ++i) path.push_back({order[i], order[i + 1]});
    out.graph = Graph::from_edges(n, path);
    out.graph.set_coords(points);
    out.degenerate = true;
    return out;
  }
  builder.break_cocircular_ties();
  out.triangles = builder.finite_triangles();

  std::vector<Edge> edges;
  edges.reserve(3 * out.triangles.size());
  for (const auto& t : out.triangles) {
    for (int i = 0; i < 3; ++i) edges.push_back({t[i], t[next(i)]});
  }
  out.graph = Graph::from_edges(n, edges);
  out.graph.set_coords(points);
  return out;
}

}  // namespace geocongest
