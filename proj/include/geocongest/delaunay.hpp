#ifndef GEOCONGEST_DELAUNAY_HPP
#define GEOCONGEST_DELAUNAY_HPP

#include <array>
#include <cstddef>
#include <vector>

#include "geocongest/graph.hpp"
#include "geocongest/pointgen.hpp"

namespace geocongest {

struct Triangulation {
  Graph graph;                                // carries the input coordinates
  std::vector<std::array<Vertex, 3>> triangles;  // counter-clockwise
  bool degenerate = false;                    // collinear input, graph is a path
  std::size_t duplicates = 0;                 // repeated points left isolated
};

/// Euclidean Delaunay triangulation by randomized-walk Bowyer-Watson
/// insertion in Hilbert order, with exact orientation and incircle tests.
///
/// Co-circular quadrilaterals take the diagonal incident to the lowest vertex
/// index. Collinear input yields the path through the points in order along
/// the line, flagged `degenerate`. Throws DegenerateInput for fewer than two
/// points.
Triangulation triangulate(const Points& points);
inline Triangulation triangulate(const PointSet& set) { return triangulate(set.points); }

}  // namespace geocongest

#endif  // GEOCONGEST_DELAUNAY_HPP
