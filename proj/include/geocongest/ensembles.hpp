#ifndef GEOCONGEST_ENSEMBLES_HPP
#define GEOCONGEST_ENSEMBLES_HPP

#include <cstdint>
#include <optional>

#include "geocongest/graph.hpp"
#include "geocongest/pointgen.hpp"

namespace geocongest {

/// Erdos-Renyi G(n, p); p defaults to 2 ln(n) / n.
Graph gen_er(std::size_t n, std::optional<double> p, std::uint64_t seed);

/// Random geometric graph on n uniform points in the unit square; radius
/// defaults to sqrt(2 ln(n) / n). Coordinates are kept on the graph.
Graph gen_rgg(std::size_t n, std::optional<double> radius, std::uint64_t seed);

/// Geometric graph on given points: edge iff Euclidean distance <= radius.
Graph rgg_from_points(const Points& points, double radius);

/// Union of {v, pi_i(v)} over k/2 uniform permutations, with loops dropped and
/// parallel edges merged. Throws OddDegree, PreconditionViolated (n <= k).
Graph gen_random_regular(std::size_t n, std::size_t k, std::uint64_t seed);

/// Complete rooted tree: the root (vertex 0) has k children, every other
/// internal vertex k - 1, all leaves at `depth`. Vertices are numbered in
/// breadth-first order.
Graph gen_bethe(std::size_t k, std::size_t depth);

/// Vertex count of gen_bethe(k, depth).
std::size_t bethe_order(std::size_t k, std::size_t depth);

Graph gen_complete(std::size_t n);

/// Adds a random maximal matching: repeatedly draw a uniform pair from the
/// candidate pool, add the edge when absent, and retire both vertices either
/// way, until at most one candidate is left. Generators draw from stream 0;
/// pass a different stream to reuse a generator's seed independently.
Graph add_random_matching(const Graph& g, std::uint64_t seed, std::uint64_t stream = 0);

}  // namespace geocongest

#endif  // GEOCONGEST_ENSEMBLES_HPP
