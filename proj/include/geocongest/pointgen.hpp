#ifndef GEOCONGEST_POINTGEN_HPP
#define GEOCONGEST_POINTGEN_HPP

#include <cstdint>

#include <Eigen/Core>

#include "geocongest/density.hpp"
#include "geocongest/rng.hpp"

namespace geocongest {

/// Planar points stored column-wise: points.col(i) = (x_i, y_i).
using Points = Eigen::Matrix2Xd;

/// One realization of the Poisson process with intensity rho.
struct PointSet {
  Points points;
  std::uint64_t seed = 0;
  DensityModel model;

  Eigen::Index size() const noexcept { return points.cols(); }
};

/// Draws a Poisson(rate) variate. rate == 0 always yields 0.
std::uint64_t sample_poisson_count(double rate, Rng& rng);

/// Samples N ~ Poisson(target_count) points uniformly in the Euclidean disk of
/// radius sqrt(target_count / pi), then pushes each through
/// r e^{i theta} -> alpha(r) e^{i theta}.
///
/// Throws EmptyRealization when N = 0.
PointSet sample_points(const DensityModel& model, std::uint64_t target_count, std::uint64_t seed,
                       std::uint64_t stream = 0);

/// Index of the point nearest the origin (the root used by the radial
/// construction when one is needed).
Eigen::Index nearest_to_origin(const Points& points);

}  // namespace geocongest

#endif  // GEOCONGEST_POINTGEN_HPP
