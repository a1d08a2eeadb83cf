#include "geocongest/pointgen.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace geocongest {

std::uint64_t sample_poisson_count(double rate, Rng& rng) {
  if (!(rate >= 0.0)) throw Error(ErrorCode::PreconditionViolated, "Poisson rate must be >= 0");
  if (rate == 0.0) return 0;
  std::poisson_distribution<std::uint64_t> dist(rate);
  return dist(rng.engine());
}

PointSet sample_points(const DensityModel& model, std::uint64_t target_count, std::uint64_t seed,
                       std::uint64_t stream) {
  if (target_count == 0) {
    throw Error(ErrorCode::PreconditionViolated, "target_count must be >= 1");
  }
  Rng rng(seed, stream);
  const std::uint64_t count = sample_poisson_count(static_cast<double>(target_count), rng);
  if (count == 0) throw Error(ErrorCode::EmptyRealization, "Poisson draw produced no points");

  const double source_radius = std::sqrt(static_cast<double>(target_count) / std::numbers::pi);
  PointSet out{Points(2, static_cast<Eigen::Index>(count)), seed, model};
  for (Eigen::Index i = 0; i < out.points.cols(); ++i) {
    const double r = source_radius * std::sqrt(rng.uniform());
    const double theta = 2.0 * std::numbers::pi * rng.uniform();
    const double mapped = model.alpha(r);
    out.points.col(i) << mapped * std::cos(theta), mapped * std::sin(theta);
  }
  return out;
}

Eigen::Index nearest_to_origin(const Points& points) {
  Eigen::Index best = 0;
  if (points.cols() == 0) return best;
  points.colwise().squaredNorm().minCoeff(&best);
  return best;
}

}  // namespace geocongest
