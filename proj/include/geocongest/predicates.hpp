#ifndef GEOCONGEST_PREDICATES_HPP
#define GEOCONGEST_PREDICATES_HPP

#include <Eigen/Core>

namespace geocongest::predicates {

/// Sign of the orientation determinant of (a, b, c): +1 counter-clockwise,
/// -1 clockwise, 0 collinear. Exact for all finite double inputs.
int orient2d(const Eigen::Vector2d& a, const Eigen::Vector2d& b, const Eigen::Vector2d& c);

/// +1 if d lies strictly inside the circle through the counter-clockwise
/// triangle (a, b, c), -1 if strictly outside, 0 if co-circular. Exact.
int incircle(const Eigen::Vector2d& a, const Eigen::Vector2d& b, const Eigen::Vector2d& c,
             const Eigen::Vector2d& d);

}  // namespace geocongest::predicates

#endif  // GEOCONGEST_PREDICATES_HPP
