#include "geocongest/predicates.hpp"

#include <algorithm>
#include <array>
#include <climits>
#include <cmath>
#include <limits>

#include <boost/multiprecision/cpp_int.hpp>

namespace geocongest::predicates {

namespace {

using boost::multiprecision::cpp_int;

constexpr double kEps = std::numeric_limits<double>::epsilon() / 2;  // 2^-53
constexpr double kOrientBound = (3.0 + 16.0 * kEps) * kEps;
constexpr double kIncircleBound = (10.0 + 96.0 * kEps) * kEps;

// Converts doubles to integers sharing one power-of-two scale. Both
// determinants are homogeneous in the coordinates, so the sign survives.
template <std::size_t N>
std::array<cpp_int, N> to_scaled_integers(const std::array<double, N>& values) {
  int min_exp = INT_MAX;
  for (double v : values) {
    if (v == 0.0) continue;
    int e = 0;
    std::frexp(v, &e);
    min_exp = std::min(min_exp, e - std::numeric_limits<double>::digits);
  }
  std::array<cpp_int, N> out;
  if (min_exp == INT_MAX) return out;
  for (std::size_t i = 0; i < N; ++i) {
    const double v = values[i];
    if (v == 0.0) continue;
    int e = 0;
    const double frac = std::frexp(v, &e);
    const auto mantissa =
        static_cast<long long>(std::ldexp(frac, std::numeric_limits<double>::digits));
    cpp_int m = mantissa;
    out[i] = m << (e - std::numeric_limits<double>::digits - min_exp);
  }
  return out;
}

int sign_of(const cpp_int& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

int orient_exact(const Eigen::Vector2d& a, const Eigen::Vector2d& b, const Eigen::Vector2d& c) {
  const auto z = to_scaled_integers<6>({a.x(), a.y(), b.x(), b.y(), c.x(), c.y()});
  const cpp_int acx = z[0] - z[4], acy = z[1] - z[5];
  const cpp_int bcx = z[2] - z[4], bcy = z[3] - z[5];
  return sign_of(acx * bcy - acy * bcx);
}

int incircle_exact(const Eigen::Vector2d& a, const Eigen::Vector2d& b, const Eigen::Vector2d& c,
                   const Eigen::Vector2d& d) {
  const auto z = to_scaled_integers<8>({a.x(), a.y(), b.x(), b.y(), c.x(), c.y(), d.x(), d.y()});
  const cpp_int adx = z[0] - z[6], ady = z[1] - z[7];
  const cpp_int bdx = z[2] - z[6], bdy = z[3] - z[7];
  const cpp_int cdx = z[4] - z[6], cdy = z[5] - z[7];
  const cpp_int alift = adx * adx + ady * ady;
  const cpp_int blift = bdx * bdx + bdy * bdy;
  const cpp_int clift = cdx * cdx + cdy * cdy;
  const cpp_int det = alift * (bdx * cdy - cdx * bdy) + blift * (cdx * ady - adx * cdy) +
                      clift * (adx * bdy - bdx * ady);
  return sign_of(det);
}

}  // namespace

int orient2d(const Eigen::Vector2d& a, const Eigen::Vector2d& b, const Eigen::Vector2d& c) {
  const double left = (a.x() - c.x()) * (b.y() - c.y());
  const double right = (a.y() - c.y()) * (b.x() - c.x());
  const double det = left - right;
  const double bound = kOrientBound * (std::abs(left) + std::abs(right));
  if (det > bound) return 1;
  if (-det > bound) return -1;
  return orient_exact(a, b, c);
}

int incircle(const Eigen::Vector2d& a, const Eigen::Vector2d& b, const Eigen::Vector2d& c,
             const Eigen::Vector2d& d) {
  const double adx = a.x() - d.x(), ady = a.y() - d.y();
  const double bdx = b.x() - d.x(), bdy = b.y() - d.y();
  const double cdx = c.x() - d.x(), cdy = c.y() - d.y();

  const double bdxcdy = bdx * cdy, cdxbdy = cdx * bdy;
  const double cdxady = cdx * ady, adxcdy = adx * cdy;
  const double adxbdy = adx * bdy, bdxady = bdx * ady;
  const double alift = adx * adx + ady * ady;
  const double blift = bdx * bdx + bdy * bdy;
  const double clift = cdx * cdx + cdy * cdy;

  const double det = alift * (bdxcdy - cdxbdy) + blift * (cdxady - adxcdy) +
                     clift * (adxbdy - bdxady);
  const double permanent = (std::abs(bdxcdy) + std::abs(cdxbdy)) * alift +
                           (std::abs(cdxady) + std::abs(adxcdy)) * blift +
                           (std::abs(adxbdy) + std::abs(bdxady)) * clift;
  const double bound = kIncircleBound * permanent;
  if (det > bound) return 1;
  if (-det > bound) return -1;
  return incircle_exact(a, b, c, d);
}

}  // namespace geocongest::predicates
