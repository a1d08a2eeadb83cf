#ifndef GEOCONGEST_DENSITY_HPP
#define GEOCONGEST_DENSITY_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "geocongest/postfix.hpp"

namespace geocongest {

using DensityParams = std::map<std::string, double, std::less<>>;

/// Radius t of the disk carrying the density: the open unit disk or the plane.
enum class DomainRadius { Unit, Infinite };

/// A rotationally symmetric density rho together with its measure-preserving
/// radial map alpha, i.e. the increasing function with 2*pi*F(alpha(x)) = pi*x^2
/// where F(y) = integral_0^y rho(s) s ds.
///
/// Built-in families carry closed forms for rho, F and alpha. Custom models
/// carry only alpha, given as a postfix program in `r`.
struct DensityModel {
  std::string name;
  DensityParams params;
  DomainRadius domain = DomainRadius::Infinite;
  std::function<double(double)> radial_map;
  std::function<double(double)> cumulative;  // F; empty for custom models
  std::function<double(double)> density;     // rho; empty for custom models
  std::optional<RadialMap> program;          // custom models only

  double alpha(double x) const { return radial_map(x); }
  bool bounded() const noexcept { return domain == DomainRadius::Unit; }
};

/// Names accepted by builtin_density.
inline constexpr std::string_view kDensityNames[] = {
    "poincare", "hyperbolic_r2", "genhyp", "cusp", "slow", "euclidean", "custom"};

/// Builds a named density family.
///
///   poincare       rho = 4 lambda / (1 - r^2)^2 on the unit disk  (param "lambda")
///   hyperbolic_r2  rho = sinh(r) / r on the plane
///   genhyp         rho = 2 r^((1-2a)/a) / (a (1 - r^(1/a))^2)     (param "a")
///   cusp           rho = lambda^2 / (1 - r)^3 on the unit disk    (param "lambda")
///   slow           rho = 1 / (r (r + 1)) on the plane
///   euclidean      rho = 1 on the plane
///   custom         alpha given directly as postfix text in `expr`
///
/// Throws MissingParam, NonPositiveParam, UnknownDensity, or the postfix
/// parse errors for custom.
DensityModel builtin_density(std::string_view name, const DensityParams& params = {},
                             std::string_view expr = {});

/// Parses the command-line form `name[:param]` or `custom:<postfix>`.
/// The single parameter is lambda for poincare/cusp and a for genhyp.
DensityModel parse_density_spec(std::string_view spec);

}  // namespace geocongest

#endif  // GEOCONGEST_DENSITY_HPP
