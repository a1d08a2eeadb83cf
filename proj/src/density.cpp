#include "geocongest/density.hpp"

#include <charconv>
#include <cmath>

namespace geocongest {

namespace {

double require_positive(const DensityParams& params, std::string_view family,
                        std::string_view key) {
  const auto it = params.find(key);
  if (it == params.end()) {
    throw Error(ErrorCode::MissingParam,
                std::string(family) + " requires parameter '" + std::string(key) + "'");
  }
  if (!(it->second > 0.0) || !std::isfinite(it->second)) {
    throw Error(ErrorCode::NonPositiveParam,
                std::string(family) + " parameter '" + std::string(key) + "' must be > 0");
  }
  return it->second;
}

// acosh(1 + u) without the cancellation in forming 1 + u for small u.
double acosh1p(double u) { return std::log1p(u + std::sqrt(u * (u + 2.0))); }

// cosh(y) - 1 = 2 sinh^2(y/2).
double coshm1(double y) {
  const double s = std::sinh(0.5 * y);
  return 2.0 * s * s;
}

DensityModel make_poincare(const DensityParams& params) {
  const double lambda = require_positive(params, "poincare", "lambda");
  DensityModel m;
  m.name = "poincare";
  m.params = {{"lambda", lambda}};
  m.domain = DomainRadius::Unit;
  m.density = [lambda](double r) { return 4.0 * lambda / ((1.0 - r * r) * (1.0 - r * r)); };
  m.cumulative = [lambda](double y) { return 2.0 * lambda * y * y / ((1.0 - y) * (1.0 + y)); };
  m.radial_map = [lambda](double x) { return x / std::sqrt(4.0 * lambda + x * x); };
  return m;
}

DensityModel make_hyperbolic_r2() {
  DensityModel m;
  m.name = "hyperbolic_r2";
  m.domain = DomainRadius::Infinite;
  m.density = [](double r) { return r == 0.0 ? 1.0 : std::sinh(r) / r; };
  m.cumulative = coshm1;
  m.radial_map = [](double x) { return acosh1p(0.5 * x * x); };
  return m;
}

DensityModel make_genhyp(const DensityParams& params) {
  const double a = require_positive(params, "genhyp", "a");
  DensityModel m;
  m.name = "genhyp";
  m.params = {{"a", a}};
  m.domain = DomainRadius::Unit;
  m.density = [a](double r) {
    const double q = 1.0 - std::pow(r, 1.0 / a);
    return 2.0 * std::pow(r, (1.0 - 2.0 * a) / a) / (a * q * q);
  };
  m.cumulative = [a](double y) {
    const double p = std::pow(y, 1.0 / a);
    return 2.0 * p / (1.0 - p);
  };
  // (x^2 / (4 + x^2))^a written as exp(-a log1p(4/x^2)) to stay below 1.
  m.radial_map = [a](double x) {
    if (x == 0.0) return 0.0;
    return std::exp(-a * std::log1p(4.0 / (x * x)));
  };
  return m;
}

DensityModel make_cusp(const DensityParams& params) {
  const double lambda = require_positive(params, "cusp", "lambda");
  DensityModel m;
  m.name = "cusp";
  m.params = {{"lambda", lambda}};
  m.domain = DomainRadius::Unit;
  m.density = [lambda](double r) { return lambda * lambda / ((1.0 - r) * (1.0 - r) * (1.0 - r)); };
  m.cumulative = [lambda](double y) {
    const double q = y / (1.0 - y);
    return 0.5 * lambda * lambda * q * q;
  };
  m.radial_map = [lambda](double x) { return x / (lambda + x); };
  return m;
}

DensityModel make_slow() {
  DensityModel m;
  m.name = "slow";
  m.domain = DomainRadius::Infinite;
  m.density = [](double r) { return 1.0 / (r * (r + 1.0)); };
  m.cumulative = [](double y) { return std::log1p(y); };
  m.radial_map = [](double x) { return std::expm1(0.5 * x * x); };
  return m;
}

DensityModel make_euclidean() {
  DensityModel m;
  m.name = "euclidean";
  m.domain = DomainRadius::Infinite;
  m.density = [](double) { return 1.0; };
  m.cumulative = [](double y) { return 0.5 * y * y; };
  m.radial_map = [](double x) { return x; };
  return m;
}

DensityModel make_custom(std::string_view expr) {
  if (expr.empty()) throw Error(ErrorCode::MissingParam, "custom density requires a postfix map");
  DensityModel m;
  m.name = "custom";
  m.domain = DomainRadius::Infinite;
  m.program = RadialMap::parse(expr);
  m.radial_map = [map = *m.program](double x) { return map(x); };
  return m;
}

}  // namespace

DensityModel builtin_density(std::string_view name, const DensityParams& params,
                             std::string_view expr) {
  if (name == "poincare") return make_poincare(params);
  if (name == "hyperbolic_r2") return make_hyperbolic_r2();
  if (name == "genhyp") return make_genhyp(params);
  if (name == "cusp") return make_cusp(params);
  if (name == "slow") return make_slow();
  if (name == "euclidean") return make_euclidean();
  if (name == "custom") return make_custom(expr);
  throw Error(ErrorCode::UnknownDensity, "unknown density '" + std::string(name) + "'");
}

DensityModel parse_density_spec(std::string_view spec) {
  const auto colon = spec.find(':');
  const std::string_view name = spec.substr(0, colon);
  const std::string_view arg = colon == std::string_view::npos ? std::string_view{}
                                                               : spec.substr(colon + 1);
  if (name == "custom") {
    std::string_view expr = arg;
    if (expr.size() >= 2 && expr.front() == '"' && expr.back() == '"') {
      expr = expr.substr(1, expr.size() - 2);
    }
    return builtin_density(name, {}, expr);
  }

  DensityParams params;
  if (!arg.empty()) {
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), value);
    if (ec != std::errc() || ptr != arg.data() + arg.size()) {
      throw Error(ErrorCode::ParseError, "bad density parameter '" + std::string(arg) + "'");
    }
    params[name == "genhyp" ? "a" : "lambda"] = value;
  }
  return builtin_density(name, params);
}

}  // namespace geocongest
