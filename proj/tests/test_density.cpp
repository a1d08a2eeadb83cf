#include <cmath>
#include <string>

#include "doctest.h"
#include "geocongest/density.hpp"
#include "oracles.hpp"

using namespace geocongest;

namespace {

struct Family {
  const char* name;
  double param;
};

constexpr Family kFamilies[] = {
    {"poincare", 1.0}, {"poincare", 5.0}, {"hyperbolic_r2", 0.0}, {"genhyp", 0.5},
    {"genhyp", 0.01}, {"cusp", 1.0},      {"cusp", 3.0},          {"slow", 0.0},
    {"euclidean", 0.0},
};

DensityModel make(const Family& f) {
  const std::string name = f.name;
  if (name == "poincare" || name == "cusp") return builtin_density(name, {{"lambda", f.param}});
  if (name == "genhyp") return builtin_density(name, {{"a", f.param}});
  return builtin_density(name);
}

}  // namespace

TEST_CASE("closed-form values") {
  CHECK(builtin_density("poincare", {{"lambda", 1.0}}).alpha(2.0) ==
        doctest::Approx(0.7071067812).epsilon(1e-10));
  CHECK(builtin_density("hyperbolic_r2").alpha(2.0) ==
        doctest::Approx(1.7627471740).epsilon(1e-10));
  CHECK(builtin_density("cusp", {{"lambda", 1.0}}).alpha(1.0) == doctest::Approx(0.5));
  CHECK(builtin_density("slow").alpha(1.0) == doctest::Approx(0.6487212707).epsilon(1e-10));
  CHECK(builtin_density("euclidean").alpha(3.25) == 3.25);
}

TEST_CASE("genhyp at a = 1/2 is the poincare disk with lambda = 1") {
  const DensityModel g = builtin_density("genhyp", {{"a", 0.5}});
  const DensityModel p = builtin_density("poincare", {{"lambda", 1.0}});
  for (double x = 0.0; x < 30.0; x += 0.37) {
    CHECK(g.alpha(x) == doctest::Approx(p.alpha(x)).epsilon(1e-13));
  }
}

TEST_CASE("F(alpha(x)) = x^2 / 2 against independent closed forms") {
  for (const Family& f : kFamilies) {
    const DensityModel m = make(f);
    for (int i = 1; i <= 100; ++i) {
      const double x = 0.1 * i;
      const double y = m.alpha(x);
      CAPTURE(f.name);
      CAPTURE(x);
      CHECK(oracle::close_rel(oracle::cumulative(f.name, y, f.param), x * x / 2.0, 1e-10));
      CHECK(oracle::close_rel(m.cumulative(y), oracle::cumulative(f.name, y, f.param), 1e-10));
    }
  }
}

TEST_CASE("rho is the derivative of F divided by r") {
  for (const Family& f : kFamilies) {
    const DensityModel m = make(f);
    for (double x : {0.3, 1.0, 2.5}) {
      const double y = m.alpha(x);
      const double h = 1e-6 * y;
      const double dF = (oracle::cumulative(f.name, y + h, f.param) -
                         oracle::cumulative(f.name, y - h, f.param)) / (2.0 * h);
      CAPTURE(f.name);
      CAPTURE(x);
      CHECK(m.density(y) * y == doctest::Approx(dF).epsilon(1e-5));
    }
  }
}

TEST_CASE("alpha is increasing, starts at zero and respects the domain") {
  for (const Family& f : kFamilies) {
    const DensityModel m = make(f);
    CAPTURE(f.name);
    CHECK(m.alpha(0.0) == 0.0);
    double prev = 0.0;
    for (double x = 0.05; x < 8.0; x += 0.05) {
      const double a = m.alpha(x);
      CHECK(a > prev);
      if (m.bounded()) CHECK(a < 1.0);
      prev = a;
    }
  }
  CHECK(builtin_density("poincare", {{"lambda", 1.0}}).bounded());
  CHECK(builtin_density("genhyp", {{"a", 0.3}}).bounded());
  CHECK(builtin_density("cusp", {{"lambda", 1.0}}).bounded());
  CHECK_FALSE(builtin_density("slow").bounded());
  CHECK_FALSE(builtin_density("hyperbolic_r2").bounded());
  CHECK_FALSE(builtin_density("euclidean").bounded());
}

TEST_CASE("bounded maps stay finite and below one for large x") {
  for (const char* name : {"poincare", "cusp"}) {
    const DensityModel m = builtin_density(name, {{"lambda", 1.0}});
    for (double x : {1e3, 1e5, 1e6}) {
      CHECK(std::isfinite(m.alpha(x)));
      CHECK(m.alpha(x) <= 1.0);
    }
  }
  CHECK(builtin_density("hyperbolic_r2").alpha(1e6) == doctest::Approx(2.0 * std::log(1e6)).epsilon(1e-6));
}

TEST_CASE("parameter errors") {
  auto code_of = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::IoError;
  };
  CHECK(code_of([] { builtin_density("poincare"); }) == ErrorCode::MissingParam);
  CHECK(code_of([] { builtin_density("genhyp"); }) == ErrorCode::MissingParam);
  CHECK(code_of([] { builtin_density("custom"); }) == ErrorCode::MissingParam);
  CHECK(code_of([] { builtin_density("cusp", {{"lambda", 0.0}}); }) == ErrorCode::NonPositiveParam);
  CHECK(code_of([] { builtin_density("genhyp", {{"a", -1.0}}); }) == ErrorCode::NonPositiveParam);
  CHECK(code_of([] { builtin_density("torus"); }) == ErrorCode::UnknownDensity);
  CHECK(code_of([] { builtin_density("custom", {}, "r +"); }) == ErrorCode::StackUnderflow);
}

TEST_CASE("custom density runs its program") {
  const DensityModel m = builtin_density("custom", {}, "r r *");
  CHECK(m.alpha(3.0) == 9.0);
  CHECK(m.program.has_value());
  CHECK_FALSE(m.bounded());
}

TEST_CASE("density spec strings") {
  CHECK(parse_density_spec("poincare:5").params.at("lambda") == 5.0);
  CHECK(parse_density_spec("genhyp:0.01").params.at("a") == 0.01);
  CHECK(parse_density_spec("euclidean").alpha(2.0) == 2.0);
  CHECK(parse_density_spec("custom:r r *").alpha(2.0) == 4.0);
  CHECK(parse_density_spec("custom:\"r r *\"").alpha(2.0) == 4.0);
}
