#include "sgtail/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "sgtail/error.hpp"

namespace sgtail::bounds {

std::string to_string(BoundKind kind) {
  return kind == BoundKind::kGaussUnimodal ? "gauss-unimodal" : "chebyshev";
}

namespace {

double level_ratio(double d, double sigma) {
  if (!(d > 0.0) || !(sigma > 0.0) || !std::isfinite(d) || !std::isfinite(sigma)) {
    throw DomainError("bound: d and sigma must be positive and finite");
  }
  return d / sigma;
}

}  // namespace

BoundResult gauss_bound(double d, double sigma) {
  const double r = level_ratio(d, sigma);
  if (r * r < 4.0 / 3.0) {
    throw DomainError("gauss_bound: out of regime, requires d^2 >= 4 sigma^2 / 3");
  }
  return {r, 4.0 / (9.0 * r * r), BoundKind::kGaussUnimodal, dist::GaussExtremalMixture(0.0, sigma, d)};
}

BoundResult chebyshev_bound(double d, double sigma) {
  const double r = level_ratio(d, sigma);
  return {r, std::min(1.0, 1.0 / (r * r)), BoundKind::kChebyshev, std::nullopt};
}

double expected_exceedances(double n, const BoundResult& bound) {
  if (!(n >= 0.0)) throw DomainError("expected_exceedances: n must be >= 0");
  return n * bound.bound;
}

}  // namespace sgtail::bounds
