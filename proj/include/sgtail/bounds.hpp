#pragma once

#include <optional>
#include <string>

#include "sgtail/dist.hpp"

namespace sgtail::bounds {

enum class BoundKind { kGaussUnimodal, kChebyshev };

std::string to_string(BoundKind kind);

/// Upper bound on P{|X - μ| >= d} for a law with standard deviation σ.
struct BoundResult {
  double level_d = 0.0;  ///< d / σ
  double bound = 0.0;
  BoundKind kind = BoundKind::kChebyshev;
  /// Law attaining the bound (Gauss bound only), placed at μ = 0.
  std::optional<dist::GaussExtremalMixture> attained_by;
};

/// 4σ²/(9d²) over unimodal laws with mode = mean; valid for d² >= 4σ²/3 and
/// attained by the atom-plus-rectangle mixture. Outside that regime this
/// throws DomainError instead of falling back to another bound.
BoundResult gauss_bound(double d, double sigma);

/// min(1, σ²/d²).
BoundResult chebyshev_bound(double d, double sigma);

double expected_exceedances(double n, const BoundResult& bound);

}  // namespace sgtail::bounds
