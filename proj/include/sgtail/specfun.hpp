#pragma once

#include <functional>
#include <limits>

namespace sgtail::specfun {

/// Tolerances for adaptive integration. The estimate is accepted once the
/// global error estimate falls below max(abs_tol, rel_tol * |value|).
struct QuadratureSpec {
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  int max_subdivisions = 2000;

  /// Throws DomainError unless all tolerances are positive and max_subdivisions >= 1.
  void validate() const;
};

struct QuadratureResult {
  double value = 0.0;
  double err_est = 0.0;
  int subdivisions = 0;
};

/// ln Γ(x) for x > 0.
double log_gamma(double x);

/// K_ν(x), modified Bessel function of the second kind, for x > 0 and any real ν.
/// Returns 0 once e^{-x} underflows; see `bessel_k_checked` for the flag.
double bessel_k(double nu, double x);

/// e^x K_ν(x); finite well beyond the range where K_ν itself underflows.
double bessel_k_scaled(double nu, double x);

struct BesselResult {
  double value = 0.0;
  bool underflow = false;
};

BesselResult bessel_k_checked(double nu, double x);

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

using Integrand = std::function<double(double)>;

/// Adaptive 15-point Gauss–Kronrod integration of f over [a, b].
///
/// `b` may be +infinity, in which case the range is mapped onto (0, 1] with
/// x = a + (1 - u) / u. The rule never evaluates f at an endpoint, so
/// integrable endpoint singularities are handled by repeated bisection. If
/// a > b the result is negated.
///
/// Throws NonConvergence (carrying the partial value) if the tolerance is not
/// met within spec.max_subdivisions intervals.
QuadratureResult integrate(const Integrand& f, double a, double b, const QuadratureSpec& spec = {});

}  // namespace sgtail::specfun
