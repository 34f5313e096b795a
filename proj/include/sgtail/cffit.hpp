#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sgtail::cffit {

/// Frequency window (δ, Δ) on which a stable CF is matched.
struct FitWindow {
  double delta = 0.005;
  double Delta = 0.5;
  int grid_size = 256;

  /// Throws DomainError unless 0 < delta < Delta and grid_size >= 8.
  void validate() const;
};

/// Geometric grid from δ to Δ inclusive.
std::vector<double> log_grid(const FitWindow& window);
/// Uniform grid from δ to Δ inclusive.
std::vector<double> linear_grid(const FitWindow& window);

enum class FitMethod {
  kLogLogRegression,  ///< OLS of ln(-ln f) on ln t over the log grid
  kLeastSquaresCf,    ///< Σ (f - exp(-λ t^α))² over the uniform grid
  kLeastSquaresCdf,   ///< Σ (F_n - F_stable)² over an ECDF grid
};

std::string to_string(FitMethod method);
/// Accepts "loglog", "loglog-regression", "ls-cf", "ls-cdf".
FitMethod parse_fit_method(const std::string& name);

struct StableFit {
  double alpha = 0.0;
  double lambda = 0.0;
  double residual = 0.0;  ///< objective at the optimum
  FitMethod method = FitMethod::kLeastSquaresCf;
  int iterations = 0;
};

/// f(t, m/n), the CF of (X_1 + ... + X_n)/√n for X_i symmetrized gamma(m).
double sum_cf(double m, int n, double t);

enum class SandwichSide { kNone, kLower, kUpper };

struct SandwichCheck {
  bool holds = false;
  std::optional<double> first_violation;  ///< smallest grid t where it fails
  SandwichSide side = SandwichSide::kNone;
};

/// Checks log(1 + m t²)/(m t²) < λ t^{α-2} < 1 at every log-grid point of the
/// window, i.e. f(t, m) > exp(-λ t^α) > exp(-t²).
SandwichCheck verify_sandwich(double m_eff, double alpha, double lambda, const FitWindow& window);

/// λ range (lo, hi) satisfying the sandwich at t = δ:
/// lo = δ^{2-α} log(1 + m δ²)/(m δ²), hi = δ^{2-α}.
std::pair<double, double> feasible_lambda_interval(double m_eff, double alpha, double delta);

/// Fits exp(-λ t^α) to f(t, m/n) on the window. kLeastSquaresCf starts from
/// the log-log regression. Throws NonConvergence if -ln f underflows.
StableFit fit_stable_to_cf(double m, int n, const FitWindow& window,
                           FitMethod method = FitMethod::kLeastSquaresCf);

/// Same, for any real CF given through g(t) = -ln f(t) > 0 on the window.
StableFit fit_stable_to_neg_log_cf(const std::function<double(double)>& neg_log_cf, const FitWindow& window,
                                   FitMethod method);

/// One fit per n; α is expected to increase with n.
std::vector<StableFit> table3_sweep(double m, const std::vector<int>& n_list, const FitWindow& window,
                                    FitMethod method = FitMethod::kLeastSquaresCf);

/// Least-squares fit of a symmetric stable CDF to empirical CDF values on a grid.
StableFit fit_stable_to_ecdf(const std::vector<double>& grid, const std::vector<double>& ecdf,
                             double start_alpha, double start_lambda);

}  // namespace sgtail::cffit
