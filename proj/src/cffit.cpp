#include "sgtail/cffit.hpp"

#include <algorithm>
#include <cmath>

#include "sgtail/dist.hpp"
#include "sgtail/error.hpp"
#include "sgtail/minimize.hpp"

namespace sgtail::cffit {

void FitWindow::validate() const {
  if (!(delta > 0.0) || !(Delta > delta) || !std::isfinite(Delta)) {
    throw DomainError("FitWindow: requires 0 < delta < Delta");
  }
  if (grid_size < 8) throw DomainError("FitWindow: grid_size must be >= 8");
}

std::vector<double> log_grid(const FitWindow& window) {
  window.validate();
  std::vector<double> grid(static_cast<std::size_t>(window.grid_size));
  const double ratio = std::log(window.Delta / window.delta);
  for (int i = 0; i < window.grid_size; ++i) {
    grid[static_cast<std::size_t>(i)] = window.delta * std::exp(ratio * i / (window.grid_size - 1));
  }
  grid.back() = window.Delta;
  return grid;
}

std::vector<double> linear_grid(const FitWindow& window) {
  window.validate();
  std::vector<double> grid(static_cast<std::size_t>(window.grid_size));
  for (int i = 0; i < window.grid_size; ++i) {
    grid[static_cast<std::size_t>(i)] =
        window.delta + (window.Delta - window.delta) * static_cast<double>(i) / (window.grid_size - 1);
  }
  return grid;
}

std::string to_string(FitMethod method) {
  switch (method) {
    case FitMethod::kLogLogRegression: return "loglog-regression";
    case FitMethod::kLeastSquaresCf: return "ls-cf";
    case FitMethod::kLeastSquaresCdf: return "ls-cdf";
  }
  return "?";
}

FitMethod parse_fit_method(const std::string& name) {
  if (name == "loglog" || name == "loglog-regression") return FitMethod::kLogLogRegression;
  if (name == "ls-cf") return FitMethod::kLeastSquaresCf;
  if (name == "ls-cdf") return FitMethod::kLeastSquaresCdf;
  throw DomainError("unknown fit method '" + name + "'");
}

double sum_cf(double m, int n, double t) {
  if (n < 1) throw DomainError("sum_cf: n must be >= 1");
  return dist::sg_cf(dist::SymmetrizedGamma(m / n), t);
}

SandwichCheck verify_sandwich(double m_eff, double alpha, double lambda, const FitWindow& window) {
  if (!(m_eff > 0.0) || !(lambda > 0.0) || !(alpha > 0.0 && alpha < 2.0)) {
    throw DomainError("verify_sandwich: requires m_eff > 0, lambda > 0, alpha in (0, 2)");
  }
  for (double t : log_grid(window)) {
    const double u = m_eff * t * t;
    const double lower = std::log1p(u) / u;
    const double middle = lambda * std::pow(t, alpha - 2.0);
    if (!(lower < middle)) return {false, t, SandwichSide::kLower};
    if (!(middle < 1.0)) return {false, t, SandwichSide::kUpper};
  }
  return {true, std::nullopt, SandwichSide::kNone};
}

std::pair<double, double> feasible_lambda_interval(double m_eff, double alpha, double delta) {
  if (!(m_eff > 0.0) || !(delta > 0.0) || !(alpha > 0.0 && alpha <= 2.0)) {
    throw DomainError("feasible_lambda_interval: requires m_eff > 0, delta > 0, alpha in (0, 2]");
  }
  const double u = m_eff * delta * delta;
  const double hi = std::pow(delta, 2.0 - alpha);
  return {hi * std::log1p(u) / u, hi};
}

namespace {

StableFit loglog_fit(const std::function<double(double)>& neg_log_cf, const std::vector<double>& grid) {
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  std::vector<double> xs, ys;
  for (double t : grid) {
    const double g = neg_log_cf(t);
    if (!(g > 0.0) || !std::isfinite(g)) {
      throw NonConvergence("fit_stable_to_cf: -ln f underflows on the window", t, g);
    }
    const double x = std::log(t);
    const double y = std::log(g);
    xs.push_back(x);
    ys.push_back(y);
    sx += x;
    sy += y;
  }
  const double n = static_cast<double>(grid.size());
  const double mx = sx / n;
  const double my = sy / n;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  const double slope = sxy / sxx;
  const double intercept = my - slope * mx;
  double rss = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double r = ys[i] - (intercept + slope * xs[i]);
    rss += r * r;
  }
  return {slope, std::exp(intercept), rss, FitMethod::kLogLogRegression, 0};
}

// Searches run in (a, b) with α = 2 / (1 + e^{-a}) and λ = e^b, which keeps
// α inside (0, 2) without the simplex stalling on a box edge.
const opt::Box2 kSearchBox{{-40.0, -40.0}, {40.0, 15.0}};

double alpha_of(double a) { return 2.0 / (1.0 + std::exp(-a)); }

double alpha_coord(double alpha) {
  const double h = std::clamp(alpha, 0.02, 1.98) / 2.0;
  return std::log(h / (1.0 - h));
}

}  // namespace

StableFit fit_stable_to_neg_log_cf(const std::function<double(double)>& neg_log_cf, const FitWindow& window,
                                   FitMethod method) {
  window.validate();
  const StableFit start = loglog_fit(neg_log_cf, log_grid(window));
  if (method == FitMethod::kLogLogRegression) return start;
  if (method != FitMethod::kLeastSquaresCf) {
    throw DomainError("fit_stable_to_cf: method must be loglog-regression or ls-cf");
  }
  const auto grid = linear_grid(window);
  std::vector<double> target;
  target.reserve(grid.size());
  for (double t : grid) target.push_back(std::exp(-neg_log_cf(t)));
  auto objective = [&](const opt::Point2& p) {
    const double alpha = alpha_of(p[0]);
    const double lambda = std::exp(p[1]);
    double sum = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const double r = target[i] - std::exp(-lambda * std::pow(grid[i], alpha));
      sum += r * r;
    }
    return sum;
  };
  const opt::Point2 x0{alpha_coord(start.alpha), std::log(std::clamp(start.lambda, 1e-12, 1e6))};
  const auto best = opt::nelder_mead_2d(objective, x0, kSearchBox, {0.5, 0.2});
  return {alpha_of(best.x[0]), std::exp(best.x[1]), best.value, FitMethod::kLeastSquaresCf, best.iterations};
}

StableFit fit_stable_to_cf(double m, int n, const FitWindow& window, FitMethod method) {
  if (!(m > 0.0) || n < 1) throw DomainError("fit_stable_to_cf: requires m > 0 and n >= 1");
  const double m_eff = m / n;
  return fit_stable_to_neg_log_cf([m_eff](double t) { return std::log1p(m_eff * t * t) / m_eff; }, window,
                                  method);
}

std::vector<StableFit> table3_sweep(double m, const std::vector<int>& n_list, const FitWindow& window,
                                    FitMethod method) {
  std::vector<StableFit> rows;
  rows.reserve(n_list.size());
  for (int n : n_list) rows.push_back(fit_stable_to_cf(m, n, window, method));
  return rows;
}

StableFit fit_stable_to_ecdf(const std::vector<double>& grid, const std::vector<double>& ecdf, double start_alpha,
                             double start_lambda) {
  if (grid.size() != ecdf.size() || grid.size() < 2) {
    throw DomainError("fit_stable_to_ecdf: grid and ECDF must match and have >= 2 points");
  }
  auto objective = [&](const opt::Point2& p) {
    const dist::SymmetricStable law(alpha_of(p[0]), std::exp(p[1]));
    double sum = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const double r = ecdf[i] - dist::stable_cdf(law, grid[i]);
      sum += r * r;
    }
    return sum;
  };
  const opt::Point2 x0{alpha_coord(start_alpha), std::log(std::clamp(start_lambda, 1e-12, 1e6))};
  const auto best = opt::nelder_mead_2d(objective, x0, kSearchBox, {0.5, 0.2});
  return {alpha_of(best.x[0]), std::exp(best.x[1]), best.value, FitMethod::kLeastSquaresCdf, best.iterations};
}

}  // namespace sgtail::cffit
