#include "sgtail/ks.hpp"

#include <algorithm>
#include <cmath>

#include "sgtail/error.hpp"

namespace sgtail::stats {

double empirical_cdf(std::span<const double> sorted, double x) {
  if (sorted.empty()) throw DataError("empirical_cdf: empty sample");
  const auto it = std::upper_bound(sorted.begin(), sorted.end(), x);
  return static_cast<double>(it - sorted.begin()) / static_cast<double>(sorted.size());
}

double ks_statistic_from_cdf(std::span<const double> sorted, std::span<const double> model_cdf) {
  if (sorted.empty() || sorted.size() != model_cdf.size()) {
    throw DataError("ks_statistic: sample and model CDF must be nonempty and the same length");
  }
  const double n = static_cast<double>(sorted.size());
  double d = 0.0;
  std::size_t i = 0;
  while (i < sorted.size()) {
    // Ties: the empirical CDF jumps once over the whole run.
    std::size_t j = i;
    while (j + 1 < sorted.size() && sorted[j + 1] == sorted[i]) ++j;
    const double below = static_cast<double>(i) / n;
    const double above = static_cast<double>(j + 1) / n;
    d = std::max({d, model_cdf[i] - below, above - model_cdf[i]});
    i = j + 1;
  }
  return d;
}

double ks_statistic(std::span<const double> sorted, const std::function<double(double)>& cdf) {
  std::vector<double> model(sorted.size());
  std::transform(sorted.begin(), sorted.end(), model.begin(), cdf);
  return ks_statistic_from_cdf(sorted, model);
}

double ks_critical_value(std::size_t n, double level) {
  if (n == 0) throw DomainError("ks_critical_value: n must be positive");
  if (!(level > 0.0 && level < 1.0)) throw DomainError("ks_critical_value: level must lie in (0, 1)");
  return std::sqrt(-std::log(level / 2.0) / 2.0) / std::sqrt(static_cast<double>(n));
}

}  // namespace sgtail::stats
