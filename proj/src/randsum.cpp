#include "sgtail/randsum.hpp"

#include <algorithm>
#include <cmath>

#include "sgtail/error.hpp"
#include "sgtail/ks.hpp"
#include "sgtail/parallel.hpp"

namespace sgtail::randsum {

NuFamily::NuFamily(int m, double p) : m_(m), p_(p) {
  if (m < 1) throw DomainError("NuFamily: m must be a positive integer");
  if (!(p > 0.0 && p < 1.0)) throw DomainError("NuFamily: p must lie in (0, 1)");
}

Component zero_component() {
  return {"zero", 0.0, [](Rng&) { return 0.0; }};
}

Component uniform_component(double variance) {
  if (!(variance >= 0.0)) throw DomainError("uniform_component: variance must be >= 0");
  const double half_width = std::sqrt(3.0 * variance);
  return {"uniform", variance, [half_width](Rng& rng) { return half_width * (2.0 * rng.uniform() - 1.0); }};
}

Component normal_component(double variance) {
  if (!(variance >= 0.0)) throw DomainError("normal_component: variance must be >= 0");
  const double sd = std::sqrt(variance);
  return {"normal", variance, [sd](Rng& rng) { return sd * rng.normal(); }};
}

Component sg_component(double m) {
  const dist::SymmetrizedGamma law(m);
  return {"symmetrized-gamma", dist::SymmetrizedGamma::kVariance,
          [law](Rng& rng) { return dist::sg_sample_one(law, rng); }};
}

void RandomSumConfig::validate() const {
  if (replicates < 1) throw DomainError("RandomSumConfig: replicates must be >= 1");
  if (!component.draw) throw DomainError("RandomSumConfig: component has no sampler");
  if (!(component.variance >= 0.0)) throw DomainError("RandomSumConfig: component variance must be declared");
}

double nu_pgf(const NuFamily& family, double z) {
  if (!(z >= 0.0 && z <= 1.0)) throw DomainError("nu_pgf: z must lie in [0, 1]");
  const double inv_m = 1.0 / family.m();
  const double p = family.p();
  return std::pow(p, inv_m) * z / std::pow(1.0 - (1.0 - p) * std::pow(z, family.m()), inv_m);
}

std::uint64_t nu_sample(const NuFamily& family, Rng& rng) {
  const double p = family.p();
  const double intensity = dist::gamma_sample(1.0 / family.m(), (1.0 - p) / p, rng);
  const std::uint64_t n = dist::poisson_sample(intensity, rng);
  return 1 + static_cast<std::uint64_t>(family.m()) * n;
}

double random_sum_sample(const RandomSumConfig& config, Rng& rng) {
  const std::uint64_t count = nu_sample(config.family, rng);
  double sum = 0.0;
  for (std::uint64_t j = 0; j < count; ++j) sum += config.component.draw(rng);
  return std::sqrt(config.family.p()) * sum;
}

std::vector<double> random_sum_batch(const RandomSumConfig& config, int workers) {
  config.validate();
  std::vector<double> out(config.replicates);
  parallel_for_index(config.replicates, workers, [&](std::size_t i) {
    Rng rng = Rng::derive(config.seed, i);
    out[i] = random_sum_sample(config, rng);
  });
  return out;
}

std::vector<ConvergenceRow> theorem1_experiment(int family_m, const Component& component,
                                             const std::vector<double>& p_schedule, std::size_t replicates,
                                             std::uint64_t seed, int workers) {
  if (p_schedule.empty()) throw DomainError("theorem1_experiment: empty p schedule");
  for (std::size_t j = 1; j < p_schedule.size(); ++j) {
    if (!(p_schedule[j] < p_schedule[j - 1])) {
      throw DomainError("theorem1_experiment: p schedule must be strictly decreasing");
    }
  }
  if (std::abs(component.variance - dist::SymmetrizedGamma::kVariance) > 1e-12) {
    throw DomainError("theorem1_experiment: component variance must equal 2");
  }
  const dist::SymmetrizedGamma limit(family_m);
  std::vector<ConvergenceRow> rows;
  rows.reserve(p_schedule.size());
  for (std::size_t j = 0; j < p_schedule.size(); ++j) {
    RandomSumConfig config{NuFamily(family_m, p_schedule[j]), component, replicates,
                           seed ^ (0xA24BAED4963EE407ULL * (j + 1))};
    auto sums = random_sum_batch(config, workers);
    std::sort(sums.begin(), sums.end());
    const auto model = dist::sg_cdf_sorted(limit, sums);
    rows.push_back({p_schedule[j], stats::ks_statistic_from_cdf(sums, model),
                    stats::ks_critical_value(replicates, 0.01), 1.0 / p_schedule[j]});
  }
  return rows;
}

std::vector<double> central_grid(const std::vector<double>& sorted, std::size_t points) {
  if (sorted.empty()) throw DataError("central_grid: empty sample");
  if (points < 2) throw DomainError("central_grid: need at least two points");
  const double last = static_cast<double>(sorted.size() - 1);
  double lo = sorted[static_cast<std::size_t>(std::floor(0.0005 * last))];
  double hi = sorted[static_cast<std::size_t>(std::ceil(0.9995 * last))];
  if (!(hi > lo)) {
    lo -= 1.0;
    hi += 1.0;
  }
  std::vector<double> grid(points);
  for (std::size_t i = 0; i < points; ++i) {
    grid[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(points - 1);
  }
  return grid;
}

PrelimitResult prelimit_experiment(double m, std::size_t n, std::size_t replicates, double exponent_alpha,
                                   std::uint64_t seed, int workers) {
  if (n < 1 || replicates < 1) throw DomainError("prelimit_experiment: n and replicates must be >= 1");
  if (!(exponent_alpha > 0.0)) throw DomainError("prelimit_experiment: exponent must be positive");
  const dist::SymmetrizedGamma law(m);
  const double scale = std::pow(static_cast<double>(n), -1.0 / exponent_alpha);
  PrelimitResult result;
  result.sums.resize(replicates);
  parallel_for_index(replicates, workers, [&](std::size_t i) {
    Rng rng = Rng::derive(seed, i);
    double sum = 0.0;
    for (std::size_t j = 0; j < n; ++j) sum += dist::sg_sample_one(law, rng);
    result.sums[i] = sum * scale;
  });
  std::sort(result.sums.begin(), result.sums.end());
  result.grid = central_grid(result.sums);
  result.ecdf.reserve(result.grid.size());
  for (double x : result.grid) result.ecdf.push_back(stats::empirical_cdf(result.sums, x));
  return result;
}

}  // namespace sgtail::randsum
