#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "sgtail/dist.hpp"
#include "sgtail/rng.hpp"

namespace sgtail::randsum {

/// Random count ν_p with generating function p^{1/m} z / (1 - (1 - p) z^m)^{1/m}.
/// Support {1, 1 + m, 1 + 2m, ...}; E ν_p = 1/p.
class NuFamily {
 public:
  NuFamily(int m, double p);

  int m() const noexcept { return m_; }
  double p() const noexcept { return p_; }
  double mean() const noexcept { return 1.0 / p_; }

 private:
  int m_;
  double p_;
};

/// Mean-zero summand generator with a declared variance.
struct Component {
  std::string name;
  double variance = 0.0;
  std::function<double(Rng&)> draw;
};

Component zero_component();
/// Uniform on [-√(3v), √(3v)].
Component uniform_component(double variance = 2.0);
Component normal_component(double variance = 2.0);
/// Symmetrized gamma(m) summands (variance 2).
Component sg_component(double m);

struct RandomSumConfig {
  NuFamily family;
  Component component;
  std::size_t replicates = 1;
  std::uint64_t seed = 0x5EED;

  void validate() const;
};

double nu_pgf(const NuFamily& family, double z);

/// ν = 1 + m N with N negative binomial (size 1/m, success probability p),
/// drawn as a Poisson count with Gamma(1/m, (1 - p)/p) intensity.
std::uint64_t nu_sample(const NuFamily& family, Rng& rng);

/// p^{1/2} (Y_1 + ... + Y_ν) with ν ~ ν_p.
double random_sum_sample(const RandomSumConfig& config, Rng& rng);

/// config.replicates independent random sums; replicate i draws from
/// Rng::derive(config.seed, i), so the output does not depend on `workers`.
std::vector<double> random_sum_batch(const RandomSumConfig& config, int workers = 1);

struct ConvergenceRow {
  double p = 0.0;
  double ks = 0.0;            ///< sup-distance to the symmetrized gamma(m) CDF
  double critical_1pct = 0.0; ///< asymptotic 1% KS critical value at this replicate count
  double mean_count = 0.0;    ///< 1/p
};

/// For each p, the KS distance between normalized random sums and the
/// symmetrized gamma(m) law. Requires a strictly decreasing schedule in (0, 1)
/// and a component of variance 2.
std::vector<ConvergenceRow> theorem1_experiment(int family_m, const Component& component,
                                             const std::vector<double>& p_schedule, std::size_t replicates,
                                             std::uint64_t seed, int workers = 1);

struct PrelimitResult {
  std::vector<double> sums;  ///< normalized sums, ascending
  std::vector<double> grid;  ///< evaluation grid over the central 99.9% of sums
  std::vector<double> ecdf;  ///< empirical CDF on `grid`
};

inline constexpr std::size_t kEcdfGridSize = 512;

/// Per replicate: n symmetrized gamma(m) draws, summed and divided by
/// n^{1/exponent_alpha}.
PrelimitResult prelimit_experiment(double m, std::size_t n, std::size_t replicates, double exponent_alpha,
                                   std::uint64_t seed, int workers = 1);

/// Equally spaced grid between the 0.05% and 99.95% sample quantiles.
std::vector<double> central_grid(const std::vector<double>& sorted, std::size_t points = kEcdfGridSize);

}  // namespace sgtail::randsum
