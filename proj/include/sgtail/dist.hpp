#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sgtail/rng.hpp"

namespace sgtail::dist {

/// Symmetrized gamma law: X = Y1 - Y2 with Y ~ Gamma(shape 1/m, scale √m).
///
/// Standardized so that E X = 0 and Var X = 2 for every m > 0. Characteristic
/// function (1 + m t²)^{-1/m}; kurtosis 3(1 + m). Larger m means a sharper
/// peak and a longer (still exponential) tail.
class SymmetrizedGamma {
 public:
  explicit SymmetrizedGamma(double m);

  double m() const noexcept { return m_; }
  /// Order of the Bessel function in the density, 1/m - 1/2.
  double bessel_order() const noexcept { return 1.0 / m_ - 0.5; }
  /// Density diverges at the origin for m >= 2.
  bool singular_at_zero() const noexcept { return m_ >= 2.0; }

  static constexpr double kVariance = 2.0;

 private:
  double m_;
};

/// Symmetric stable law with characteristic function exp(-λ|t|^α).
class SymmetricStable {
 public:
  SymmetricStable(double alpha, double lambda);

  double alpha() const noexcept { return alpha_; }
  double lambda() const noexcept { return lambda_; }

 private:
  double alpha_;
  double lambda_;
};

/// Atom at μ plus a rectangular law on [μ - 3d/2, μ + 3d/2]; the unimodal
/// law that attains the Gauss bound 4σ²/(9d²) for P{|X - μ| >= d}.
class GaussExtremalMixture {
 public:
  /// Throws DomainError unless sigma > 0, d > 0 and d² >= 4σ²/3.
  GaussExtremalMixture(double mu, double sigma, double d);

  double mu() const noexcept { return mu_; }
  double sigma() const noexcept { return sigma_; }
  double d() const noexcept { return d_; }
  double rect_weight() const noexcept { return 4.0 * sigma_ * sigma_ / (3.0 * d_ * d_); }
  double atom_weight() const noexcept { return 1.0 - rect_weight(); }
  double rect_lo() const noexcept { return mu_ - 1.5 * d_; }
  double rect_hi() const noexcept { return mu_ + 1.5 * d_; }
  /// P{|X - μ| >= d}, which equals the Gauss bound.
  double exceed_probability() const noexcept { return 4.0 * sigma_ * sigma_ / (9.0 * d_ * d_); }

 private:
  double mu_;
  double sigma_;
  double d_;
};

// ---- symmetrized gamma -----------------------------------------------------

double sg_cf(const SymmetrizedGamma& dist, double t);

/// Density p_m(x). Throws DomainError at x = 0 when the density is singular there.
double sg_pdf(const SymmetrizedGamma& dist, double x);

/// P{X <= x}, accurate to 1e-9 absolute. Far tails are integrated directly,
/// so small tail probabilities keep their relative accuracy.
double sg_cdf(const SymmetrizedGamma& dist, double x);

/// P{X > x}.
double sg_survival(const SymmetrizedGamma& dist, double x);

/// sg_cdf evaluated at every point of an ascending sequence. Integrates the
/// density piecewise between consecutive points, so the cost is one short
/// quadrature per point rather than one long one.
std::vector<double> sg_cdf_sorted(const SymmetrizedGamma& dist, std::span<const double> sorted_x);

/// Unit in which a deviation level "k sigma" is converted to an x threshold.
enum class DeviationUnit {
  /// Unit equal to the variance value 2; reproduces the published table of
  /// ten-sigma deviation probabilities (threshold x = 2k).
  kTableUnit,
  /// Unit equal to the standard deviation √2 (threshold x = k√2).
  kStdDev,
};

double deviation_unit_length(DeviationUnit unit) noexcept;

/// P{|X| > k·unit} = 2 P{X > k·unit}.
double sg_two_sided_exceed(const SymmetrizedGamma& dist, double k_sigmas,
                           DeviationUnit unit = DeviationUnit::kTableUnit);

double sg_kurtosis(const SymmetrizedGamma& dist) noexcept;

// ---- sampling --------------------------------------------------------------

/// Gamma(shape, scale) variate: Marsaglia–Tsang squeeze for shape >= 1, and
/// G(a) = G(a + 1) U^{1/a} below that.
double gamma_sample(double shape, double scale, Rng& rng);

double sg_sample_one(const SymmetrizedGamma& dist, Rng& rng);
std::vector<double> sg_sample(const SymmetrizedGamma& dist, Rng& rng, std::size_t n);

double extremal_sample(const GaussExtremalMixture& mix, Rng& rng);

/// Poisson variate; inversion for small means, PTRS transformed rejection otherwise.
std::uint64_t poisson_sample(double mean, Rng& rng);

// ---- stable and normal -----------------------------------------------------

double stable_cf(const SymmetricStable& dist, double t);

/// P{X <= x} by the symmetric inversion formula
/// F(x) = 1/2 + (1/π) ∫₀^∞ sin(tx) exp(-λ t^α) / t dt, to 1e-8 absolute.
double stable_cdf(const SymmetricStable& dist, double x);

/// Standard normal CDF.
double normal_cdf(double x) noexcept;

/// P{|Z| > k} for standard normal Z.
double normal_two_sided_tail(double k) noexcept;

}  // namespace sgtail::dist
