#include "sgtail/dist.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "sgtail/error.hpp"
#include "sgtail/specfun.hpp"

namespace sgtail::dist {

using specfun::integrate;
using specfun::kInfinity;
using specfun::QuadratureSpec;

namespace {

constexpr double kPi = std::numbers::pi;

// Below this the central mass is summed from the Bessel power series; above it
// (and everywhere for m <= kSeriesMinM) the density is integrated numerically.
constexpr double kCentralCut = 1.0;
// Series form has a 1/sin(μπ) cancellation as μ = 1/2 - 1/m -> 0.
constexpr double kSeriesMinM = 2.2;

const QuadratureSpec kCdfQuad{1e-13, 1e-11, 4000};

// ln of the density normalizer √π Γ(1/m) m^{(2+m)/(4m)} 2^{1/m - 1/2}.
double log_normalizer(double m) {
  const double nu = 1.0 / m - 0.5;
  return 0.5 * std::log(kPi) + specfun::log_gamma(1.0 / m) + (2.0 + m) / (4.0 * m) * std::log(m) +
         nu * std::log(2.0);
}

// P{0 < X <= y} from term-by-term integration of
// |x|^ν K_ν(x/√m) = (π / 2 sin μπ) x^{-μ} (I_{-μ} - I_μ)(x/√m), μ = -ν in (0, 1/2).
double central_mass_series(double m, double y) {
  const double mu = 0.5 - 1.0 / m;
  const double w = 1.0 / (2.0 * std::sqrt(m));  // (z/2) = w x
  const double w2 = w * w;
  const double y2 = y * y;
  double a = std::pow(w, -mu) / std::exp(specfun::log_gamma(1.0 - mu));
  double b = std::pow(w, mu) / std::exp(specfun::log_gamma(1.0 + mu));
  double ya = std::pow(y, 1.0 - 2.0 * mu);
  double yb = y;
  double sum = 0.0;
  for (int k = 0; k < 200; ++k) {
    const double term = a * ya / (2.0 * k + 1.0 - 2.0 * mu) - b * yb / (2.0 * k + 1.0);
    sum += term;
    if (k > 2 && std::abs(term) < 1e-17 * std::abs(sum)) break;
    a *= w2 / ((k + 1.0) * (k + 1.0 - mu));
    b *= w2 / ((k + 1.0) * (k + 1.0 + mu));
    ya *= y2;
    yb *= y2;
  }
  return std::exp(-log_normalizer(m)) * kPi / (2.0 * std::sin(mu * kPi)) * sum;
}

bool use_series(const SymmetrizedGamma& dist) { return dist.m() > kSeriesMinM; }

double tail_integral(const SymmetrizedGamma& dist, double x) {
  auto f = [&dist](double t) { return sg_pdf(dist, t); };
  return integrate(f, x, kInfinity, kCdfQuad).value;
}

// P{a < X <= b} for 0 <= a < b <= kCentralCut.
double central_piece(const SymmetrizedGamma& dist, double a, double b) {
  if (use_series(dist)) {
    return central_mass_series(dist.m(), b) - (a > 0.0 ? central_mass_series(dist.m(), a) : 0.0);
  }
  auto f = [&dist](double t) { return sg_pdf(dist, t); };
  return integrate(f, a, b, kCdfQuad).value;
}

// P{X > x} for x >= 0.
double upper_tail(const SymmetrizedGamma& dist, double x) {
  if (x == 0.0) return 0.5;
  if (x >= kCentralCut) return tail_integral(dist, x);
  return tail_integral(dist, kCentralCut) + central_piece(dist, x, kCentralCut);
}

}  // namespace

SymmetrizedGamma::SymmetrizedGamma(double m) : m_(m) {
  if (!(m > 0.0) || !std::isfinite(m)) throw DomainError("SymmetrizedGamma: m must be positive");
}

SymmetricStable::SymmetricStable(double alpha, double lambda) : alpha_(alpha), lambda_(lambda) {
  if (!(alpha > 0.0 && alpha <= 2.0)) throw DomainError("SymmetricStable: alpha must lie in (0, 2]");
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw DomainError("SymmetricStable: lambda must be positive");
}

GaussExtremalMixture::GaussExtremalMixture(double mu, double sigma, double d) : mu_(mu), sigma_(sigma), d_(d) {
  if (!(sigma > 0.0) || !(d > 0.0) || !std::isfinite(mu)) {
    throw DomainError("GaussExtremalMixture: sigma and d must be positive");
  }
  if (d * d < 4.0 * sigma * sigma / 3.0) {
    throw DomainError("GaussExtremalMixture: requires d^2 >= 4 sigma^2 / 3");
  }
}

double sg_cf(const SymmetrizedGamma& dist, double t) {
  const double m = dist.m();
  return std::exp(-std::log1p(m * t * t) / m);
}

double sg_pdf(const SymmetrizedGamma& dist, double x) {
  const double m = dist.m();
  const double nu = dist.bessel_order();
  const double ax = std::abs(x);
  if (ax == 0.0) {
    if (dist.singular_at_zero()) throw DomainError("sg_pdf: density is singular at x = 0 for m >= 2");
    // lim x^ν K_ν(x/√m) = Γ(ν) 2^{ν-1} m^{ν/2} for ν > 0.
    return std::exp(specfun::log_gamma(nu) + (nu - 1.0) * std::log(2.0) + 0.5 * nu * std::log(m) -
                    log_normalizer(m));
  }
  const double z = ax / std::sqrt(m);
  const double scaled = specfun::bessel_k_scaled(nu, z);
  return scaled * std::exp(nu * std::log(ax) - z - log_normalizer(m));
}

double sg_survival(const SymmetrizedGamma& dist, double x) {
  if (x >= 0.0) return upper_tail(dist, x);
  return 1.0 - upper_tail(dist, -x);
}

double sg_cdf(const SymmetrizedGamma& dist, double x) {
  if (x <= 0.0) return upper_tail(dist, -x);
  return 1.0 - upper_tail(dist, x);
}

std::vector<double> sg_cdf_sorted(const SymmetrizedGamma& dist, std::span<const double> sorted_x) {
  if (!std::is_sorted(sorted_x.begin(), sorted_x.end())) {
    throw DomainError("sg_cdf_sorted: input must be ascending");
  }
  std::vector<double> abs_values;
  abs_values.reserve(sorted_x.size());
  for (double x : sorted_x) abs_values.push_back(std::abs(x));
  std::sort(abs_values.begin(), abs_values.end());
  abs_values.erase(std::unique(abs_values.begin(), abs_values.end()), abs_values.end());

  // Upper-tail probabilities, accumulated downward from the largest point.
  std::vector<double> tails(abs_values.size());
  const QuadratureSpec piece_quad{1e-15, 1e-12, 4000};
  auto f = [&dist](double t) { return sg_pdf(dist, t); };
  const bool series = use_series(dist);
  double cut_tail = -1.0;
  double acc = 0.0;
  double carry = 0.0;  // Kahan compensation
  double prev = kInfinity;
  for (std::size_t i = abs_values.size(); i-- > 0;) {
    const double a = abs_values[i];
    if (a == 0.0) {
      tails[i] = 0.5;
    } else if (series && a < kCentralCut) {
      if (cut_tail < 0.0) cut_tail = tail_integral(dist, kCentralCut) + central_mass_series(dist.m(), kCentralCut);
      tails[i] = cut_tail - central_mass_series(dist.m(), a);
    } else {
      if (std::isinf(prev)) {
        acc = tail_integral(dist, a);
      } else {
        const double piece = integrate(f, a, prev, piece_quad).value - carry;
        const double next = acc + piece;
        carry = (next - acc) - piece;
        acc = next;
      }
      prev = a;
      tails[i] = acc;
    }
  }

  std::vector<double> out;
  out.reserve(sorted_x.size());
  for (double x : sorted_x) {
    const auto it = std::lower_bound(abs_values.begin(), abs_values.end(), std::abs(x));
    const double tail = tails[static_cast<std::size_t>(it - abs_values.begin())];
    out.push_back(x < 0.0 ? tail : 1.0 - tail);
  }
  return out;
}

double deviation_unit_length(DeviationUnit unit) noexcept {
  return unit == DeviationUnit::kTableUnit ? SymmetrizedGamma::kVariance : std::sqrt(SymmetrizedGamma::kVariance);
}

double sg_two_sided_exceed(const SymmetrizedGamma& dist, double k_sigmas, DeviationUnit unit) {
  if (!(k_sigmas > 0.0)) throw DomainError("sg_two_sided_exceed: k_sigmas must be positive");
  return 2.0 * upper_tail(dist, k_sigmas * deviation_unit_length(unit));
}

double sg_kurtosis(const SymmetrizedGamma& dist) noexcept { return 3.0 * (1.0 + dist.m()); }

double gamma_sample(double shape, double scale, Rng& rng) {
  if (!(shape > 0.0) || !(scale > 0.0)) throw DomainError("gamma_sample: shape and scale must be positive");
  if (shape < 1.0) {
    const double boosted = gamma_sample(shape + 1.0, 1.0, rng);
    const double log_value = std::log(boosted) + std::log(rng.uniform_open()) / shape;
    return scale * std::exp(log_value);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x = 0.0;
    double v = 0.0;
    do {
      x = rng.normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = rng.uniform_open();
    const double x2 = x * x;
    if (u < 1.0 - 0.0331 * x2 * x2) return scale * d * v;
    if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return scale * d * v;
  }
}

double sg_sample_one(const SymmetrizedGamma& dist, Rng& rng) {
  const double shape = 1.0 / dist.m();
  const double scale = std::sqrt(dist.m());
  const double y1 = gamma_sample(shape, scale, rng);
  const double y2 = gamma_sample(shape, scale, rng);
  return y1 - y2;
}

std::vector<double> sg_sample(const SymmetrizedGamma& dist, Rng& rng, std::size_t n) {
  if (n == 0) throw DomainError("sg_sample: n must be positive");
  std::vector<double> out(n);
  for (auto& v : out) v = sg_sample_one(dist, rng);
  return out;
}

double extremal_sample(const GaussExtremalMixture& mix, Rng& rng) {
  if (rng.uniform() < mix.rect_weight()) {
    return mix.rect_lo() + (mix.rect_hi() - mix.rect_lo()) * rng.uniform();
  }
  return mix.mu();
}

std::uint64_t poisson_sample(double mean, Rng& rng) {
  if (!(mean >= 0.0) || !std::isfinite(mean)) throw DomainError("poisson_sample: mean must be finite and >= 0");
  if (mean == 0.0) return 0;
  if (mean < 10.0) {
    const double limit = std::exp(-mean);
    std::uint64_t k = 0;
    double prod = rng.uniform_open();
    while (prod > limit) {
      ++k;
      prod *= rng.uniform_open();
    }
    return k;
  }
  // Hörmann (1993), transformed rejection with squeeze.
  const double slam = std::sqrt(mean);
  const double loglam = std::log(mean);
  const double b = 0.931 + 2.53 * slam;
  const double a = -0.059 + 0.02483 * b;
  const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
  const double vr = 0.9277 - 3.6224 / (b - 2.0);
  for (;;) {
    const double u = rng.uniform() - 0.5;
    const double v = rng.uniform_open();
    const double us = 0.5 - std::abs(u);
    const double k = std::floor((2.0 * a / us + b) * u + mean + 0.43);
    if (us >= 0.07 && v <= vr) return static_cast<std::uint64_t>(k);
    if (k < 0.0 || (us < 0.013 && v > us)) continue;
    if (std::log(v) + std::log(inv_alpha) - std::log(a / (us * us) + b) <=
        -mean + k * loglam - specfun::log_gamma(k + 1.0)) {
      return static_cast<std::uint64_t>(k);
    }
  }
}

double stable_cf(const SymmetricStable& dist, double t) {
  return std::exp(-dist.lambda() * std::pow(std::abs(t), dist.alpha()));
}

double stable_cdf(const SymmetricStable& dist, double x) {
  if (x == 0.0) return 0.5;
  if (std::isinf(x)) return x > 0 ? 1.0 : 0.0;
  const double alpha = dist.alpha();
  const double lambda = dist.lambda();
  // exp(-λ T^α) = e^{-37} ~ 1e-16 beyond T.
  const double t_max = std::pow(37.0 / lambda, 1.0 / alpha);
  auto f = [x, alpha, lambda](double t) {
    if (t == 0.0) return x;
    return std::sin(t * x) * std::exp(-lambda * std::pow(t, alpha)) / t;
  };
  // Panels of two periods keep each adaptive call non-oscillatory.
  const double period = 2.0 * kPi / std::abs(x);
  const double max_panels = 20000.0;
  const double panel = std::max(2.0 * period, t_max / max_panels);
  const int panels = std::max(1, static_cast<int>(std::ceil(t_max / panel)));
  const QuadratureSpec quad{std::max(1e-16, 1e-10 / panels), 1e-12, 2000};
  double sum = 0.0;
  for (int i = 0; i < panels; ++i) {
    const double a = i * panel;
    const double b = std::min(t_max, a + panel);
    sum += integrate(f, a, b, quad).value;
  }
  return std::clamp(0.5 + sum / kPi, 0.0, 1.0);
}

double normal_cdf(double x) noexcept { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

double normal_two_sided_tail(double k) noexcept { return std::erfc(std::abs(k) / std::numbers::sqrt2); }

}  // namespace sgtail::dist
