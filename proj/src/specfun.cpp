#include "sgtail/specfun.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "sgtail/error.hpp"

namespace sgtail::specfun {

void QuadratureSpec::validate() const {
  if (!(abs_tol > 0.0) || !(rel_tol > 0.0) || max_subdivisions < 1) {
    throw DomainError("QuadratureSpec: tolerances must be positive and max_subdivisions >= 1");
  }
}

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = 1e-16;

// Stirling series for ln Γ(x), x >= 15; Bernoulli terms B_{2k}/(2k(2k-1)).
double log_gamma_stirling(double x) {
  static constexpr std::array<double, 8> kCoef = {
      1.0 / 12.0,   -1.0 / 360.0,        1.0 / 1260.0,  -1.0 / 1680.0,
      1.0 / 1188.0, -691.0 / 360360.0,   1.0 / 156.0,   -3617.0 / 122400.0,
  };
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  double series = 0.0;
  double power = inv;
  for (double c : kCoef) {
    series += c * power;
    power *= inv2;
  }
  return (x - 0.5) * std::log(x) - x + 0.5 * std::log(2.0 * kPi) + series;
}

// Taylor coefficients of 1/Γ(1+z) about z = 0.
constexpr std::array<double, 29> kRecipGamma1p = {
    1.0,
    5.7721566490153286061e-1,
    -6.5587807152025388108e-1,
    -4.2002635034095235529e-2,
    1.665386113822914895e-1,
    -4.2197734555544336748e-2,
    -9.6219715278769735621e-3,
    7.2189432466630995424e-3,
    -1.1651675918590651121e-3,
    -2.1524167411495097282e-4,
    1.2805028238811618615e-4,
    -2.0134854780788238656e-5,
    -1.2504934821426706573e-6,
    1.1330272319816958824e-6,
    -2.0563384169776071035e-7,
    6.1160951044814158179e-9,
    5.0020076444692229301e-9,
    -1.1812745704870201446e-9,
    1.0434267116911005105e-10,
    7.782263439905071254e-12,
    -3.6968056186422057082e-12,
    5.100370287454475979e-13,
    -2.0583260535665067832e-14,
    -5.3481225394230179824e-15,
    1.2267786282382607902e-15,
    -1.1812593016974587695e-16,
    1.1866922547516003326e-18,
    1.4123806553180317816e-18,
    -2.2987456844353702066e-19,
};

// Temme's auxiliary gamma quantities for |mu| <= 1/2:
//   gam1 = (1/Γ(1-mu) - 1/Γ(1+mu)) / (2 mu), gam2 = (1/Γ(1-mu) + 1/Γ(1+mu)) / 2,
//   gampl = 1/Γ(1+mu), gammi = 1/Γ(1-mu).
struct TemmeGammas {
  double gam1, gam2, gampl, gammi;
};

TemmeGammas temme_gammas(double mu) {
  double even = 0.0;  // sum over even powers
  double odd = 0.0;   // sum over odd powers, divided by mu
  for (std::size_t j = kRecipGamma1p.size(); j-- > 0;) {
    if (j % 2 == 0) {
      even = even * mu * mu + kRecipGamma1p[j];
    } else {
      odd = odd * mu * mu + kRecipGamma1p[j];
    }
  }
  return {-odd, even, even + mu * odd, even - mu * odd};
}

// Returns (K_mu, K_{mu+1}) for |mu| <= 1/2, multiplied by e^x when `scaled`.
// Series for x <= 2, Steed's continued fraction beyond.
std::pair<double, double> temme_k(double mu, double x, bool scaled) {
  const double xi = 1.0 / x;
  const double xi2 = 2.0 * xi;
  if (x <= 2.0) {
    const double x2 = 0.5 * x;
    const double pimu = kPi * mu;
    const double fact = std::abs(pimu) < kEps ? 1.0 : pimu / std::sin(pimu);
    double d = -std::log(x2);
    double e = mu * d;
    const double fact2 = std::abs(e) < kEps ? 1.0 : std::sinh(e) / e;
    const auto g = temme_gammas(mu);
    double ff = fact * (g.gam1 * std::cosh(e) + g.gam2 * fact2 * d);
    double sum = ff;
    e = std::exp(e);
    double p = 0.5 * e / g.gampl;
    double q = 0.5 / (e * g.gammi);
    double c = 1.0;
    d = x2 * x2;
    double sum1 = p;
    for (int i = 1; i < 500; ++i) {
      const double di = i;
      ff = (di * ff + p + q) / (di * di - mu * mu);
      c *= d / di;
      p /= di - mu;
      q /= di + mu;
      const double del = c * ff;
      sum += del;
      const double del1 = c * p - di * del;
      sum1 += del1;
      if (std::abs(del) < std::abs(sum) * kEps) break;
    }
    const double scale = scaled ? std::exp(x) : 1.0;
    return {sum * scale, sum1 * xi2 * scale};
  }
  double b = 2.0 * (1.0 + x);
  double d = 1.0 / b;
  double h = d;
  double delh = d;
  double q1 = 0.0;
  double q2 = 1.0;
  const double a1 = 0.25 - mu * mu;
  double q = a1;
  double c = a1;
  double a = -a1;
  double s = 1.0 + q * delh;
  for (int i = 2; i < 100000; ++i) {
    a -= 2.0 * (i - 1);
    c = -a * c / i;
    const double qnew = (q1 - b * q2) / a;
    q1 = q2;
    q2 = qnew;
    q += c * qnew;
    b += 2.0;
    d = 1.0 / (b + a * d);
    delh = (b * d - 1.0) * delh;
    h += delh;
    const double dels = q * delh;
    s += dels;
    if (std::abs(dels / s) < kEps) break;
  }
  h *= a1;
  const double kmu = std::sqrt(kPi / (2.0 * x)) * (scaled ? 1.0 : std::exp(-x)) / s;
  const double k1 = kmu * (mu + x + 0.5 - h) * xi;
  return {kmu, k1};
}

double bessel_k_impl(double nu, double x, bool scaled) {
  if (!(x > 0.0)) throw DomainError("bessel_k: x must be positive");
  if (!std::isfinite(nu)) throw DomainError("bessel_k: order must be finite");
  nu = std::abs(nu);
  const int nl = static_cast<int>(nu + 0.5);
  const double mu = nu - nl;
  auto [kmu, k1] = temme_k(mu, x, scaled);
  const double xi2 = 2.0 / x;
  for (int i = 1; i <= nl; ++i) {
    const double next = (mu + i) * xi2 * k1 + kmu;
    kmu = k1;
    k1 = next;
  }
  return kmu;
}

}  // namespace

double log_gamma(double x) {
  if (!(x > 0.0)) throw DomainError("log_gamma: x must be positive");
  if (!std::isfinite(x)) return x;
  if (x >= 15.0) return log_gamma_stirling(x);
  // Shift into the Stirling range: Γ(x) = Γ(x + k) / (x (x+1) ... (x+k-1)).
  double shifted = x;
  double product = 1.0;
  while (shifted < 15.0) {
    product *= shifted;
    shifted += 1.0;
  }
  return log_gamma_stirling(shifted) - std::log(product);
}

double bessel_k(double nu, double x) { return bessel_k_checked(nu, x).value; }

double bessel_k_scaled(double nu, double x) { return bessel_k_impl(nu, x, true); }

BesselResult bessel_k_checked(double nu, double x) {
  if (!(x > 0.0)) throw DomainError("bessel_k: x must be positive");
  // e^{-x} underflows the normal range past this point.
  constexpr double kUnderflowX = 705.0;
  if (x > kUnderflowX) {
    const double scaled = bessel_k_impl(nu, x, true);
    const double value = scaled * std::exp(-x);
    return {value, value == 0.0 || value < std::numeric_limits<double>::min()};
  }
  return {bessel_k_impl(nu, x, false), false};
}

}  // namespace sgtail::specfun
