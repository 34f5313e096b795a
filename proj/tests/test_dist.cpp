#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "sgtail/dist.hpp"
#include "sgtail/error.hpp"
#include "sgtail/ks.hpp"
#include "sgtail/specfun.hpp"

using namespace sgtail;
using namespace sgtail::dist;

TEST_CASE("symmetrized gamma construction and closed forms") {
  CHECK_THROWS_AS(SymmetrizedGamma(0.0), DomainError);
  CHECK_THROWS_AS(SymmetrizedGamma(-2.0), DomainError);
  const SymmetrizedGamma law(4.0);
  CHECK(law.bessel_order() == doctest::Approx(-0.25));
  CHECK(law.singular_at_zero());
  CHECK_FALSE(SymmetrizedGamma(1.5).singular_at_zero());
  CHECK(sg_kurtosis(law) == 15.0);
  CHECK(sg_cf(law, 0.0) == 1.0);
  CHECK(sg_cf(law, 0.7) == doctest::Approx(std::pow(1.0 + 4.0 * 0.49, -0.25)).epsilon(1e-15));
  CHECK(sg_cf(law, -0.7) == sg_cf(law, 0.7));
}

TEST_CASE("m = 1 is the Laplace law with unit scale") {
  const SymmetrizedGamma law(1.0);
  for (double x : {0.0, 0.3, 1.0, 2.0, 7.5}) {
    CHECK(sg_pdf(law, x) == doctest::Approx(0.5 * std::exp(-x)).epsilon(1e-12));
    CHECK(sg_cdf(law, x) == doctest::Approx(1.0 - 0.5 * std::exp(-x)).epsilon(1e-10));
    CHECK(sg_cdf(law, -x) == doctest::Approx(0.5 * std::exp(-x)).epsilon(1e-10));
  }
}

TEST_CASE("pdf against characteristic-function inversion") {
  // (1/π)∫cos(tx)(1+mt²)^{-1/m}dt evaluated to 30 digits.
  CHECK(sg_pdf(SymmetrizedGamma(10.0), 1.0) == doctest::Approx(0.0592479614235358145).epsilon(1e-10));
  CHECK(sg_pdf(SymmetrizedGamma(10.0), 0.5) == doctest::Approx(0.124965437412266711).epsilon(1e-10));
  CHECK(sg_pdf(SymmetrizedGamma(50.0), 2.0) == doctest::Approx(0.0072066114729001016).epsilon(1e-10));
  CHECK(sg_pdf(SymmetrizedGamma(50.0), -2.0) == sg_pdf(SymmetrizedGamma(50.0), 2.0));
}

TEST_CASE("pdf at the origin") {
  CHECK_THROWS_AS(sg_pdf(SymmetrizedGamma(2.0), 0.0), DomainError);
  CHECK_THROWS_AS(sg_pdf(SymmetrizedGamma(10.0), 0.0), DomainError);
  // Continuous at 0 for m < 2.
  const SymmetrizedGamma law(0.5);
  CHECK(sg_pdf(law, 0.0) == doctest::Approx(sg_pdf(law, 1e-7)).epsilon(1e-6));
}

TEST_CASE("cdf values, symmetry and monotonicity") {
  const SymmetrizedGamma law(50.0);
  CHECK(sg_cdf(law, 5.0) == doctest::Approx(0.99266221707885864).epsilon(1e-9));
  CHECK(sg_cdf(law, 0.0) == 0.5);
  for (double m : {0.3, 2.0, 10.0, 100.0}) {
    const SymmetrizedGamma l(m);
    double prev = 0.0;
    for (double x = -30.0; x <= 30.0; x += 0.75) {
      const double f = sg_cdf(l, x);
      CHECK(f >= prev);
      CHECK(f + sg_cdf(l, -x) == doctest::Approx(1.0).epsilon(1e-9));
      prev = f;
    }
    CHECK(sg_survival(l, 3.0) == doctest::Approx(1.0 - sg_cdf(l, 3.0)).epsilon(1e-9));
  }
}

TEST_CASE("cdf_sorted agrees with pointwise cdf") {
  for (double m : {0.5, 3.0, 100.0}) {
    const SymmetrizedGamma law(m);
    std::vector<double> xs = {-12.0, -2.0, -0.4, -1e-3, 0.0, 2e-3, 0.7, 1.0, 1.3, 6.0, 40.0};
    const auto sorted = sg_cdf_sorted(law, xs);
    for (std::size_t i = 0; i < xs.size(); ++i) CHECK(sorted[i] == doctest::Approx(sg_cdf(law, xs[i])).epsilon(1e-9));
  }
}

TEST_CASE("far tail keeps relative accuracy") {
  const SymmetrizedGamma law(1.0);
  CHECK(sg_survival(law, 200.0) == doctest::Approx(0.5 * std::exp(-200.0)).epsilon(1e-8));
}

TEST_CASE("two-sided exceedance in both deviation units") {
  const SymmetrizedGamma law(10.0);
  CHECK(sg_two_sided_exceed(law, 10.0) == doctest::Approx(5.89843e-05).epsilon(1e-5));
  CHECK(sg_two_sided_exceed(law, 10.0, DeviationUnit::kStdDev) ==
        doctest::Approx(2.0 * sg_survival(law, 10.0 * std::sqrt(2.0))).epsilon(1e-12));
  CHECK(sg_two_sided_exceed(SymmetrizedGamma(1.0), 1e-4) == doctest::Approx(1.0).epsilon(1e-3));
  CHECK(deviation_unit_length(DeviationUnit::kTableUnit) == 2.0);
}

TEST_CASE("gamma sampler moments") {
  for (double shape : {0.02, 0.3, 1.0, 4.5}) {
    Rng rng(77);
    constexpr int kN = 200000;
    double s = 0.0, s2 = 0.0;
    for (int i = 0; i < kN; ++i) {
      const double g = gamma_sample(shape, 2.0, rng);
      CHECK_FALSE(g < 0.0);
      s += g;
      s2 += g * g;
    }
    const double mean = s / kN, var = s2 / kN - mean * mean;
    CAPTURE(shape);
    CHECK(std::abs(mean - 2.0 * shape) < 4.0 * std::sqrt(4.0 * shape / kN));
    CHECK(var == doctest::Approx(4.0 * shape).epsilon(0.1));
  }
  Rng rng(1);
  CHECK_THROWS_AS(gamma_sample(0.0, 1.0, rng), DomainError);
}

TEST_CASE("symmetrized gamma sampler passes KS") {
  for (double m : {0.5, 20.0}) {
    const SymmetrizedGamma law(m);
    Rng rng(99);
    auto xs = sg_sample(law, rng, 50000);
    std::sort(xs.begin(), xs.end());
    const double ks = stats::ks_statistic_from_cdf(xs, sg_cdf_sorted(law, xs));
    CHECK(ks < stats::ks_critical_value(xs.size(), 0.01));
  }
}

TEST_CASE("poisson sampler means") {
  for (double mean : {0.0, 0.7, 9.5, 10.5, 250.0}) {
    Rng rng(5);
    constexpr int kN = 100000;
    double s = 0.0;
    for (int i = 0; i < kN; ++i) s += static_cast<double>(poisson_sample(mean, rng));
    CHECK(std::abs(s / kN - mean) <= 4.0 * std::sqrt(std::max(mean, 1e-9) / kN) + 1e-12);
  }
}

TEST_CASE("extremal mixture") {
  CHECK_THROWS_AS(GaussExtremalMixture(0.0, 1.0, 1.0), DomainError);
  const GaussExtremalMixture mix(0.0, 1.0, 10.0);
  CHECK(mix.exceed_probability() == doctest::Approx(1.0 / 225.0));
  CHECK(mix.rect_weight() + mix.atom_weight() == doctest::Approx(1.0));
  Rng rng(3);
  double s2 = 0.0;
  constexpr int kN = 400000;
  for (int i = 0; i < kN; ++i) {
    const double x = extremal_sample(mix, rng);
    CHECK(std::abs(x) <= 15.0);
    s2 += x * x;
  }
  CHECK(s2 / kN == doctest::Approx(1.0).epsilon(0.05));  // variance sigma^2
}

TEST_CASE("stable law") {
  CHECK_THROWS_AS(SymmetricStable(0.0, 1.0), DomainError);
  CHECK_THROWS_AS(SymmetricStable(2.1, 1.0), DomainError);
  CHECK_THROWS_AS(SymmetricStable(1.5, 0.0), DomainError);
  const SymmetricStable s(1.5, 0.8);
  CHECK(stable_cf(s, 2.0) == doctest::Approx(std::exp(-0.8 * std::pow(2.0, 1.5))));
  CHECK(stable_cdf(s, 0.0) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(stable_cdf(s, 1.3) + stable_cdf(s, -1.3) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(stable_cdf(SymmetricStable(1.0, 1.0), 1.0) == doctest::Approx(0.75).epsilon(1e-9));
  CHECK(stable_cdf(SymmetricStable(2.0, 1.0), 1.0) == doctest::Approx(0.760249938907).epsilon(1e-9));
  CHECK(normal_two_sided_tail(1.959963984540054) == doctest::Approx(0.05).epsilon(1e-12));
}
