#include <doctest.h>

#include <cmath>

#include "sgtail/bounds.hpp"
#include "sgtail/error.hpp"

using namespace sgtail;
using namespace sgtail::bounds;

TEST_CASE("gauss bound values") {
  const auto b = gauss_bound(10.0, 1.0);
  CHECK(b.bound == 1.0 / 225.0);
  CHECK(b.level_d == 10.0);
  CHECK(b.kind == BoundKind::kGaussUnimodal);
  REQUIRE(b.attained_by.has_value());
  CHECK(b.attained_by->exceed_probability() == doctest::Approx(b.bound));
  CHECK(expected_exceedances(50000, b) == doctest::Approx(222.2222222));
  CHECK(expected_exceedances(50000, gauss_bound(40.0, 1.0)) == doctest::Approx(13.8888889));
  // Scale invariance in d / sigma.
  CHECK(gauss_bound(6.0, 3.0).bound == doctest::Approx(gauss_bound(2.0, 1.0).bound));
}

TEST_CASE("gauss bound regime boundary") {
  const double edge = std::sqrt(4.0 / 3.0);
  CHECK(gauss_bound(edge * (1.0 + 1e-12), 1.0).bound == doctest::Approx(1.0 / 3.0));
  CHECK_THROWS_AS(gauss_bound(1.0, 1.0), DomainError);
  CHECK_THROWS_AS(gauss_bound(0.0, 1.0), DomainError);
  CHECK_THROWS_AS(gauss_bound(2.0, -1.0), DomainError);
}

TEST_CASE("chebyshev bound") {
  CHECK(chebyshev_bound(10.0, 1.0).bound == doctest::Approx(0.01));
  CHECK(chebyshev_bound(0.5, 1.0).bound == 1.0);
  CHECK_FALSE(chebyshev_bound(3.0, 1.0).attained_by.has_value());
  CHECK(to_string(BoundKind::kChebyshev) == "chebyshev");
  // Gauss is the sharper bound wherever it applies.
  for (double r : {1.2, 2.0, 10.0, 40.0}) CHECK(gauss_bound(r, 1.0).bound < chebyshev_bound(r, 1.0).bound);
  CHECK_THROWS_AS(expected_exceedances(-1.0, chebyshev_bound(2.0, 1.0)), DomainError);
}
