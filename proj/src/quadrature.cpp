#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <vector>

#include "sgtail/error.hpp"
#include "sgtail/specfun.hpp"

namespace sgtail::specfun {

namespace {

// 7-point Gauss / 15-point Kronrod nodes and weights on [-1, 1].
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000,
};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
};

struct Segment {
  double a, b, value, error;
  bool operator<(const Segment& other) const { return error < other.error; }
};

template <class F>
Segment gauss_kronrod(const F& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = fc * kWgk[7];
  double gauss = fc * kWg[3];
  double abs_sum = std::abs(kronrod);
  std::array<double, 7> f1{}, f2{};
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    f1[j] = f(center - dx);
    f2[j] = f(center + dx);
    kronrod += kWgk[j] * (f1[j] + f2[j]);
    abs_sum += kWgk[j] * (std::abs(f1[j]) + std::abs(f2[j]));
    if (j % 2 == 1) gauss += kWg[j / 2] * (f1[j] + f2[j]);
  }
  // QUADPACK-style error scaling.
  const double mean = kronrod * 0.5;
  double asc = kWgk[7] * std::abs(fc - mean);
  for (int j = 0; j < 7; ++j) asc += kWgk[j] * (std::abs(f1[j] - mean) + std::abs(f2[j] - mean));
  asc *= std::abs(half);
  double err = std::abs((kronrod - gauss) * half);
  if (asc != 0.0 && err != 0.0) err = asc * std::min(1.0, std::pow(200.0 * err / asc, 1.5));
  const double resabs = abs_sum * std::abs(half);
  constexpr double kUflow = std::numeric_limits<double>::min() / std::numeric_limits<double>::epsilon();
  if (resabs > kUflow) err = std::max(err, 50.0 * std::numeric_limits<double>::epsilon() * resabs);
  return {a, b, kronrod * half, err};
}

template <class F>
QuadratureResult adaptive(const F& f, double a, double b, const QuadratureSpec& spec) {
  std::priority_queue<Segment> heap;
  Segment first = gauss_kronrod(f, a, b);
  double total = first.value;
  double total_err = first.error;
  heap.push(first);
  int count = 1;
  auto converged = [&] { return total_err <= std::max(spec.abs_tol, spec.rel_tol * std::abs(total)); };
  while (!converged()) {
    if (count >= spec.max_subdivisions) {
      throw NonConvergence("integrate: subdivision limit reached", total, total_err);
    }
    const Segment worst = heap.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      throw NonConvergence("integrate: interval too small to bisect", total, total_err);
    }
    heap.pop();
    const Segment left = gauss_kronrod(f, worst.a, mid);
    const Segment right = gauss_kronrod(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    ++count;
    // Drift in the running sums is removed periodically.
    if (count % 64 == 0) {
      auto copy = heap;
      total = 0.0;
      total_err = 0.0;
      while (!copy.empty()) {
        total += copy.top().value;
        total_err += copy.top().error;
        copy.pop();
      }
    }
  }
  return {total, total_err, count};
}

}  // namespace

QuadratureResult integrate(const Integrand& f, double a, double b, const QuadratureSpec& spec) {
  spec.validate();
  if (std::isnan(a) || std::isnan(b) || std::isinf(a)) {
    throw DomainError("integrate: lower limit must be finite");
  }
  if (b == a) return {};
  if (std::isinf(b)) {
    if (b < 0) throw DomainError("integrate: upper limit of -infinity is not supported");
    auto mapped = [&f, a](double u) {
      const double x = a + (1.0 - u) / u;
      const double value = f(x);
      return value == 0.0 ? 0.0 : value / (u * u);
    };
    return adaptive(mapped, 0.0, 1.0, spec);
  }
  if (a > b) {
    auto r = adaptive(f, b, a, spec);
    r.value = -r.value;
    return r;
  }
  return adaptive(f, a, b, spec);
}

}  // namespace sgtail::specfun
