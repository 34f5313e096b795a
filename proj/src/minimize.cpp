#include "sgtail/minimize.hpp"

#include <algorithm>
#include <cmath>

namespace sgtail::opt {

namespace {

Point2 project(Point2 p, const Box2& box) {
  for (int i = 0; i < 2; ++i) p[i] = std::clamp(p[i], box.lo[i], box.hi[i]);
  return p;
}

Point2 lerp(const Point2& a, const Point2& b, double t) {
  return {a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])};
}

}  // namespace

MinimizeResult nelder_mead_2d(const std::function<double(const Point2&)>& f, Point2 start, const Box2& box,
                              Point2 step, int max_iter, double tol) {
  struct Vertex {
    Point2 x;
    double fx;
  };
  start = project(start, box);
  std::array<Vertex, 3> simplex;
  simplex[0] = {start, f(start)};
  for (int i = 0; i < 2; ++i) {
    Point2 p = start;
    p[i] += step[i];
    if (p[i] > box.hi[i]) p[i] = start[i] - step[i];
    p = project(p, box);
    simplex[i + 1] = {p, f(p)};
  }
  auto by_value = [](const Vertex& a, const Vertex& b) { return a.fx < b.fx; };

  MinimizeResult result;
  int iter = 0;
  for (; iter < max_iter; ++iter) {
    std::sort(simplex.begin(), simplex.end(), by_value);
    bool small = true;
    for (int d = 0; d < 2; ++d) {
      const double spread = std::max(std::abs(simplex[1].x[d] - simplex[0].x[d]),
                                     std::abs(simplex[2].x[d] - simplex[0].x[d]));
      if (spread > tol * (1.0 + std::abs(simplex[0].x[d]))) small = false;
    }
    if (small) {
      result.converged = true;
      break;
    }
    const Point2 centroid = lerp(simplex[0].x, simplex[1].x, 0.5);
    const Vertex& worst = simplex[2];
    const Point2 xr = project(lerp(worst.x, centroid, 2.0), box);
    const double fr = f(xr);
    if (fr < simplex[0].fx) {
      const Point2 xe = project(lerp(worst.x, centroid, 3.0), box);
      const double fe = f(xe);
      simplex[2] = fe < fr ? Vertex{xe, fe} : Vertex{xr, fr};
      continue;
    }
    if (fr < simplex[1].fx) {
      simplex[2] = {xr, fr};
      continue;
    }
    // Contraction: outside if the reflection improved on the worst point.
    const bool outside = fr < worst.fx;
    const Point2 xc = outside ? lerp(centroid, xr, 0.5) : lerp(centroid, worst.x, 0.5);
    const double fc = f(xc);
    if (fc < (outside ? fr : worst.fx)) {
      simplex[2] = {xc, fc};
      continue;
    }
    for (int i = 1; i < 3; ++i) {
      const Point2 xs = lerp(simplex[0].x, simplex[i].x, 0.5);
      simplex[i] = {xs, f(xs)};
    }
  }
  std::sort(simplex.begin(), simplex.end(), by_value);
  result.x = simplex[0].x;
  result.value = simplex[0].fx;
  result.iterations = iter;
  return result;
}

}  // namespace sgtail::opt
