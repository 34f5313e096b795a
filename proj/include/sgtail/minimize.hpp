#pragma once

#include <array>
#include <functional>

namespace sgtail::opt {

using Point2 = std::array<double, 2>;

struct Box2 {
  Point2 lo;
  Point2 hi;
};

struct MinimizeResult {
  Point2 x{};
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
};

/// Deterministic Nelder–Mead simplex search in two dimensions with every
/// trial point projected into `box`. Stops when the simplex spans less than
/// `tol` (relative to 1 + |x|) in every coordinate, or after `max_iter`
/// iterations. The initial simplex is start, start + step[0] e0, start + step[1] e1.
MinimizeResult nelder_mead_2d(const std::function<double(const Point2&)>& f, Point2 start, const Box2& box,
                              Point2 step, int max_iter = 500, double tol = 1e-10);

}  // namespace sgtail::opt
