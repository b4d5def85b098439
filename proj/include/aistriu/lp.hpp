#pragma once

#include <vector>

namespace aistriu {

using Point = std::vector<double>;

struct LpResult {
  bool feasible = false;
  bool bounded = true;
  double value = 0.0;
  std::vector<double> x;
};

// minimize c.x subject to A x = b, x >= 0. Dense two-phase simplex with
// Bland's rule; meant for the handful of variables used here.
LpResult solve_lp(const std::vector<double>& c, const std::vector<std::vector<double>>& A,
                  const std::vector<double>& b);

// min over convex weights w of |p - sum_i w_i g_i|_1.
double l1_distance_to_hull(const Point& p, const std::vector<Point>& generators);

double l1_distance(const Point& a, const Point& b);

}  // namespace aistriu
