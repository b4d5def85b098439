#include "aistriu/lp.hpp"

#include "aistriu/common.hpp"

#include <cmath>
#include <limits>

namespace aistriu {
namespace {

constexpr double kEps = 1e-12;

struct Tableau {
  std::vector<std::vector<double>> rows;  // last column is the right-hand side
  std::vector<std::size_t> basis;

  std::size_t rhs() const { return rows.front().size() - 1; }

  void pivot(std::size_t r, std::size_t col) {
    const double piv = rows[r][col];
    for (auto& v : rows[r]) v /= piv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][col] == 0.0) continue;
      const double f = rows[i][col];
      for (std::size_t j = 0; j < rows[i].size(); ++j) rows[i][j] -= f * rows[r][j];
    }
    basis[r] = col;
  }

  // Returns false when unbounded.
  bool optimize(const std::vector<double>& cost, std::size_t allowed_cols) {
    while (true) {
      std::size_t entering = allowed_cols;
      for (std::size_t j = 0; j < allowed_cols; ++j) {
        double reduced = cost[j];
        for (std::size_t i = 0; i < rows.size(); ++i) reduced -= cost[basis[i]] * rows[i][j];
        if (reduced < -kEps) {
          entering = j;
          break;
        }
      }
      if (entering == allowed_cols) return true;
      std::size_t leave = rows.size();
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i][entering] <= kEps) continue;
        double ratio = rows[i][rhs()] / rows[i][entering];
        if (ratio < best - kEps || (std::abs(ratio - best) <= kEps && basis[i] < basis[leave])) {
          best = ratio;
          leave = i;
        }
      }
      if (leave == rows.size()) return false;
      pivot(leave, entering);
    }
  }

  double objective(const std::vector<double>& cost) const {
    double v = 0.0;
    for (std::size_t i = 0; i < rows.size(); ++i) v += cost[basis[i]] * rows[i][rhs()];
    return v;
  }
};

}  // namespace

LpResult solve_lp(const std::vector<double>& c, const std::vector<std::vector<double>>& A,
                  const std::vector<double>& b) {
  const std::size_t m = A.size();
  const std::size_t n = c.size();
  if (b.size() != m) throw Error("lp: row count mismatch");
  LpResult result;
  if (m == 0) {
    result.feasible = true;
    result.x.assign(n, 0.0);
    for (double cj : c) {
      if (cj < -kEps) result.bounded = false;
    }
    return result;
  }

  Tableau t;
  t.rows.assign(m, std::vector<double>(n + m + 1, 0.0));
  for (std::size_t i = 0; i < m; ++i) {
    if (A[i].size() != n) throw Error("lp: column count mismatch");
    const double sign = b[i] < 0 ? -1.0 : 1.0;
    for (std::size_t j = 0; j < n; ++j) t.rows[i][j] = sign * A[i][j];
    t.rows[i][n + i] = 1.0;
    t.rows[i][n + m] = sign * b[i];
    t.basis.push_back(n + i);
  }

  std::vector<double> phase1(n + m, 0.0);
  for (std::size_t i = 0; i < m; ++i) phase1[n + i] = 1.0;
  t.optimize(phase1, n + m);
  if (t.objective(phase1) > 1e-9) return result;
  result.feasible = true;

  // Drive remaining artificials out of the basis; drop redundant rows.
  for (std::size_t i = 0; i < t.rows.size();) {
    if (t.basis[i] < n) {
      ++i;
      continue;
    }
    std::size_t col = n;
    for (std::size_t j = 0; j < n; ++j) {
      if (std::abs(t.rows[i][j]) > 1e-9) {
        col = j;
        break;
      }
    }
    if (col == n) {
      t.rows.erase(t.rows.begin() + static_cast<std::ptrdiff_t>(i));
      t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      t.pivot(i, col);
      ++i;
    }
  }

  std::vector<double> phase2(n + m, 0.0);
  for (std::size_t j = 0; j < n; ++j) phase2[j] = c[j];
  if (!t.rows.empty() && !t.optimize(phase2, n)) {
    result.bounded = false;
    return result;
  }
  result.x.assign(n, 0.0);
  for (std::size_t i = 0; i < t.rows.size(); ++i) result.x[t.basis[i]] = t.rows[i][t.rows[i].size() - 1];
  for (std::size_t j = 0; j < n; ++j) result.value += c[j] * result.x[j];
  return result;
}

double l1_distance_to_hull(const Point& p, const std::vector<Point>& generators) {
  if (generators.empty()) throw Error("hull without generators");
  const std::size_t k = generators.size();
  const std::size_t d = p.size();
  // Variables: weights w (k), then u (d) and v (d) with p - G w = u - v.
  const std::size_t n = k + 2 * d;
  std::vector<double> c(n, 0.0);
  for (std::size_t j = k; j < n; ++j) c[j] = 1.0;
  std::vector<std::vector<double>> A(d + 1, std::vector<double>(n, 0.0));
  std::vector<double> b(d + 1, 0.0);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t i = 0; i < k; ++i) {
      if (generators[i].size() != d) throw Error("generator dimension mismatch");
      A[r][i] = generators[i][r];
    }
    A[r][k + r] = 1.0;
    A[r][k + d + r] = -1.0;
    b[r] = p[r];
  }
  for (std::size_t i = 0; i < k; ++i) A[d][i] = 1.0;
  b[d] = 1.0;
  auto res = solve_lp(c, A, b);
  if (!res.feasible || !res.bounded) throw Error("point-to-hull program failed");
  return std::max(0.0, res.value);
}

double l1_distance(const Point& a, const Point& b) {
  if (a.size() != b.size()) throw Error("dimension mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::abs(a[i] - b[i]);
  return s;
}

}  // namespace aistriu
