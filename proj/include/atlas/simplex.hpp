#ifndef ATLAS_SIMPLEX_HPP
#define ATLAS_SIMPLEX_HPP

#include <optional>
#include <vector>

#include "atlas/field.hpp"

namespace atlas {

// Exact rational simplex, primal two-phase with Bland's rule.  Instances in
// this project are tiny (at most ~130 rows), so a dense tableau is the right
// tool: termination is guaranteed and every verdict is exact.
class SimplexLP {
 public:
  enum class Status { Optimal, Infeasible, Unbounded };

  struct Result {
    Status status;
    Rat value;             // objective value when Optimal
    std::vector<Rat> x;    // primal solution when Optimal
  };

  // maximize c.x  subject to  A x = b, x >= 0
  static Result solve_max(const std::vector<std::vector<Rat>>& A,
                          const std::vector<Rat>& b, const std::vector<Rat>& c);
};

inline SimplexLP::Result SimplexLP::solve_max(
    const std::vector<std::vector<Rat>>& A, const std::vector<Rat>& b,
    const std::vector<Rat>& c) {
  const std::size_t m = A.size();
  const std::size_t n = c.size();
  // tableau: m rows x (n + m artificial + 1 rhs)
  std::size_t width = n + m + 1;
  std::vector<std::vector<Rat>> T(m, std::vector<Rat>(width, Rat(0)));
  for (std::size_t i = 0; i < m; ++i) {
    bool flip = sgn(b[i]) < 0;
    for (std::size_t j = 0; j < n; ++j) T[i][j] = flip ? Rat(-A[i][j]) : A[i][j];
    T[i][n + i] = 1;
    T[i][width - 1] = flip ? Rat(-b[i]) : b[i];
  }
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

  // Reduced-cost rows for the phase-1 and the real objective, updated by the
  // same pivots as the constraint rows.
  std::vector<Rat> obj1(width, Rat(0)), obj2(width, Rat(0));
  Rat v1(0), v2(0);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < m; ++i) obj1[j] += T[i][j];
    obj2[j] = c[j];
  }
  for (std::size_t i = 0; i < m; ++i) v1 -= T[i][width - 1];

  auto pivot = [&](std::size_t r, std::size_t jc) {
    Rat p = T[r][jc];
    for (auto& e : T[r]) e /= p;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || sgn(T[i][jc]) == 0) continue;
      Rat f = T[i][jc];
      for (std::size_t j = 0; j < width; ++j) T[i][j] -= f * T[r][j];
    }
    if (sgn(obj1[jc]) != 0) {
      Rat f = obj1[jc];
      for (std::size_t j = 0; j < width; ++j) obj1[j] -= f * T[r][j];
      v1 += f * T[r][width - 1];
    }
    if (sgn(obj2[jc]) != 0) {
      Rat f = obj2[jc];
      for (std::size_t j = 0; j < width; ++j) obj2[j] -= f * T[r][j];
      v2 += f * T[r][width - 1];
    }
    basis[r] = jc;
  };

  // Bland: entering = least-index column with positive reduced cost; leaving =
  // least ratio, ties broken by least basis index.
  auto run = [&](std::vector<Rat>& obj, std::size_t ncols) -> bool {
    for (;;) {
      std::size_t enter = ncols;
      for (std::size_t j = 0; j < ncols; ++j)
        if (sgn(obj[j]) > 0) {
          enter = j;
          break;
        }
      if (enter == ncols) return true;  // optimal
      std::size_t leave = m;
      Rat best;
      for (std::size_t i = 0; i < m; ++i) {
        if (sgn(T[i][enter]) <= 0) continue;
        Rat ratio = T[i][width - 1] / T[i][enter];
        if (leave == m || ratio < best ||
            (ratio == best && basis[i] < basis[leave])) {
          best = ratio;
          leave = i;
        }
      }
      if (leave == m) return false;  // unbounded
      pivot(leave, enter);
    }
  };

  // Phase 1: maximize -sum(artificials).
  run(obj1, n + m);
  if (sgn(v1) < 0) return {Status::Infeasible, Rat(0), {}};

  // Drive leftover artificials out of the basis; a row where that is not
  // possible is redundant and can be zeroed out (its basic artificial stays
  // at value 0 and never moves again).
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < n) continue;
    std::size_t jc = n;
    for (std::size_t j = 0; j < n; ++j)
      if (sgn(T[i][j]) != 0) {
        jc = j;
        break;
      }
    if (jc < n) pivot(i, jc);
  }

  // Phase 2: forbid artificial columns by erasing their reduced costs.
  for (std::size_t j = n; j < n + m; ++j) obj2[j] = 0;
  bool ok = run(obj2, n);
  if (!ok) return {Status::Unbounded, Rat(0), {}};
  std::vector<Rat> x(n, Rat(0));
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < n) x[basis[i]] = T[i][width - 1];
  return {Status::Optimal, v2, x};
}

// Strictly positive coefficients c_j with sum c_j p_j = 0 and sum c_j = 1,
// when they exist.  Solved as: maximize t subject to sum_j (t + s_j) p_j = 0,
// sum_j (t + s_j) = 1, t >= 0, s_j >= 0; the optimum is the best attainable
// minimum coefficient.
inline std::optional<std::vector<Rat>> positive_combination_zero(
    const std::vector<std::vector<long>>& points) {
  if (points.empty()) throw std::invalid_argument("no points");
  const std::size_t n = points.size();
  const std::size_t d = points[0].size();
  for (const auto& p : points)
    if (p.size() != d)
      throw std::invalid_argument("dimension mismatch among points");

  std::vector<std::vector<Rat>> A(d + 1, std::vector<Rat>(n + 1, Rat(0)));
  std::vector<Rat> b(d + 1, Rat(0)), obj(n + 1, Rat(0));
  // variable 0 = t, variables 1..n = s_j
  for (std::size_t r = 0; r < d; ++r) {
    Rat colsum(0);
    for (std::size_t j = 0; j < n; ++j) {
      A[r][j + 1] = Rat(points[j][r]);
      colsum += Rat(points[j][r]);
    }
    A[r][0] = colsum;
  }
  A[d][0] = Rat(static_cast<long>(n));
  for (std::size_t j = 0; j < n; ++j) A[d][j + 1] = 1;
  b[d] = 1;
  obj[0] = 1;

  auto res = SimplexLP::solve_max(A, b, obj);
  if (res.status != SimplexLP::Status::Optimal || sgn(res.value) <= 0)
    return std::nullopt;
  std::vector<Rat> coeffs(n);
  for (std::size_t j = 0; j < n; ++j) coeffs[j] = res.x[0] + res.x[j + 1];
  return coeffs;
}

// Position of the origin relative to the convex hull of integer points
// (within their affine span): outside, on the boundary, or in the relative
// interior.
enum class HullPosition { Outside, Boundary, Interior };

inline HullPosition origin_hull_position(
    const std::vector<std::vector<long>>& points) {
  const std::size_t n = points.size();
  const std::size_t d = points.empty() ? 0 : points[0].size();
  std::vector<std::vector<Rat>> A(d + 1, std::vector<Rat>(n + 1, Rat(0)));
  std::vector<Rat> b(d + 1, Rat(0)), obj(n + 1, Rat(0));
  for (std::size_t r = 0; r < d; ++r) {
    Rat colsum(0);
    for (std::size_t j = 0; j < n; ++j) {
      A[r][j + 1] = Rat(points[j][r]);
      colsum += Rat(points[j][r]);
    }
    A[r][0] = colsum;
  }
  A[d][0] = Rat(static_cast<long>(n));
  for (std::size_t j = 0; j < n; ++j) A[d][j + 1] = 1;
  b[d] = 1;
  obj[0] = 1;
  auto res = SimplexLP::solve_max(A, b, obj);
  if (res.status != SimplexLP::Status::Optimal) return HullPosition::Outside;
  return sgn(res.value) > 0 ? HullPosition::Interior : HullPosition::Boundary;
}

// sup { c.w : A w >= 0, sum w = 0 } over the rational cone; the only possible
// values are 0 and +infinity, so the question reduces to feasibility of
// { A w >= 0, sum w = 0, c.w = 1 } with w free.
inline bool cone_max_is_zero(const std::vector<std::vector<long>>& cone_rows,
                             const std::vector<long>& objective) {
  const std::size_t d = objective.size();
  const std::size_t m = cone_rows.size();
  // w = u - v with u, v >= 0; slack per inequality row.
  const std::size_t n = 2 * d + m;
  std::vector<std::vector<Rat>> A(m + 2, std::vector<Rat>(n, Rat(0)));
  std::vector<Rat> b(m + 2, Rat(0)), obj(n, Rat(0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      A[i][j] = Rat(cone_rows[i][j]);
      A[i][d + j] = Rat(-cone_rows[i][j]);
    }
    A[i][2 * d + i] = -1;  // A w - s = 0, s >= 0
  }
  for (std::size_t j = 0; j < d; ++j) {
    A[m][j] = 1;
    A[m][d + j] = -1;
  }
  for (std::size_t j = 0; j < d; ++j) {
    A[m + 1][j] = Rat(objective[j]);
    A[m + 1][d + j] = Rat(-objective[j]);
  }
  b[m + 1] = 1;
  auto res = SimplexLP::solve_max(A, b, obj);
  return res.status == SimplexLP::Status::Infeasible;
}

}  // namespace atlas

#endif
