#include "gefstab/linsolve.hpp"

#include <utility>

namespace gefstab {

std::optional<std::vector<Rational>> solve_linear(std::vector<std::vector<Rational>> rows,
                                                  std::vector<Rational> rhs, std::size_t nunknowns) {
  const std::size_t m = rows.size();
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < nunknowns && r < m; ++c) {
    std::size_t p = r;
    while (p < m && sgn(rows[p][c]) == 0) ++p;
    if (p == m) continue;
    std::swap(rows[p], rows[r]);
    std::swap(rhs[p], rhs[r]);
    const Rational inv = 1 / rows[r][c];
    for (std::size_t k = c; k < nunknowns; ++k) rows[r][k] *= inv;
    rhs[r] *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || sgn(rows[i][c]) == 0) continue;
      const Rational f = rows[i][c];
      for (std::size_t k = c; k < nunknowns; ++k) rows[i][k] -= f * rows[r][k];
      rhs[i] -= f * rhs[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < m; ++i) {
    if (sgn(rhs[i]) != 0) return std::nullopt;
  }
  std::vector<Rational> x(nunknowns, Rational(0));
  for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = rhs[i];
  return x;
}

}  // namespace gefstab

namespace gefstab {

std::size_t rank(std::vector<std::vector<Rational>> rows) {
  if (rows.empty()) return 0;
  const std::size_t m = rows.size(), n = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = r;
    while (p < m && sgn(rows[p][c]) == 0) ++p;
    if (p == m) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t i = r + 1; i < m; ++i) {
      if (sgn(rows[i][c]) == 0) continue;
      const Rational f = rows[i][c] / rows[r][c];
      for (std::size_t k = c; k < n; ++k) rows[i][k] -= f * rows[r][k];
    }
    ++r;
  }
  return r;
}

}  // namespace gefstab
