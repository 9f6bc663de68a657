#include "linalg.hpp"

#include <cstddef>
#include <utility>

namespace kltan::detail {

std::optional<std::vector<Rational>> solve_exact(const std::vector<std::vector<Rational>>& rows,
                                                 const std::vector<Rational>& rhs,
                                                 int columns) {
  const std::size_t m = rows.size();
  const auto n = static_cast<std::size_t>(columns);
  std::vector<std::vector<Rational>> a(m, std::vector<Rational>(n + 1));
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < n; ++c) a[r][c] = rows[r][c];
    a[r][n] = rhs[r];
  }

  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    std::size_t p = row;
    while (p < m && a[p][col].numerator() == 0) ++p;
    if (p == m) continue;
    std::swap(a[p], a[row]);
    const Rational inv = Rational(1) / a[row][col];
    for (auto& v : a[row]) v *= inv;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == row || a[r][col].numerator() == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t c = col; c <= n; ++c) a[r][c] -= f * a[row][c];
    }
    pivot_col.push_back(col);
    ++row;
  }
  // A zero row with nonzero right-hand side means no solution.
  for (std::size_t r = row; r < m; ++r) {
    if (a[r][n].numerator() != 0) return std::nullopt;
  }
  std::vector<Rational> x(n, Rational(0));
  for (std::size_t r = 0; r < pivot_col.size(); ++r) x[pivot_col[r]] = a[r][n];
  return x;
}

}  // namespace kltan::detail
