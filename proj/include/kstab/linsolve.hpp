#pragma once

#include <vector>

#include "kstab/rational.hpp"

namespace kstab {

/// Solves G x = v exactly for square rational G via Bareiss fraction-free
/// elimination on the denominator-cleared integer matrix. Throws
/// SingularSystem when G is singular.
inline std::vector<Rational> solve_linear(const std::vector<std::vector<Rational>>& G,
                                          const std::vector<Rational>& v) {
  const size_t n = G.size();
  if (n == 0) return {};
  for (const auto& row : G)
    if (row.size() != n) throw Error(ErrorCode::Validation, "matrix not square");
  if (v.size() != n) throw Error(ErrorCode::Validation, "rhs size mismatch");

  // clear denominators row by row
  std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n + 1));
  for (size_t i = 0; i < n; ++i) {
    BigInt l(1);
    for (size_t j = 0; j < n; ++j) l = lcm(l, G[i][j].denominator());
    l = lcm(l, v[i].denominator());
    for (size_t j = 0; j < n; ++j)
      m[i][j] = G[i][j].numerator() * (l / G[i][j].denominator());
    m[i][n] = v[i].numerator() * (l / v[i].denominator());
  }

  BigInt prev(1);
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) throw Error(ErrorCode::SingularSystem, "zero pivot column");
      std::swap(m[k], m[p]);
      // row swap flips the determinant sign; keep Bareiss exact by negating
      for (auto& x : m[k]) x = -x;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j <= n; ++j) {
        BigInt t = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = m[k][k];
  }
  if (m[n - 1][n - 1] == 0) throw Error(ErrorCode::SingularSystem, "singular matrix");

  std::vector<Rational> x(n);
  for (size_t i = n; i-- > 0;) {
    Rational acc(m[i][n]);
    for (size_t j = i + 1; j < n; ++j) acc -= Rational(m[i][j]) * x[j];
    x[i] = acc / Rational(m[i][i]);
  }
  return x;
}

}  // namespace kstab
