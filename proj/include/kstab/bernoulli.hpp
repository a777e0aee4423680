#pragma once

#include <vector>

#include "kstab/rational.hpp"

namespace kstab {

/// Bernoulli numbers for the convention t/(1 - e^{-t}) = sum B_m t^m / m!,
/// i.e. B_1 = +1/2. Recurrence: sum_{j=0}^{m} C(m+1, j) B_j = m + 1.
inline std::vector<Rational> bernoulli_upto(unsigned m) {
  std::vector<Rational> b;
  b.reserve(m + 1);
  for (unsigned k = 0; k <= m; ++k) {
    Rational acc(k + 1);
    for (unsigned j = 0; j < k; ++j) acc -= Rational(binomial(k + 1, j)) * b[j];
    b.push_back(acc / Rational(k + 1));
  }
  return b;
}

inline Rational bernoulli(unsigned m) { return bernoulli_upto(m)[m]; }

}  // namespace kstab
