#pragma once

#include <functional>
#include <vector>

#include "kstab/laurent.hpp"
#include "kstab/link.hpp"

namespace kstab {

/// Leading Laurent data of the index character: F(xi, t) has pole order
/// dimY with a0 = coeff(t^-dimY)/(dimY-1)! and a1 = coeff(t^-dimY+1)/(dimY-2)!.
struct CharCoeffs {
  RatFunc a0;
  RatFunc a1;
  int dim_y;
};

/// Index character of a weighted C^N, optionally cut by one relation of
/// weight `relation`: product of 1/(1 - e^{-a_i(xi) t}) over the charges,
/// times (1 - e^{-relation(xi) t}) when present.
inline TruncatedLaurent index_character(const std::vector<LinearForm>& charges,
                                        const LinearForm* relation, int order) {
  if (order < 2) throw Error(ErrorCode::Validation, "order must be >= 2 for a0 and a1");
  if (charges.empty()) throw Error(ErrorCode::Validation, "no charges");
  TruncatedLaurent acc = factor_series(charges.front(), order);
  for (size_t i = 1; i < charges.size(); ++i) acc = acc * factor_series(charges[i], order);
  if (relation != nullptr) acc = acc * relation_numerator_series(*relation, order);
  return acc;
}

inline TruncatedLaurent index_character(const WeightedLink& link, int order = 3) {
  auto charges = link.charges();
  if (link.is_hypersurface()) {
    LinearForm w = radial_form(link.nvars(), Rational(link.degree()));
    return index_character(charges, &w, order);
  }
  return index_character(charges, nullptr, order);
}

inline CharCoeffs extract_a_coeffs(const TruncatedLaurent& f, int dim_y) {
  if (dim_y < 1) throw Error(ErrorCode::Validation, "dim Y must be positive");
  if (f.min_degree() != -dim_y)
    throw Error(ErrorCode::PoleOrderMismatch,
                "pole order " + std::to_string(-f.min_degree()) + " but dim Y = " +
                    std::to_string(dim_y));
  if (f.order() < 1)
    throw Error(ErrorCode::Validation, "expansion too short for a1");
  Rational f0(factorial(static_cast<unsigned>(dim_y - 1)));
  Rational f1(dim_y >= 2 ? factorial(static_cast<unsigned>(dim_y - 2)) : BigInt(1));
  CharCoeffs c{f.coeff(-dim_y) * f0.inverse(), f.coeff(-dim_y + 1) * f1.inverse(), dim_y};
  return c;
}

inline CharCoeffs char_coeffs(const WeightedLink& link, int order = 3) {
  return extract_a_coeffs(index_character(link, order), link.dim_y());
}

/// Closed form of a0 from the leading term of each expansion factor:
///   a0 (dimY-1)! = d / (w_0..w_k b0^k prod_j (d^2 b0^2/4 - b_j^2) [d b0/2]),
/// with b0 exponent k = #inner - 1 (an often-printed k-1 does not match the
/// series expansion; the equality with extract_a_coeffs is tested exactly).
/// Ambient mode drops the numerator d and uses exponent #inner.
inline RatFunc closed_form_a0(const WeightedLink& link) {
  int nv = link.nvars();
  MultiPoly num = MultiPoly::constant(
      nv, link.is_hypersurface() ? Rational(link.degree()) : Rational(1));
  Rational wprod(1);
  for (long w : link.inner_weights()) wprod *= Rational(w);
  MultiPoly den = MultiPoly::constant(nv, wprod);
  int inner = static_cast<int>(link.inner_weights().size());
  int b0_exp = link.is_hypersurface() ? inner - 1 : inner;
  if (b0_exp > 0) {
    MultiPoly b0 = MultiPoly::variable(nv, 0);
    den = den * b0.pow(static_cast<unsigned>(b0_exp));
  }
  Rational quarter_d2(link.degree() * link.degree(), 4);
  for (int j = 1; j <= link.rank(); ++j) {
    MultiPoly f = MultiPoly::variable(nv, 0).pow(2) * quarter_d2 -
                  MultiPoly::variable(nv, j).pow(2);
    den = den * f;
  }
  if (link.odd_tail())
    den = den * (MultiPoly::variable(nv, 0) * Rational(link.degree(), 2));
  RatFunc a0(num, den);
  return a0 * Rational(factorial(static_cast<unsigned>(link.dim_y() - 1))).inverse();
}

/// The linear factors of the a0 denominator together with b0 itself; the
/// Sasaki cone is exactly where all of them are strictly positive.
inline std::vector<LinearForm> cone_positivity_factors(const WeightedLink& link) {
  std::vector<LinearForm> out;
  int nv = link.nvars();
  out.push_back(radial_form(nv, Rational(1)));
  Rational half(link.degree(), 2);
  for (int j = 1; j <= link.rank(); ++j) {
    out.push_back(pair_form(nv, half, j, +1));
    out.push_back(pair_form(nv, half, j, -1));
  }
  return out;
}

/// dim H_alpha for alpha = 0..max_degree at the quasi-regular ray, by direct
/// enumeration of exponent vectors. Requires every inner coordinate to be a
/// pure power z_i^{d/w_i} (Brieskorn-Pham form, asserted by the caller and
/// checked by divisibility); the basis is then {z^a : a_0 < d/w_0}.
inline std::vector<long long> hilbert_count_oracle(const WeightedLink& link, int max_degree) {
  if (max_degree < 0) throw Error(ErrorCode::Validation, "max_degree must be >= 0");
  std::vector<long> w = link.weights();
  long long bound0 = -1;  // exponent cap on z_0 in hypersurface mode
  if (link.is_hypersurface()) {
    for (long wi : link.inner_weights())
      if (link.degree() % wi != 0)
        throw Error(ErrorCode::UnsupportedForOracle,
                    "inner weight " + std::to_string(wi) + " does not divide the degree");
    bound0 = link.degree() / w.front();
  }
  std::vector<long long> counts(static_cast<size_t>(max_degree) + 1, 0);
  // depth-first over exponent vectors with bounded weighted degree
  std::function<void(size_t, long long)> walk = [&](size_t i, long long deg) {
    if (i == w.size()) {
      counts[static_cast<size_t>(deg)] += 1;
      return;
    }
    long long cap = (i == 0 && bound0 >= 0) ? bound0 - 1 : max_degree;
    for (long long e = 0; e <= cap; ++e) {
      long long d2 = deg + e * w[i];
      if (d2 > max_degree) break;
      walk(i + 1, d2);
    }
  };
  walk(0, 0);
  return counts;
}

/// Truncated expansion of (1 - q^d) / prod_i (1 - q^{w_i}) at the
/// quasi-regular ray (the numerator only in hypersurface mode).
inline std::vector<long long> quasi_regular_expansion(const WeightedLink& link, int max_degree) {
  std::vector<long long> dp(static_cast<size_t>(max_degree) + 1, 0);
  dp[0] = 1;
  for (long w : link.weights())
    for (int a = static_cast<int>(w); a <= max_degree; ++a)
      dp[static_cast<size_t>(a)] += dp[static_cast<size_t>(a - w)];
  if (!link.is_hypersurface()) return dp;
  std::vector<long long> out(dp);
  for (int a = static_cast<int>(link.degree()); a <= max_degree; ++a)
    out[static_cast<size_t>(a)] -= dp[static_cast<size_t>(a - link.degree())];
  return out;
}

}  // namespace kstab
