#pragma once

#include <vector>

#include "kstab/multipoly.hpp"

namespace kstab {

/// Homogeneous linear function of the Reeb parameters (b0, ..., br):
/// the charge of one coordinate function under the torus.
struct LinearForm {
  std::vector<Rational> coeffs;

  LinearForm() = default;
  explicit LinearForm(std::vector<Rational> c) : coeffs(std::move(c)) {}

  int nvars() const { return static_cast<int>(coeffs.size()); }

  bool is_zero() const {
    for (const auto& c : coeffs)
      if (!c.is_zero()) return false;
    return true;
  }

  /// Value at a point of the Lie algebra (also the pairing with a direction).
  Rational eval(const std::vector<Rational>& v) const {
    Rational acc(0);
    for (size_t i = 0; i < coeffs.size(); ++i) acc += coeffs[i] * v[i];
    return acc;
  }

  MultiPoly to_poly() const {
    MultiPoly p(nvars());
    for (int i = 0; i < nvars(); ++i) {
      if (coeffs[i].is_zero()) continue;
      p += MultiPoly::variable(nvars(), i) * coeffs[i];
    }
    return p;
  }

  friend bool operator==(const LinearForm& a, const LinearForm& b) {
    return a.coeffs == b.coeffs;
  }
};

/// alpha = s * b0
inline LinearForm radial_form(int nvars, const Rational& s) {
  std::vector<Rational> c(nvars, Rational(0));
  c[0] = s;
  return LinearForm(std::move(c));
}

/// alpha = s * b0 + sign * b_j
inline LinearForm pair_form(int nvars, const Rational& s, int j, int sign) {
  std::vector<Rational> c(nvars, Rational(0));
  c[0] = s;
  c.at(j) = Rational(sign);
  return LinearForm(std::move(c));
}

}  // namespace kstab
