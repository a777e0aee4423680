#pragma once

#include <vector>

#include "kstab/char_series.hpp"
#include "kstab/linsolve.hpp"

namespace kstab {

using DirectionVector = std::vector<Rational>;

/// Leading weight-character coefficients for the product configuration
/// generated by a fixed direction zeta, as functions on the cone. With
/// m = dimY: b0 = -D_zeta a0 / m, b1 = -D_zeta a1 / (m-1),
/// c0 = D^2_zeta a0 / (m (m+1)).
struct DerivedCoeffs {
  RatFunc b0;
  RatFunc b1;
  RatFunc c0;
};

inline DerivedCoeffs derived_coeffs(const CharCoeffs& c, const DirectionVector& zeta) {
  if (c.dim_y < 2)
    throw Error(ErrorCode::DimensionTooSmall, "b1 needs dim Y >= 2");
  int m = c.dim_y;
  RatFunc da0 = c.a0.directional_derivative(zeta);
  RatFunc da1 = c.a1.directional_derivative(zeta);
  DerivedCoeffs out{
      da0 * Rational(-1, m),
      da1 * Rational(-1, m - 1),
      da0.directional_derivative(zeta) * (Rational(m) * Rational(m + 1)).inverse(),
  };
  return out;
}

namespace detail {

// First and second directional derivatives of f = n/d at a point, assembled
// from polynomial derivative evaluations; avoids normalizing the symbolic
// quotients at every call site.
inline Rational directional_value(const RatFunc& f, const DirectionVector& zeta,
                                  const ReebVector& xi) {
  Rational dv = f.den().eval(xi);
  if (dv.is_zero()) throw Error(ErrorCode::PoleAtPoint, "denominator vanishes at the point");
  Rational nv = f.num().eval(xi);
  Rational nz(0), dz(0);
  for (int i = 0; i < f.nvars(); ++i) {
    if (zeta[static_cast<size_t>(i)].is_zero()) continue;
    nz += zeta[static_cast<size_t>(i)] * f.num().derivative(i).eval(xi);
    dz += zeta[static_cast<size_t>(i)] * f.den().derivative(i).eval(xi);
  }
  return (nz * dv - nv * dz) / (dv * dv);
}

inline Rational mixed_value(const RatFunc& f, const DirectionVector& zeta,
                            const DirectionVector& eta, const ReebVector& xi) {
  Rational dv = f.den().eval(xi);
  if (dv.is_zero()) throw Error(ErrorCode::PoleAtPoint, "denominator vanishes at the point");
  Rational nv = f.num().eval(xi);
  Rational nz(0), ne(0), dz(0), de(0), nze(0), dze(0);
  for (int i = 0; i < f.nvars(); ++i) {
    const Rational& zi = zeta[static_cast<size_t>(i)];
    const Rational& ei = eta[static_cast<size_t>(i)];
    bool need_z = !zi.is_zero();
    bool need_e = !ei.is_zero();
    if (!need_z && !need_e) continue;
    MultiPoly ni = f.num().derivative(i);
    MultiPoly di = f.den().derivative(i);
    Rational niv = ni.eval(xi), div = di.eval(xi);
    if (need_z) {
      nz += zi * niv;
      dz += zi * div;
      for (int j = 0; j < f.nvars(); ++j) {
        const Rational& ej = eta[static_cast<size_t>(j)];
        if (ej.is_zero()) continue;
        nze += zi * ej * ni.derivative(j).eval(xi);
        dze += zi * ej * di.derivative(j).eval(xi);
      }
    }
    if (need_e) {
      ne += ei * niv;
      de += ei * div;
    }
  }
  return (nze * dv * dv - (nz * de + ne * dz) * dv - nv * dze * dv +
          Rational(2) * nv * dz * de) /
         (dv * dv * dv);
}

}  // namespace detail

/// Polarization of ||zeta||^2 = c0 - b0^2/a0, evaluated at xi. Degenerate
/// exactly on the ray of xi itself.
inline Rational inner_product(const DirectionVector& zeta, const DirectionVector& eta,
                              const ReebVector& xi, const CharCoeffs& c) {
  int m = c.dim_y;
  Rational mixed = detail::mixed_value(c.a0, zeta, eta, xi);
  Rational bz = detail::directional_value(c.a0, zeta, xi) * Rational(-1, m);
  Rational be = detail::directional_value(c.a0, eta, xi) * Rational(-1, m);
  Rational a0v = c.a0.eval(xi);
  if (a0v.is_zero()) throw Error(ErrorCode::PoleAtPoint, "a0 vanishes at the point");
  return mixed / (Rational(m) * Rational(m + 1)) - bz * be / a0v;
}

inline Rational norm_sq(const DirectionVector& zeta, const ReebVector& xi,
                        const CharCoeffs& c) {
  return inner_product(zeta, zeta, xi, c);
}

/// Donaldson-Futaki invariant of the product configuration generated by
/// zeta: (a1/a0) b0 - b1 at xi.
inline Rational futaki_invariant(const ReebVector& xi, const DirectionVector& zeta,
                                 const CharCoeffs& c) {
  if (c.dim_y < 2) throw Error(ErrorCode::DimensionTooSmall, "b1 needs dim Y >= 2");
  int m = c.dim_y;
  Rational a0v = c.a0.eval(xi);
  if (a0v.is_zero()) throw Error(ErrorCode::PoleAtPoint, "a0 vanishes at the point");
  Rational b0c = detail::directional_value(c.a0, zeta, xi) * Rational(-1, m);
  Rational b1c = detail::directional_value(c.a1, zeta, xi) * Rational(-1, m - 1);
  return c.a1.eval(xi) / a0v * b0c - b1c;
}

inline DirectionVector basis_direction(int nvars, int j) {
  DirectionVector e(static_cast<size_t>(nvars), Rational(0));
  e[static_cast<size_t>(j)] = Rational(1);
  return e;
}

/// Element of t dual to Fut(xi, .) with respect to the norm, solved exactly
/// over the complement basis {zeta_1..zeta_r}; the representative returned
/// has zero component along xi_w (chi is only defined modulo xi).
inline DirectionVector extremal_field(const ReebVector& xi, const CharCoeffs& c) {
  int nv = c.a0.nvars();
  int r = nv - 1;
  DirectionVector chi(static_cast<size_t>(nv), Rational(0));
  if (r == 0) return chi;
  std::vector<std::vector<Rational>> gram(static_cast<size_t>(r),
                                          std::vector<Rational>(static_cast<size_t>(r)));
  std::vector<Rational> rhs(static_cast<size_t>(r));
  for (int i = 1; i <= r; ++i) {
    DirectionVector ei = basis_direction(nv, i);
    rhs[static_cast<size_t>(i - 1)] = futaki_invariant(xi, ei, c);
    for (int j = i; j <= r; ++j) {
      Rational g = inner_product(ei, basis_direction(nv, j), xi, c);
      gram[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] = g;
      gram[static_cast<size_t>(j - 1)][static_cast<size_t>(i - 1)] = g;
    }
  }
  std::vector<Rational> x = solve_linear(gram, rhs);
  for (int j = 1; j <= r; ++j) chi[static_cast<size_t>(j)] = x[static_cast<size_t>(j - 1)];
  return chi;
}

/// Futaki data of a product configuration relative to the maximal torus.
struct FutakiData {
  Rational futaki;
  Rational relative_futaki;  // futaki - <zeta, chi>
  DirectionVector chi;
  Rational norm_sq_chi;
  std::vector<std::vector<Rational>> gram;  // on span{zeta_1..zeta_r}
};

inline FutakiData relative_futaki(const ReebVector& xi, const DirectionVector& zeta,
                                  const CharCoeffs& c) {
  FutakiData out;
  out.chi = extremal_field(xi, c);
  out.futaki = futaki_invariant(xi, zeta, c);
  out.relative_futaki = out.futaki - inner_product(zeta, out.chi, xi, c);
  out.norm_sq_chi = inner_product(out.chi, out.chi, xi, c);
  int r = c.a0.nvars() - 1;
  out.gram.assign(static_cast<size_t>(r), std::vector<Rational>(static_cast<size_t>(r)));
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= r; ++j)
      out.gram[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] =
          inner_product(basis_direction(c.a0.nvars(), i), basis_direction(c.a0.nvars(), j), xi, c);
  return out;
}

/// Relative Futaki invariant of the deformation to the normal cone of
/// {f = 0} for f of weight alpha, at a volume-normalized Reeb vector.
struct NormalConeFutaki {
  Rational relative;        // unrelative - chi_correction
  Rational unrelative;      // a0/2 (1 - 1/alpha(xi))
  Rational chi_correction;  // <zeta, chi> of the configuration generator
  Rational norm_sq_generator;
  Rational alpha_at_xi;
  DirectionVector chi;
};

/// Same expression with an explicit chi; the value is invariant under
/// chi -> chi + lambda xi.
inline NormalConeFutaki normal_cone_futaki_with_chi(const ReebVector& xi,
                                                    const LinearForm& alpha,
                                                    const CharCoeffs& c,
                                                    const DirectionVector& chi) {
  Rational axi = alpha.eval(xi);
  if (axi.is_zero()) throw Error(ErrorCode::ZeroCharge, "alpha vanishes at the Reeb vector");
  int m = c.dim_y;           // = n + 1
  Rational m2(m + 1);        // = n + 2
  Rational a0v = c.a0.eval(xi);
  Rational dchi_a0 = detail::directional_value(c.a0, chi, xi);
  Rational achi = alpha.eval(chi);
  NormalConeFutaki out;
  out.alpha_at_xi = axi;
  out.chi = chi;
  out.unrelative = a0v / Rational(2) * (Rational(1) - axi.inverse());
  out.chi_correction = dchi_a0 / (Rational(m) * Rational(m) * m2 * axi) +
                       a0v * achi / (Rational(m) * m2 * axi * axi);
  out.relative = out.unrelative - out.chi_correction;
  out.norm_sq_generator = a0v * Rational(m - 1) / (Rational(m) * Rational(m) * m2 * axi * axi);
  return out;
}

inline NormalConeFutaki normal_cone_futaki(const WeightedLink& link, const ReebVector& xi,
                                           const LinearForm& alpha, const CharCoeffs& c) {
  ReebVector sigma = link.sigma_reeb();
  if (xi.empty() || xi[0] != sigma[0])
    throw Error(ErrorCode::NotOnSigma,
                "Reeb vector is not volume-normalized (b0 must be " + sigma[0].str() + ")");
  return normal_cone_futaki_with_chi(xi, alpha, c, extremal_field(xi, c));
}

/// Exact carrier for a Calabi-functional lower bound -Fut/||zeta||, which
/// is rational over a square root: stored as the signed square, so the
/// bound equals sign * sqrt(|signed_square|) in units of c(n).
struct CalabiBound {
  Rational signed_square;
  bool positive() const { return signed_square > Rational(0); }
};

inline CalabiBound calabi_bound_from(const Rational& fut, const Rational& norm_sq) {
  if (norm_sq.is_zero()) throw Error(ErrorCode::ZeroNorm, "configuration generator has zero norm");
  if (norm_sq < Rational(0))
    throw Error(ErrorCode::Validation, "negative norm square");
  Rational sq = fut * fut / norm_sq;
  return CalabiBound{fut > Rational(0) ? -sq : sq};
}

/// Bound from the product configuration generated by zeta: -Fut(xi,zeta)/||zeta||.
/// For zeta = -chi this realizes ||chi||, the extremality gap.
inline CalabiBound calabi_lower_bound(const ReebVector& xi, const DirectionVector& zeta,
                                      const CharCoeffs& c) {
  return calabi_bound_from(futaki_invariant(xi, zeta, c), norm_sq(zeta, xi, c));
}

}  // namespace kstab
