#pragma once

#include "kstab/invariants.hpp"

namespace kstab {

/// Cone-wide obstruction check for a weight alpha: alpha must vanish on the
/// tangent directions zeta_j of the volume-normalized slice, and the charge
/// alpha(xi) at the normalized Reeb vector must be at most 1.
struct GenLichResult {
  ObstructionVerdict verdict;
  bool alpha_tangent_ok = false;  // alpha(zeta_j) = 0 for all j >= 1
  Rational charge;                // alpha at the normalized Reeb vector
  NormalConeFutaki normal_cone;   // for the sign cross-check
};

inline GenLichResult gen_lich_obstruction(const WeightedLink& link, const LinearForm& alpha,
                                          const CharCoeffs& c) {
  GenLichResult out;
  ReebVector xi = link.sigma_reeb();  // throws NotPositiveCase when I <= 0
  out.alpha_tangent_ok = true;
  for (int j = 1; j < link.nvars(); ++j)
    if (!alpha.coeffs[static_cast<size_t>(j)].is_zero()) out.alpha_tangent_ok = false;
  out.charge = alpha.eval(xi);
  out.normal_cone = normal_cone_futaki(link, xi, alpha, c);

  out.verdict.decisive = out.charge;
  out.verdict.witness = "weight " + alpha.to_poly().str();
  if (!out.alpha_tangent_ok) {
    out.verdict.tag = VerdictTag::NotObstructedByThisTest;
    out.verdict.rule = "weight does not vanish on the normalized slice directions";
  } else if (out.charge < Rational(1)) {
    out.verdict.tag = VerdictTag::ObstructedStrict;
    out.verdict.rule = "holomorphic function of charge in (0,1), weight slice-invariant";
  } else if (out.charge == Rational(1)) {
    out.verdict.tag = VerdictTag::ObstructedObata;
    out.verdict.rule = "charge 1 forces the flat model, weight slice-invariant";
  } else {
    out.verdict.tag = VerdictTag::NotObstructedByThisTest;
    out.verdict.rule = "charge exceeds 1";
  }
  return out;
}

inline GenLichResult gen_lich_obstruction(const WeightedLink& link, const LinearForm& alpha) {
  return gen_lich_obstruction(link, alpha, char_coeffs(link));
}

/// Default witness: the minimal-weight coordinate's charge.
inline GenLichResult gen_lich_obstruction(const WeightedLink& link) {
  return gen_lich_obstruction(link, link.default_witness_charge());
}

}  // namespace kstab
