#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "kstab/linear_form.hpp"

namespace kstab {

using ReebVector = std::vector<Rational>;

enum class VerdictTag { ObstructedStrict, ObstructedObata, NotObstructedByThisTest };

inline const char* verdict_tag_name(VerdictTag t) {
  switch (t) {
    case VerdictTag::ObstructedStrict: return "ObstructedStrict";
    case VerdictTag::ObstructedObata: return "ObstructedObata";
    case VerdictTag::NotObstructedByThisTest: return "NotObstructedByThisTest";
  }
  return "?";
}

/// Outcome of one obstruction test: the verdict tag, the decisive quantity
/// (a charge or an inequality value), the rule applied, and the witness
/// function when there is one.
struct ObstructionVerdict {
  VerdictTag tag;
  Rational decisive;
  std::string rule;
  std::string witness;

  bool obstructed() const { return tag != VerdictTag::NotObstructedByThisTest; }
};

/// Combinatorial model of the link of a weighted homogeneous polynomial
///   f = f'(z_0..z_k) + z_{k+1}^2 + ... + z_n^2
/// with tail length q = n - k >= 2, or (ambient mode) of a flat weighted
/// C^N with no relation. Inner weights of f' satisfy 2 w_i < d'; an odd
/// inner degree d' is normalized to d = 2 d' with inner weights doubled so
/// the tail weight d/2 is integral. Tail coordinates pair into r = floor(q/2)
/// torus directions; the Sasaki cone has dimension r + 1.
class WeightedLink {
 public:
  /// Strict constructor for hypersurface data. `relax_weight_bound` admits
  /// inner weights with 2 w_i = d' for mixed-monomial inner polynomials
  /// (no pure quadratic power present), where the bound is not forced.
  static WeightedLink hypersurface(std::vector<long> inner_weights, long inner_degree,
                                   int tail, bool relax_weight_bound = false) {
    validate_common(inner_weights, inner_degree);
    if (tail < 2)
      throw Error(ErrorCode::TailTooShort, "tail length must be at least 2, got " + std::to_string(tail));
    for (long w : inner_weights) {
      if (w == inner_degree)
        throw Error(ErrorCode::LinearFactor,
                    "weight " + std::to_string(w) + " equals the degree: linear factor");
      if (2 * w > inner_degree || (!relax_weight_bound && 2 * w == inner_degree))
        throw Error(ErrorCode::WeightTooLarge,
                    "inner weight " + std::to_string(w) + " violates 2w < d' for d' = " +
                        std::to_string(inner_degree));
    }
    return WeightedLink(true, std::move(inner_weights), inner_degree, tail);
  }

  /// Flat ambient model: weighted C^N with no relation. Tail coordinates
  /// still pair into torus directions with charge d/2 * b0 +- b_j.
  static WeightedLink ambient(std::vector<long> inner_weights, long degree, int tail) {
    if (tail > 0) validate_common(inner_weights, degree);
    else if (inner_weights.empty())
      throw Error(ErrorCode::Validation, "ambient model needs at least one coordinate");
    for (long w : inner_weights)
      if (w <= 0) throw Error(ErrorCode::Validation, "weights must be positive");
    if (inner_weights.empty() && tail < 2)
      throw Error(ErrorCode::TailTooShort, "ambient tail-only model needs tail >= 2");
    return WeightedLink(false, std::move(inner_weights), std::max(degree, 1L), tail);
  }

  bool is_hypersurface() const { return hypersurface_; }
  bool odd_inner_degree() const { return doubled_; }

  const std::vector<long>& inner_weights() const { return inner_weights_; }
  long degree() const { return degree_; }
  int tail_length() const { return tail_; }
  bool odd_tail() const { return tail_ % 2 != 0; }

  int ambient_dim() const { return static_cast<int>(inner_weights_.size()) + tail_; }
  int dim_y() const { return hypersurface_ ? ambient_dim() - 1 : ambient_dim(); }
  int rank() const { return tail_ / 2; }
  int cone_dimension() const { return rank() + 1; }
  int nvars() const { return rank() + 1; }

  /// All coordinate weights at the quasi-regular ray, tails included.
  std::vector<long> weights() const {
    std::vector<long> w = inner_weights_;
    w.insert(w.end(), static_cast<size_t>(tail_), degree_ / 2);
    return w;
  }

  long min_weight() const {
    auto w = weights();
    return *std::min_element(w.begin(), w.end());
  }

  /// Fano index: the charge of the holomorphic volume form along xi_w.
  long fano_index() const {
    long total = std::accumulate(inner_weights_.begin(), inner_weights_.end(), 0L) +
                 (degree_ / 2) * tail_;
    return hypersurface_ ? total - degree_ : total;
  }

  /// Torus charges of the coordinate generators: inner w_i b0, paired tail
  /// d/2 b0 +- b_j, and one unpaired d/2 b0 when the tail length is odd.
  std::vector<LinearForm> charges() const {
    std::vector<LinearForm> out;
    int nv = nvars();
    for (long w : inner_weights_) out.push_back(radial_form(nv, Rational(w)));
    Rational half(degree_, 2);
    for (int j = 1; j <= rank(); ++j) {
      out.push_back(pair_form(nv, half, j, +1));
      out.push_back(pair_form(nv, half, j, -1));
    }
    if (odd_tail()) out.push_back(radial_form(nv, half));
    return out;
  }

  /// Charge of the minimal-weight coordinate as a slice-invariant weight;
  /// the default witness for the cone-wide obstruction test.
  LinearForm default_witness_charge() const {
    return radial_form(nvars(), Rational(min_weight()));
  }

  /// Charge of the coordinate z_i, inner coordinates first.
  LinearForm coordinate_charge(int i) const {
    int k = static_cast<int>(inner_weights_.size());
    if (i < 0 || i >= ambient_dim())
      throw Error(ErrorCode::Validation, "coordinate index out of range");
    if (i < k) return radial_form(nvars(), Rational(inner_weights_[static_cast<size_t>(i)]));
    int t = i - k;  // tail position
    Rational half(degree_, 2);
    if (t < 2 * rank()) return pair_form(nvars(), half, t / 2 + 1, t % 2 == 0 ? +1 : -1);
    return radial_form(nvars(), half);
  }

  /// Strict positivity of every generator charge: b0 > 0 and |b_j| < d b0/2.
  bool in_sasaki_cone(const ReebVector& xi) const {
    check_point(xi);
    for (const auto& a : charges())
      if (!(a.eval(xi) > Rational(0))) return false;
    return true;
  }

  /// The Reeb vector with volume-form charge dim Y: b0 = dimY / I on the
  /// symmetric ray. Requires positive Fano index.
  ReebVector sigma_reeb() const {
    long i = fano_index();
    if (i <= 0)
      throw Error(ErrorCode::NotPositiveCase,
                  "Fano index " + std::to_string(i) + " is not positive");
    ReebVector xi(static_cast<size_t>(nvars()), Rational(0));
    xi[0] = Rational(dim_y(), i);
    return xi;
  }

  ReebVector quasi_regular_reeb() const {
    ReebVector xi(static_cast<size_t>(nvars()), Rational(0));
    xi[0] = Rational(1);
    return xi;
  }

  /// Charge of z_i under the sigma-normalized Reeb vector.
  Rational lichnerowicz_charge(int i) const {
    long I = fano_index();
    if (I <= 0) throw Error(ErrorCode::NotPositiveCase, "Fano index not positive");
    auto w = weights();
    return Rational(dim_y()) * Rational(w.at(static_cast<size_t>(i))) / Rational(I);
  }

  /// Charge test for the coordinate function z_i: charge < 1 obstructs a
  /// Ricci-flat cone metric outright; charge = 1 forces the flat model,
  /// impossible for a hypersurface with no linear factor.
  ObstructionVerdict lichnerowicz_check(int i) const {
    Rational lambda = lichnerowicz_charge(i);
    ObstructionVerdict v;
    v.decisive = lambda;
    v.witness = "z_" + std::to_string(i);
    if (lambda < Rational(1)) {
      v.tag = VerdictTag::ObstructedStrict;
      v.rule = "holomorphic function of charge in (0,1)";
    } else if (lambda == Rational(1)) {
      v.tag = VerdictTag::ObstructedObata;
      v.rule = "charge 1 forces the flat model";
    } else {
      v.tag = VerdictTag::NotObstructedByThisTest;
      v.rule = "coordinate charge exceeds 1";
    }
    return v;
  }

  /// Inequality value V = sum_{i<=k} w_i - w_0 n + (d/2)(n - k - 2) for the
  /// split form; equals I - dimY * w_min in every mode, and its sign decides
  /// the cone-wide obstruction.
  Rational whp_value() const {
    if (hypersurface_ && !inner_weights_.empty()) {
      long n = dim_y();
      long k = static_cast<long>(inner_weights_.size()) - 1;
      long s = std::accumulate(inner_weights_.begin(), inner_weights_.end(), 0L);
      return Rational(s - inner_weights_.front() * n) +
             Rational(degree_, 2) * Rational(n - k - 2);
    }
    return Rational(fano_index() - static_cast<long>(dim_y()) * min_weight());
  }

  /// Cone-wide extremal obstruction from the minimal-weight coordinate.
  ObstructionVerdict whp_obstruction() const {
    Rational v = whp_value();
    ObstructionVerdict out;
    out.decisive = v;
    out.witness = "z_0";
    out.rule = "weighted homogeneous obstruction inequality";
    if (fano_index() <= 0) {
      out.tag = VerdictTag::NotObstructedByThisTest;
      out.rule = "Fano index not positive; test inapplicable";
      return out;
    }
    if (v > Rational(0)) out.tag = VerdictTag::ObstructedStrict;
    else if (v.is_zero()) out.tag = VerdictTag::ObstructedObata;
    else out.tag = VerdictTag::NotObstructedByThisTest;
    return out;
  }

 private:
  WeightedLink(bool hyper, std::vector<long> inner, long inner_degree, int tail)
      : hypersurface_(hyper), inner_weights_(std::move(inner)), tail_(tail) {
    std::sort(inner_weights_.begin(), inner_weights_.end());
    doubled_ = (tail_ > 0 || hypersurface_) && inner_degree % 2 != 0;
    if (doubled_) {
      degree_ = 2 * inner_degree;
      for (auto& w : inner_weights_) w *= 2;
    } else {
      degree_ = inner_degree;
    }
  }

  static void validate_common(const std::vector<long>& w, long d) {
    if (d <= 0) throw Error(ErrorCode::Validation, "degree must be positive");
    for (long x : w)
      if (x <= 0) throw Error(ErrorCode::Validation, "weights must be positive");
  }

  void check_point(const ReebVector& xi) const {
    if (static_cast<int>(xi.size()) != nvars())
      throw Error(ErrorCode::Validation, "Reeb vector has wrong length");
  }

  bool hypersurface_;
  std::vector<long> inner_weights_;
  long degree_ = 0;
  int tail_ = 0;
  bool doubled_ = false;
};

}  // namespace kstab
