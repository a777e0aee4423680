#pragma once

#include <vector>

#include "kstab/bernoulli.hpp"
#include "kstab/linear_form.hpp"
#include "kstab/ratfunc.hpp"

namespace kstab {

/// Finite Laurent expansion in a formal variable t with RatFunc coefficients,
/// covering degrees min_degree .. min_degree + order.
class TruncatedLaurent {
 public:
  TruncatedLaurent(int min_degree, std::vector<RatFunc> coeffs)
      : min_degree_(min_degree), coeffs_(std::move(coeffs)) {
    // keep the leading coefficient nonzero
    while (!coeffs_.empty() && coeffs_.front().is_zero()) {
      coeffs_.erase(coeffs_.begin());
      ++min_degree_;
    }
    if (coeffs_.empty()) throw Error(ErrorCode::Validation, "empty Laurent expansion");
  }

  int min_degree() const { return min_degree_; }
  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  int nvars() const { return coeffs_.front().nvars(); }

  /// Coefficient of t^degree; zero when above the truncation window only if
  /// never requested, so out-of-window access is an error.
  const RatFunc& coeff(int degree) const {
    int i = degree - min_degree_;
    if (i < 0 || i >= static_cast<int>(coeffs_.size()))
      throw Error(ErrorCode::Validation, "Laurent coefficient outside truncation window");
    return coeffs_[static_cast<size_t>(i)];
  }

  const std::vector<RatFunc>& coeffs() const { return coeffs_; }

  /// Sum, valid on the window where both expansions are known.
  friend TruncatedLaurent operator+(const TruncatedLaurent& a, const TruncatedLaurent& b) {
    int lo = std::min(a.min_degree_, b.min_degree_);
    int hi = std::min(a.min_degree_ + a.order(), b.min_degree_ + b.order());
    if (hi < lo) throw Error(ErrorCode::Validation, "Laurent windows do not overlap");
    std::vector<RatFunc> out;
    out.reserve(static_cast<size_t>(hi - lo) + 1);
    auto at = [](const TruncatedLaurent& t, int deg) {
      return deg < t.min_degree_ ? RatFunc(t.nvars()) : t.coeff(deg);
    };
    for (int d = lo; d <= hi; ++d) out.push_back(at(a, d) + at(b, d));
    return TruncatedLaurent(lo, std::move(out));
  }

  friend TruncatedLaurent operator*(const TruncatedLaurent& a, const Rational& s) {
    std::vector<RatFunc> out = a.coeffs_;
    for (auto& c : out) c = c * s;
    return TruncatedLaurent(a.min_degree_, std::move(out));
  }

  /// Cauchy product truncated to the smaller relative order.
  friend TruncatedLaurent operator*(const TruncatedLaurent& a, const TruncatedLaurent& b) {
    int ord = std::min(a.order(), b.order());
    std::vector<RatFunc> out(static_cast<size_t>(ord) + 1, RatFunc(a.nvars()));
    for (int k = 0; k <= ord; ++k)
      for (int i = 0; i <= k; ++i)
        out[static_cast<size_t>(k)] += a.coeffs_[static_cast<size_t>(i)] *
                                       b.coeffs_[static_cast<size_t>(k - i)];
    return TruncatedLaurent(a.min_degree_ + b.min_degree_, std::move(out));
  }

 private:
  int min_degree_;
  std::vector<RatFunc> coeffs_;
};

/// Expansion of 1/(1 - e^{-x t}) = 1/(xt) + 1/2 + (xt)/12 - (xt)^3/720 + ...
/// The t^{m-1} coefficient is B_m x^{m-1} / m!.
inline TruncatedLaurent factor_series(const LinearForm& x, int order) {
  if (x.is_zero()) throw Error(ErrorCode::ZeroCharge, "expansion factor has zero charge");
  if (order < 1) throw Error(ErrorCode::Validation, "order must be >= 1");
  int nv = x.nvars();
  MultiPoly xp = x.to_poly();
  std::vector<Rational> bern = bernoulli_upto(static_cast<unsigned>(order));
  std::vector<RatFunc> out;
  out.reserve(static_cast<size_t>(order) + 1);
  out.emplace_back(MultiPoly::constant(nv, 1), xp);  // t^{-1}
  for (int m = 1; m <= order; ++m) {
    Rational c = bern[static_cast<size_t>(m)] / Rational(factorial(static_cast<unsigned>(m)));
    out.push_back(RatFunc::from_poly(xp.pow(static_cast<unsigned>(m - 1)) * c));
  }
  return TruncatedLaurent(-1, std::move(out));
}

/// Expansion of 1 - e^{-w t} = wt - (wt)^2/2 + (wt)^3/6 - ...; minimum degree 1.
inline TruncatedLaurent relation_numerator_series(const LinearForm& w, int order) {
  if (w.is_zero()) throw Error(ErrorCode::ZeroCharge, "relation has zero weight");
  if (order < 1) throw Error(ErrorCode::Validation, "order must be >= 1");
  MultiPoly wp = w.to_poly();
  std::vector<RatFunc> out;
  out.reserve(static_cast<size_t>(order) + 1);
  for (int i = 0; i <= order; ++i) {
    unsigned m = static_cast<unsigned>(i) + 1;
    Rational c = Rational(1) / Rational(factorial(m));
    if (m % 2 == 0) c = -c;
    out.push_back(RatFunc::from_poly(wp.pow(m) * c));
  }
  return TruncatedLaurent(1, std::move(out));
}

}  // namespace kstab
