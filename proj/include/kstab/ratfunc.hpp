#pragma once

#include <string>
#include <vector>

#include "kstab/multipoly.hpp"

namespace kstab {

/// Reduced rational function over Rational in the variables b0..br.
/// Canonical form: gcd(num, den) constant, denominator integer-primitive
/// with positive leading coefficient under graded lex. Structural equality
/// therefore coincides with mathematical equality.
class RatFunc {
 public:
  explicit RatFunc(int nvars)
      : num_(MultiPoly(nvars)), den_(MultiPoly::constant(nvars, 1)) {}

  RatFunc(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
    normalize();
  }

  static RatFunc from_poly(MultiPoly p) {
    int n = p.nvars();
    return RatFunc(std::move(p), MultiPoly::constant(n, 1));
  }

  static RatFunc constant(int nvars, const Rational& c) {
    return from_poly(MultiPoly::constant(nvars, c));
  }

  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }
  int nvars() const { return num_.nvars(); }
  bool is_zero() const { return num_.is_zero(); }

  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  Rational constant_value() const { return num_.constant_value() / den_.constant_value(); }

  RatFunc operator-() const { return raw(-num_, den_); }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "rational function division by zero");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
  }
  friend RatFunc operator*(const RatFunc& a, const Rational& s) {
    return s.is_zero() ? RatFunc(a.nvars()) : a.raw(a.num_ * s, a.den_);
  }
  friend RatFunc operator*(const Rational& s, const RatFunc& a) { return a * s; }

  RatFunc& operator+=(const RatFunc& o) { *this = *this + o; return *this; }
  RatFunc& operator-=(const RatFunc& o) { *this = *this - o; return *this; }
  RatFunc& operator*=(const RatFunc& o) { *this = *this * o; return *this; }

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  /// Quotient-rule partial derivative, reduced.
  RatFunc derivative(int v) const {
    return RatFunc(num_.derivative(v) * den_ - num_ * den_.derivative(v), den_ * den_);
  }

  /// Directional derivative sum_i dir[i] * d/db_i.
  RatFunc directional_derivative(const std::vector<Rational>& dir) const {
    RatFunc acc(nvars());
    for (int i = 0; i < nvars(); ++i) {
      if (dir[i].is_zero()) continue;
      acc += derivative(i) * dir[i];
    }
    return acc;
  }

  /// Radial (Euler) derivative sum_i b_i * d/db_i; detects homogeneity degree.
  RatFunc euler_derivative() const {
    RatFunc acc(nvars());
    for (int i = 0; i < nvars(); ++i) {
      RatFunc d = derivative(i);
      if (d.is_zero()) continue;
      acc += d * from_poly(MultiPoly::variable(nvars(), i));
    }
    return acc;
  }

  Rational eval(const std::vector<Rational>& point) const {
    Rational d = den_.eval(point);
    if (d.is_zero()) throw Error(ErrorCode::PoleAtPoint, "denominator vanishes at evaluation point");
    return num_.eval(point) / d;
  }

  bool has_pole_at(const std::vector<Rational>& point) const {
    return den_.eval(point).is_zero();
  }

  RatFunc scale_vars(const Rational& s) const {
    return RatFunc(num_.scale_vars(s), den_.scale_vars(s));
  }

  RatFunc negate_var(int v) const {
    return RatFunc(num_.negate_var(v), den_.negate_var(v));
  }

  std::string str(const std::string& stem = "b") const {
    if (den_.is_constant() && den_.constant_value() == Rational(1)) return num_.str(stem);
    std::string n = num_.str(stem);
    if (num_.term_count() > 1) n = "(" + n + ")";
    std::string d = den_.str(stem);
    if (den_.term_count() > 1) d = "(" + d + ")";
    return n + " / " + d;
  }

 private:
  // wraps already-canonical parts
  static RatFunc raw(MultiPoly num, MultiPoly den) {
    RatFunc r(num.nvars());
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    return r;
  }

  void normalize() {
    if (den_.is_zero()) throw Error(ErrorCode::DivisionByZero, "zero denominator");
    if (num_.is_zero()) {
      den_ = MultiPoly::constant(nvars(), 1);
      return;
    }
    MultiPoly g = MultiPoly::poly_gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = *MultiPoly::divide_exact(num_, g);
      den_ = *MultiPoly::divide_exact(den_, g);
    }
    Rational c = den_.rational_content();
    if (den_.leading_coeff().sign() < 0) c = -c;
    Rational inv = c.inverse();
    num_ = num_ * inv;
    den_ = den_ * inv;
  }

  MultiPoly num_, den_;
};

}  // namespace kstab
