#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "kstab/rational.hpp"

namespace kstab {

/// Graded lexicographic order on exponent vectors: total degree first,
/// then lex with the first variable most significant.
struct GradedLexLess {
  bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
    int da = std::accumulate(a.begin(), a.end(), 0);
    int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da < db;
    for (size_t i = 0; i < a.size(); ++i)
      if (a[i] != b[i]) return a[i] < b[i];
    return false;
  }
};

/// Multivariate polynomial over Rational in variables b0..b_{n-1}.
/// Exponent vectors are dense with fixed length = nvars; no zero
/// coefficients are stored.
class MultiPoly {
 public:
  using Terms = std::map<std::vector<int>, Rational, GradedLexLess>;

  explicit MultiPoly(int nvars) : nvars_(nvars) {}

  static MultiPoly constant(int nvars, const Rational& c) {
    MultiPoly p(nvars);
    if (!c.is_zero()) p.terms_.emplace(std::vector<int>(nvars, 0), c);
    return p;
  }

  static MultiPoly variable(int nvars, int i) {
    MultiPoly p(nvars);
    std::vector<int> e(nvars, 0);
    e.at(i) = 1;
    p.terms_.emplace(std::move(e), Rational(1));
    return p;
  }

  static MultiPoly monomial(int nvars, std::vector<int> exps, const Rational& c) {
    MultiPoly p(nvars);
    if (!c.is_zero()) p.terms_.emplace(std::move(exps), c);
    return p;
  }

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree() == 0);
  }

  Rational constant_value() const {
    if (terms_.empty()) return Rational(0);
    return terms_.begin()->second;
  }

  int total_degree() const {
    if (terms_.empty()) return -1;
    const auto& e = terms_.rbegin()->first;
    return std::accumulate(e.begin(), e.end(), 0);
  }

  int degree_in(int v) const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[v]);
    return d;
  }

  /// Leading term under graded lex.
  std::pair<std::vector<int>, Rational> leading_term() const {
    return {terms_.rbegin()->first, terms_.rbegin()->second};
  }

  Rational leading_coeff() const {
    return terms_.empty() ? Rational(0) : terms_.rbegin()->second;
  }

  MultiPoly operator-() const {
    MultiPoly r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }

  MultiPoly& operator+=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { a += b; return a; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { a -= b; return a; }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r(a.nvars_);
    std::vector<int> e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    return r;
  }

  friend MultiPoly operator*(const MultiPoly& a, const Rational& s) {
    MultiPoly r(a.nvars_);
    if (s.is_zero()) return r;
    for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, c * s);
    return r;
  }
  friend MultiPoly operator*(const Rational& s, const MultiPoly& a) { return a * s; }

  MultiPoly pow(unsigned e) const {
    MultiPoly r = constant(nvars_, 1);
    MultiPoly base = *this;
    for (; e; e >>= 1) {
      if (e & 1) r = r * base;
      if (e > 1) base = base * base;
    }
    return r;
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  Rational eval(const std::vector<Rational>& point) const {
    Rational acc(0);
    for (const auto& [e, c] : terms_) {
      Rational t = c;
      for (int i = 0; i < nvars_; ++i)
        if (e[i] > 0) t *= point[i].pow(static_cast<unsigned>(e[i]));
      acc += t;
    }
    return acc;
  }

  MultiPoly derivative(int v) const {
    MultiPoly r(nvars_);
    for (const auto& [e, c] : terms_) {
      if (e[v] == 0) continue;
      std::vector<int> e2 = e;
      e2[v] -= 1;
      r.add_term(e2, c * Rational(e[v]));
    }
    return r;
  }

  /// b_i -> s * b_i for every variable.
  MultiPoly scale_vars(const Rational& s) const {
    MultiPoly r(nvars_);
    for (const auto& [e, c] : terms_) {
      int deg = std::accumulate(e.begin(), e.end(), 0);
      r.add_term(e, c * s.pow(static_cast<unsigned>(deg)));
    }
    return r;
  }

  /// b_v -> -b_v.
  MultiPoly negate_var(int v) const {
    MultiPoly r(nvars_);
    for (const auto& [e, c] : terms_)
      r.add_term(e, (e[v] % 2 == 0) ? c : -c);
    return r;
  }

  /// Positive rational c such that (1/c) * this has coprime integer
  /// coefficients. Zero polynomial yields 1.
  Rational rational_content() const {
    if (terms_.empty()) return Rational(1);
    BigInt den_lcm(1);
    for (const auto& [e, c] : terms_) den_lcm = lcm(den_lcm, c.denominator());
    BigInt num_gcd(0);
    for (const auto& [e, c] : terms_)
      num_gcd = gcd(num_gcd, BigInt(c.numerator() * (den_lcm / c.denominator())));
    return Rational(num_gcd, den_lcm);
  }

  /// Integer-coefficient associate with content 1 and positive leading coefficient.
  MultiPoly primitive_part() const {
    if (terms_.empty()) return *this;
    Rational c = rational_content();
    if (leading_coeff().sign() < 0) c = -c;
    return *this * c.inverse();
  }

  /// Exact division: returns quotient iff g divides this exactly.
  static std::optional<MultiPoly> divide_exact(const MultiPoly& f, const MultiPoly& g);

  /// Polynomial gcd up to a rational scalar; result is integer-primitive
  /// with positive leading coefficient (content/primitive-part recursion,
  /// primitive pseudo-remainder sequences).
  static MultiPoly poly_gcd(const MultiPoly& f, const MultiPoly& g);

  std::string str(const std::string& stem = "b") const;

 private:
  void add_term(const std::vector<int>& e, const Rational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  // univariate-in-v view used by gcd
  static std::map<int, MultiPoly> split_by_var(const MultiPoly& f, int v);
  static MultiPoly lead_coeff_in(const MultiPoly& f, int v, int deg);
  static MultiPoly pseudo_remainder(const MultiPoly& a, const MultiPoly& b, int v);
  static MultiPoly content_in(const MultiPoly& f, int v);
  static MultiPoly gcd_integer(const MultiPoly& a, const MultiPoly& b);

  int nvars_;
  Terms terms_;
};

inline std::optional<MultiPoly> MultiPoly::divide_exact(const MultiPoly& f, const MultiPoly& g) {
  if (g.is_zero()) return std::nullopt;
  MultiPoly rem = f;
  MultiPoly q(f.nvars_);
  const auto [ge, gc] = g.leading_term();
  while (!rem.is_zero()) {
    const auto [re, rc] = rem.leading_term();
    std::vector<int> de(f.nvars_);
    for (int i = 0; i < f.nvars_; ++i) {
      de[i] = re[i] - ge[i];
      if (de[i] < 0) return std::nullopt;
    }
    MultiPoly t = monomial(f.nvars_, de, rc / gc);
    q += t;
    rem -= t * g;
  }
  return q;
}

inline std::map<int, MultiPoly> MultiPoly::split_by_var(const MultiPoly& f, int v) {
  std::map<int, MultiPoly> out;
  for (const auto& [e, c] : f.terms_) {
    std::vector<int> e2 = e;
    int d = e2[v];
    e2[v] = 0;
    auto it = out.find(d);
    if (it == out.end()) it = out.emplace(d, MultiPoly(f.nvars_)).first;
    it->second.add_term(e2, c);
  }
  return out;
}

inline MultiPoly MultiPoly::lead_coeff_in(const MultiPoly& f, int v, int deg) {
  MultiPoly r(f.nvars_);
  for (const auto& [e, c] : f.terms_) {
    if (e[v] != deg) continue;
    std::vector<int> e2 = e;
    e2[v] = 0;
    r.add_term(e2, c);
  }
  return r;
}

inline MultiPoly MultiPoly::pseudo_remainder(const MultiPoly& a, const MultiPoly& b, int v) {
  int db = b.degree_in(v);
  MultiPoly lcb = lead_coeff_in(b, v, db);
  MultiPoly r = a;
  while (!r.is_zero()) {
    int dr = r.degree_in(v);
    if (dr < db) break;
    MultiPoly lcr = lead_coeff_in(r, v, dr);
    std::vector<int> shift(a.nvars_, 0);
    shift[v] = dr - db;
    r = r * lcb - lcr * monomial(a.nvars_, shift, 1) * b;
  }
  return r;
}

inline MultiPoly MultiPoly::content_in(const MultiPoly& f, int v) {
  auto parts = split_by_var(f, v);
  MultiPoly acc(f.nvars_);
  for (const auto& [d, coeff] : parts) {
    acc = gcd_integer(acc, coeff);
    if (acc.is_constant() && acc.constant_value() == Rational(1)) break;
  }
  return acc;
}

inline MultiPoly MultiPoly::gcd_integer(const MultiPoly& a, const MultiPoly& b) {
  // inputs have integer coefficients; result is primitive-positive up to
  // an integer constant carried through contents
  if (a.is_zero()) return b.leading_coeff().sign() < 0 ? -b : b;
  if (b.is_zero()) return a.leading_coeff().sign() < 0 ? -a : a;

  auto integer_content = [](const MultiPoly& p) {
    BigInt g(0);
    for (const auto& [e, c] : p.terms()) g = gcd(g, c.numerator());
    return g;
  };

  if (a.is_constant() || b.is_constant())
    return constant(a.nvars(), Rational(gcd(integer_content(a), integer_content(b))));

  // main variable: present in both if possible, smallest max-degree
  int v = -1;
  long best = -1;
  for (int i = 0; i < a.nvars(); ++i) {
    int da = a.degree_in(i), db = b.degree_in(i);
    if (da == 0 && db == 0) continue;
    if (da == 0 || db == 0) continue;
    long score = std::max(da, db);
    if (v < 0 || score < best) { v = i; best = score; }
  }
  if (v < 0) {
    // no shared variable: gcd is a common divisor of one side's content
    for (int i = 0; i < a.nvars(); ++i) {
      if (a.degree_in(i) > 0) return gcd_integer(content_in(a, i), b);
      if (b.degree_in(i) > 0) return gcd_integer(a, content_in(b, i));
    }
    return constant(a.nvars(), 1);  // unreachable
  }

  MultiPoly ca = content_in(a, v);
  MultiPoly cb = content_in(b, v);
  MultiPoly c = gcd_integer(ca, cb);
  MultiPoly pa = *divide_exact(a, ca);
  MultiPoly pb = *divide_exact(b, cb);
  if (pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);

  for (;;) {
    MultiPoly r = pseudo_remainder(pa, pb, v);
    if (r.is_zero()) {
      MultiPoly g = c * pb;
      return g.leading_coeff().sign() < 0 ? -g : g;
    }
    if (r.degree_in(v) == 0) {
      // v-free remainder of v-primitive polys: gcd carries no v part
      return c.leading_coeff().sign() < 0 ? -c : c;
    }
    pa = pb;
    pb = *divide_exact(r, content_in(r, v));
  }
}

inline MultiPoly MultiPoly::poly_gcd(const MultiPoly& f, const MultiPoly& g) {
  if (f.is_zero() && g.is_zero()) return MultiPoly(f.nvars());
  if (f.is_zero()) return g.primitive_part();
  if (g.is_zero()) return f.primitive_part();
  return gcd_integer(f.primitive_part(), g.primitive_part()).primitive_part();
}

inline std::string MultiPoly::str(const std::string& stem) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // leading term first
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    bool has_vars = std::accumulate(e.begin(), e.end(), 0) > 0;
    bool coeff_shown = !(mag == Rational(1)) || !has_vars;
    if (coeff_shown) os << mag.str();
    bool need_star = coeff_shown;
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (need_star) os << "*";
      os << stem << i;
      if (e[i] > 1) os << "^" << e[i];
      need_star = true;
    }
  }
  return os.str();
}

}  // namespace kstab
