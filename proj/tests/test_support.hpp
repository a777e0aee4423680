#pragma once

#include <random>
#include <string>
#include <vector>

#include "kstab/kstab.hpp"

namespace ts {

using namespace kstab;

inline Rational Q(long n, long d = 1) { return Rational(n, d); }

inline MultiPoly var(int nvars, int i) { return MultiPoly::variable(nvars, i); }
inline MultiPoly con(int nvars, long c) { return MultiPoly::constant(nvars, Rational(c)); }

struct NamedLink {
  std::string name;
  WeightedLink link;
  bool brieskorn_pham;  // every coordinate a pure power
};

/// Shared corpus: the concrete links exercised across the suites.
inline std::vector<NamedLink> corpus() {
  std::vector<NamedLink> out;
  auto hs = [](std::vector<long> w, long d, int tail, bool relax = false) {
    return WeightedLink::hypersurface(std::move(w), d, tail, relax);
  };
  out.push_back({"z0^3+3 quadrics (A2, n=3)", hs({2}, 6, 3), true});
  out.push_back({"z0^4+3 quadrics", hs({1}, 4, 3), true});
  out.push_back({"z0^5+3 quadrics", hs({2}, 10, 3), true});
  out.push_back({"z0^6+5 quadrics (unit tangent l=1,n=2)", hs({1}, 6, 5), true});
  out.push_back({"z0^8+3 quadrics", hs({1}, 8, 3), true});
  out.push_back({"z0^6+z1^3+2 quadrics", hs({1, 2}, 6, 2), true});
  out.push_back({"z0^7+z1^3+2 quadrics", hs({3, 7}, 21, 2), true});
  out.push_back({"z0^5+z1^3+3 quadrics (E8, n=4)", hs({3, 5}, 15, 3), true});
  out.push_back({"z0^5+z1^3+2 quadrics", hs({3, 5}, 15, 2), true});
  out.push_back({"z0^3+4 quadrics (A2, n=4)", hs({2}, 6, 4), true});
  out.push_back({"D3 n-fold, n=4", hs({2, 1}, 4, 3, true), false});
  out.push_back({"E6 n-fold, n=4", hs({3, 4}, 12, 3), false});
  out.push_back({"E7 n-fold, n=4", hs({4, 6}, 18, 3), false});
  out.push_back({"z0^10+7 quadrics (unit tangent l=2,n=3)", hs({1}, 10, 7), true});
  return out;
}

/// Deterministic rational sampler.
class RationalSampler {
 public:
  explicit RationalSampler(unsigned seed) : rng_(seed) {}

  // uniform-ish rational in [lo, hi] with denominator up to 12
  Rational in_range(const Rational& lo, const Rational& hi) {
    std::uniform_int_distribution<int> den(1, 12);
    int d = den(rng_);
    // lo + k/d * (hi - lo), k in [0, d]
    std::uniform_int_distribution<int> num(0, d);
    return lo + Rational(num(rng_), d) * (hi - lo);
  }

  Rational small(int bound = 6) {
    std::uniform_int_distribution<int> num(-bound, bound);
    std::uniform_int_distribution<int> den(1, 4);
    return Rational(num(rng_), den(rng_));
  }

  /// Interior point of the Sasaki cone: b0 in [1,3], |b_j| <= 0.8 * d b0 / 2.
  ReebVector interior_point(const WeightedLink& link) {
    ReebVector xi(static_cast<size_t>(link.nvars()));
    xi[0] = in_range(Q(1), Q(3));
    Rational half = Rational(link.degree(), 2) * xi[0];
    for (int j = 1; j < link.nvars(); ++j)
      xi[static_cast<size_t>(j)] = in_range(Q(-4, 5) * half, Q(4, 5) * half);
    return xi;
  }

  /// Point of the volume-normalized slice with random transverse coordinates.
  ReebVector sigma_point(const WeightedLink& link) {
    ReebVector xi = link.sigma_reeb();
    Rational half = Rational(link.degree(), 2) * xi[0];
    for (int j = 1; j < link.nvars(); ++j)
      xi[static_cast<size_t>(j)] = in_range(Q(-3, 5) * half, Q(3, 5) * half);
    return xi;
  }

  MultiPoly poly(int nvars, int max_deg, int terms) {
    MultiPoly p(nvars);
    std::uniform_int_distribution<int> ed(0, max_deg);
    for (int t = 0; t < terms; ++t) {
      std::vector<int> e(static_cast<size_t>(nvars));
      for (auto& x : e) x = ed(rng_);
      p += MultiPoly::monomial(nvars, e, small());
    }
    return p;
  }

  MultiPoly nonzero_poly(int nvars, int max_deg, int terms) {
    for (;;) {
      MultiPoly p = poly(nvars, max_deg, terms);
      if (!p.is_zero()) return p;
    }
  }

 private:
  std::mt19937 rng_;
};

}  // namespace ts
