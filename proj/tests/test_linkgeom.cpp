#include <catch2/catch.hpp>

#include <functional>

#include "test_support.hpp"

using namespace kstab;
using ts::Q;

namespace {
ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::Validation;
}
}  // namespace

TEST_CASE("link construction and derived data") {
  // unit tangent bundle family member: inner weight 1, degree 6, tail 5
  WeightedLink ut = WeightedLink::hypersurface({1}, 6, 5);
  CHECK(ut.ambient_dim() == 6);
  CHECK(ut.degree() == 6);
  CHECK(ut.rank() == 2);
  CHECK(ut.odd_tail());
  CHECK(ut.dim_y() == 5);
  CHECK(ut.fano_index() == 10);
  CHECK(ut.weights() == std::vector<long>{1, 3, 3, 3, 3, 3});

  // odd inner degree doubles: z0^3 with d' = 3 gives d = 6, weight 2
  WeightedLink a2 = WeightedLink::hypersurface({1}, 3, 3);
  CHECK(a2.odd_inner_degree());
  CHECK(a2.degree() == 6);
  CHECK(a2.weights() == std::vector<long>{2, 3, 3, 3});
  CHECK(a2.fano_index() == 5);

  // #m(S^2 x S^3) member with (p, q) = (5, 2) -> weights (2, 5), tail at 5
  WeightedLink pq = WeightedLink::hypersurface({2}, 10, 3);
  CHECK(pq.ambient_dim() == 4);
  CHECK(pq.rank() == 1);
  CHECK(pq.fano_index() == 7);
}

TEST_CASE("link validation errors") {
  CHECK(code_of([] { WeightedLink::hypersurface({5}, 10, 3); }) == ErrorCode::WeightTooLarge);
  CHECK(code_of([] { WeightedLink::hypersurface({6}, 10, 3); }) == ErrorCode::WeightTooLarge);
  CHECK(code_of([] { WeightedLink::hypersurface({3}, 3, 3); }) == ErrorCode::LinearFactor);
  CHECK(code_of([] { WeightedLink::hypersurface({1}, 6, 1); }) == ErrorCode::TailTooShort);
  CHECK(code_of([] { WeightedLink::hypersurface({0}, 6, 3); }) == ErrorCode::Validation);
  CHECK_NOTHROW(WeightedLink::hypersurface({5}, 10, 3, true));  // relaxed boundary
}

TEST_CASE("Sasaki cone membership") {
  WeightedLink ut = WeightedLink::hypersurface({1}, 6, 5);
  CHECK(ut.in_sasaki_cone({Q(1), Q(0), Q(0)}));
  CHECK(ut.in_sasaki_cone({Q(1), Q(2), Q(0)}));
  CHECK_FALSE(ut.in_sasaki_cone({Q(1), Q(3), Q(0)}));  // |b_j| = d b0/2
  CHECK_FALSE(ut.in_sasaki_cone({Q(0), Q(0), Q(0)}));
  CHECK_FALSE(ut.in_sasaki_cone({Q(-1), Q(0), Q(0)}));

  // membership matches positivity of the closed-form denominator factors
  ts::RationalSampler rs(43);
  for (const auto& nl : ts::corpus()) {
    INFO(nl.name);
    RatFunc a0 = closed_form_a0(nl.link);
    auto factors = cone_positivity_factors(nl.link);
    for (int t = 0; t < 24; ++t) {
      ReebVector xi(static_cast<size_t>(nl.link.nvars()));
      for (auto& x : xi) x = rs.small(8);
      bool in_cone = nl.link.in_sasaki_cone(xi);
      bool all_pos = true;
      for (const auto& f : factors)
        if (!(f.eval(xi) > Q(0))) all_pos = false;
      CHECK(in_cone == all_pos);
      if (in_cone) CHECK(a0.eval(xi) > Q(0));
    }
    // interior points always give finite positive a0
    for (int t = 0; t < 6; ++t) CHECK(a0.eval(rs.interior_point(nl.link)) > Q(0));
  }
}

TEST_CASE("cone dimensions match the table columns") {
  CHECK(WeightedLink::hypersurface({1}, 3, 4).cone_dimension() == 3);   // A series, n = 4
  CHECK(WeightedLink::hypersurface({1}, 6, 5).cone_dimension() == 3);   // unit tangent, n = 2
  CHECK(WeightedLink::hypersurface({2}, 10, 3).cone_dimension() == 2);  // #m family
}

TEST_CASE("volume-normalized Reeb vector") {
  WeightedLink ut = WeightedLink::hypersurface({1}, 6, 5);
  CHECK(ut.sigma_reeb() == ReebVector{Q(1, 2), Q(0), Q(0)});

  WeightedLink a2 = WeightedLink::hypersurface({2}, 6, 3);
  CHECK(a2.sigma_reeb()[0] == Q(3, 5));

  // ambient model with index equal to the dimension normalizes to b0 = 1
  WeightedLink flat = WeightedLink::ambient({1, 1, 1}, 2, 0);
  CHECK(flat.sigma_reeb() == ReebVector{Q(1)});

  // non-positive index
  WeightedLink quadric = WeightedLink::hypersurface({}, 2, 2);
  CHECK(code_of([&] { quadric.sigma_reeb(); }) == ErrorCode::NotPositiveCase);
}

TEST_CASE("coordinate charge tests") {
  WeightedLink ut = WeightedLink::hypersurface({1}, 6, 5);
  ObstructionVerdict v = ut.lichnerowicz_check(0);
  CHECK(v.decisive == Q(1, 2));
  CHECK(v.tag == VerdictTag::ObstructedStrict);

  WeightedLink a2n3 = WeightedLink::hypersurface({2}, 6, 3);
  CHECK(a2n3.lichnerowicz_check(0).decisive == Q(6, 5));
  CHECK(a2n3.lichnerowicz_check(0).tag == VerdictTag::NotObstructedByThisTest);

  WeightedLink a2n4 = WeightedLink::hypersurface({2}, 6, 4);
  CHECK(a2n4.lichnerowicz_check(0).decisive == Q(1));
  CHECK(a2n4.lichnerowicz_check(0).tag == VerdictTag::ObstructedObata);

  // tail coordinates never obstruct and the minimal weight gives the
  // minimal charge
  for (const auto& nl : ts::corpus()) {
    INFO(nl.name);
    if (nl.link.fano_index() <= 0) continue;
    Rational min_charge = nl.link.lichnerowicz_charge(0);
    for (int i = 0; i < nl.link.ambient_dim(); ++i)
      CHECK(nl.link.lichnerowicz_charge(i) >= min_charge);
    for (int i = static_cast<int>(nl.link.inner_weights().size()); i < nl.link.ambient_dim(); ++i)
      CHECK(nl.link.lichnerowicz_charge(i) > Q(1));
  }
}

TEST_CASE("cone-wide obstruction inequality") {
  // unit tangent l = 1, n = 2: value 5, strict
  WeightedLink ut = WeightedLink::hypersurface({1}, 6, 5);
  CHECK(ut.whp_value() == Q(5));
  CHECK(ut.whp_obstruction().tag == VerdictTag::ObstructedStrict);

  // (p, q) = (3, 2): value -1, not obstructed
  WeightedLink pq32 = bp_quadric_link(3, 2);
  CHECK(pq32.whp_value() == Q(-1));
  CHECK(pq32.whp_obstruction().tag == VerdictTag::NotObstructedByThisTest);

  // (p, q) = (4, 2): boundary case, value 0 (charge exactly 1)
  WeightedLink pq42 = bp_quadric_link(4, 2);
  CHECK(pq42.whp_value() == Q(0));
  CHECK(pq42.whp_obstruction().tag == VerdictTag::ObstructedObata);

  // the inequality value equals I - dimY * w_min in every mode
  for (const auto& nl : ts::corpus()) {
    INFO(nl.name);
    CHECK(nl.link.whp_value() ==
          Q(nl.link.fano_index() - static_cast<long>(nl.link.dim_y()) * nl.link.min_weight()));
  }
}

TEST_CASE("generalized obstruction test") {
  WeightedLink ut = WeightedLink::hypersurface({1}, 6, 5);
  CharCoeffs c = char_coeffs(ut);

  // z_0 weight is slice-invariant and obstructs
  GenLichResult g = gen_lich_obstruction(ut, ut.coordinate_charge(0), c);
  CHECK(g.alpha_tangent_ok);
  CHECK(g.verdict.tag == VerdictTag::ObstructedStrict);
  CHECK(g.normal_cone.relative < Q(0));

  // the charge of u_1 fails the slice-invariance condition regardless of size
  GenLichResult gu = gen_lich_obstruction(ut, ut.coordinate_charge(1), c);
  CHECK_FALSE(gu.alpha_tangent_ok);
  CHECK(gu.verdict.tag == VerdictTag::NotObstructedByThisTest);

  // non-positive case propagates
  WeightedLink quadric = WeightedLink::hypersurface({}, 2, 2);
  CHECK(code_of([&] { gen_lich_obstruction(quadric); }) == ErrorCode::NotPositiveCase);
}

TEST_CASE("bP group orders") {
  CHECK(bp_group_order(2) == 28);
  CHECK(bp_group_order(3) == 992);
  CHECK(bp_group_order(4) == 8128);
  for (int m = 2; m <= 8; ++m) CHECK(bp_group_order(m) % 2 == 0);
  CHECK(code_of([] { bp_group_order(1); }) == ErrorCode::Validation);
}

TEST_CASE("catalog construction") {
  // homotopy spheres Sigma^{4n+1}: z0^{2k+1} plus 2n+1 quadratic terms
  CatalogEntry hs = catalog("homotopy-sphere-4n+1", {{"k", 2}, {"n", 2}});
  CHECK(hs.polynomial.find("z0^5") != std::string::npos);
  CHECK(hs.expected_cone_dim == 3);
  CHECK(hs.link.cone_dimension() == 3);
  CHECK(hs.expected_obstructed);
  CHECK(hs.link.whp_obstruction().obstructed());
  CHECK(catalog("homotopy-sphere-4n+1", {{"k", 1}, {"n", 2}}).link.whp_obstruction().obstructed());

  CatalogEntry e8 = catalog("E8", {{"n", 4}});
  CHECK(e8.link.weights() == std::vector<long>{6, 10, 15, 15, 15});
  CHECK(e8.expected_cone_dim == 2);
  CHECK(e8.link.cone_dimension() == 2);

  // Z_3 rational homology sphere family: k = 2 valid, quadratic z0^2 joins
  // the tail and the cone is one bigger than the printed column
  CatalogEntry z3 = catalog("rational-homology-sphere-Z3", {{"k", 2}, {"n", 2}});
  CHECK(z3.link.cone_dimension() == 3);
  CHECK(z3.expected_cone_dim == 3);
  CHECK_FALSE(z3.notes.empty());
  CHECK(z3.link.whp_obstruction().obstructed());
  CHECK(code_of([] { catalog("rational-homology-sphere-Z3", {{"k", 3}, {"n", 2}}); }) ==
        ErrorCode::ParameterRange);
  CHECK(code_of([] { catalog("rational-homology-sphere-Z3", {{"k", 1}, {"n", 2}}); }) ==
        ErrorCode::ParameterRange);

  CHECK(code_of([] { catalog("unit-tangent", {{"l", 0}, {"n", 2}}); }) == ErrorCode::ParameterRange);
  CHECK(code_of([] { catalog("no-such-family", {}); }) == ErrorCode::ParameterRange);
  CHECK(code_of([] { catalog("E8", {}); }) == ErrorCode::ParameterRange);
}

TEST_CASE("catalog covers both m labels for the sphere products") {
  CatalogEntry e = catalog("sphere-products-m", {{"p", 4}, {"q", 2}});
  CHECK(e.manifold.find("m = 2 or 1") != std::string::npos);
  CHECK(e.expected_obstructed);
  CHECK_FALSE(catalog("sphere-products-m", {{"p", 3}, {"q", 2}}).expected_obstructed);
}

TEST_CASE("eliminated linear coordinates") {
  // (p, q) = (3, 1): flat ambient model with weights (2, 3, 3)
  WeightedLink w31 = bp_quadric_link(3, 1);
  CHECK_FALSE(w31.is_hypersurface());
  CHECK(w31.weights() == std::vector<long>{2, 3, 3});
  CHECK(w31.dim_y() == 3);
  CHECK(w31.fano_index() == 8);
  CHECK(w31.whp_obstruction().tag == VerdictTag::ObstructedStrict);

  // (p, q) = (2, 1): everything quadratic after elimination, the flat model
  WeightedLink w21 = bp_quadric_link(2, 1);
  CHECK_FALSE(w21.is_hypersurface());
  CHECK(w21.weights() == std::vector<long>{1, 1, 1});
  CHECK(w21.cone_dimension() == 2);
  CHECK(w21.whp_obstruction().tag == VerdictTag::ObstructedObata);
}

TEST_CASE("table instances are deterministic and in range") {
  auto t1 = table1_instances(2);
  CHECK(t1.size() == 16);
  auto t2 = table2_instances(2);
  CHECK(t2.size() == 10);
  // the emission filter keeps only rows inside the stated ranges, so every
  // instance must carry the obstruction claim
  for (const auto& e : t1) CHECK(e.expected_obstructed);
  for (const auto& e : t2) CHECK(e.expected_obstructed);
}
