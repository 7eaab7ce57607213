#include <gtest/gtest.h>

#include "generators.hpp"
#include "oracles.hpp"
#include "horo/horospherical.hpp"

using namespace horo;

namespace {

LatticeVector e(std::size_t n, std::size_t i, long k = 1) {
  LatticeVector v(n, 0);
  v[i] = k;
  return v;
}

AffineLattice sublattice(std::size_t n, std::vector<LatticeVector> basis) {
  return {QVec(n, Rational(0)), std::move(basis)};
}

// C^3 \ {0}: weights (k,0,0), Lambda(H) spanned by step * e1.
HorosphericalSpace bezout(long step = 1) {
  return {ChamberFace(GroupDescriptor::gl(3), {{1, 2}}), sublattice(3, {e(3, 0, step)}), SpaceMode::general};
}

SupportSet ray_support(const HorosphericalSpace& s, std::vector<long> ks) {
  std::vector<Weight> w;
  for (long k : ks) w.push_back({k, 0, 0});
  return {s, w};
}

std::vector<long> upto(long d) {
  std::vector<long> v;
  for (long k = 0; k <= d; ++k) v.push_back(k);
  return v;
}

HorosphericalSpace gl2_quotient() { return HorosphericalSpace::quotient(ChamberFace::full(GroupDescriptor::gl(2))); }

SupportSet gl2_triangle(const HorosphericalSpace& s) { return {s, {{0, 0}, {1, 0}, {1, 1}}}; }

HorosphericalSpace torus2() { return HorosphericalSpace::quotient(ChamberFace::full(GroupDescriptor::torus(2))); }

SupportSet torus_poly(const HorosphericalSpace& s, std::vector<Weight> w) { return {s, w}; }

// Cheap spaces for the property suites; every arity is at most 3.
std::vector<HorosphericalSpace> property_spaces() {
  auto g2 = ChamberFace::full(GroupDescriptor::gl(2));
  auto g2t = ChamberFace::full(GroupDescriptor({2}, 1));
  return {
      gl2_quotient(),
      {g2, sublattice(2, {{1, 0}}), SpaceMode::general},
      {g2, sublattice(2, {{1, 1}, {1, -1}}), SpaceMode::general},
      {g2, sublattice(2, {{2, 2}}), SpaceMode::general},
      {g2t, sublattice(3, {{1, 1, 0}, {0, 0, 2}}), SpaceMode::general},
      bezout(1),
      bezout(2),
      {ChamberFace(GroupDescriptor::gl(3), {{2, 1}}), sublattice(3, {{1, 1, 1}}), SpaceMode::general},
  };
}

Rational both_routes(const HorosphericalSpace& s, const std::vector<SupportSet>& a) {
  Rational i = index_via_integral(s, a);
  EXPECT_EQ(i, index_via_lift(s, a));
  return i;
}

}  // namespace

TEST(Space, DimensionsAndModes) {
  auto b = bezout();
  EXPECT_EQ(b.arity(), 3u);
  EXPECT_EQ(b.p(), 4);
  EXPECT_EQ(gl2_quotient().arity(), 3u);
  EXPECT_THROW(HorosphericalSpace(ChamberFace(GroupDescriptor::gl(3), {{1, 2}}), sublattice(3, {e(3, 0)}),
                                  SpaceMode::quotient_by_commutator),
               DomainError);
  EXPECT_THROW(HorosphericalSpace(ChamberFace(GroupDescriptor::gl(3), {{1, 2}}), sublattice(3, {e(3, 1)}),
                                  SpaceMode::general),
               DomainError);
  EXPECT_EQ(parse_space_mode("general"), SpaceMode::general);
  EXPECT_THROW(parse_space_mode("linear"), DomainError);
}

TEST(Support, Validation) {
  auto b = bezout(2);
  EXPECT_THROW(SupportSet(b, std::vector<Weight>{}), DomainError);
  EXPECT_THROW(SupportSet(b, {{1, 0}}), DomainError);
  EXPECT_THROW(SupportSet(b, {{2, 1, 0}}), DomainError);
  EXPECT_THROW(SupportSet(b, {{0, 1, 1}}), DomainError);
  EXPECT_THROW(ray_support(b, {0, 1}), DomainError);
  EXPECT_NO_THROW(ray_support(b, {1, 3}));
}

TEST(MomentPolytope, Examples) {
  auto b = bezout();
  EXPECT_EQ(moment_polytope(ray_support(b, {4})), Polytope::point(QVec{4, 0, 0}));
  EXPECT_EQ(moment_polytope(ray_support(b, upto(3))), hull({QVec{0, 0, 0}, QVec{3, 0, 0}}));
  auto q = gl2_quotient();
  EXPECT_EQ(moment_polytope(gl2_triangle(q)), hull({QVec{0, 0}, QVec{1, 0}, QVec{1, 1}}));
}

TEST(ProductSupport, Examples) {
  auto b = bezout();
  auto a = ray_support(b, {0, 2, 5});
  EXPECT_EQ(product_support(a, ray_support(b, {0})).weights(), a.weights());
  EXPECT_EQ(product_support(ray_support(b, upto(2)), ray_support(b, upto(3))).weights(),
            ray_support(b, upto(5)).weights());
  auto q = gl2_quotient();
  EXPECT_EQ(product_support(SupportSet(q, {{0, 0}}), SupportSet(q, {{1, 1}})).weights(), (std::vector<Weight>{{1, 1}}));
  EXPECT_THROW(product_support(a, SupportSet(q, {{0, 0}})), DomainError);
}

TEST(CompletionSupport, Examples) {
  auto sub = HorosphericalSpace::quotient(ChamberFace(GroupDescriptor::gl(3), {{1, 2}}));
  EXPECT_EQ(completion_support(SupportSet(sub, {{0, 0, 0}, {3, 0, 0}})).weights(),
            (std::vector<Weight>{{0, 0, 0}, {1, 0, 0}, {2, 0, 0}, {3, 0, 0}}));
  auto even = bezout(2);
  EXPECT_EQ(completion_support(ray_support(even, {0, 4})).weights(), ray_support(even, {0, 2, 4}).weights());
  EXPECT_EQ(completion_support(ray_support(even, {1, 3})).weights(), ray_support(even, {1, 3}).weights());
}

TEST(Index, BezoutProducts) {
  auto b = bezout();
  for (long d1 = 1; d1 <= 3; ++d1)
    for (long d2 = 1; d2 <= 2; ++d2)
      for (long d3 = 1; d3 <= 2; ++d3)
        EXPECT_EQ(both_routes(b, {ray_support(b, upto(d1)), ray_support(b, upto(d2)), ray_support(b, upto(d3))}),
                  d1 * d2 * d3);
}

TEST(Index, HomogeneousSingletonsGiveZero) {
  auto b = bezout();
  EXPECT_EQ(both_routes(b, {ray_support(b, {1}), ray_support(b, {2}), ray_support(b, {3})}), 0);
}

TEST(Index, Gl2TriangleTriple) {
  auto q = gl2_quotient();
  auto t = gl2_triangle(q);
  auto r = compute_index(q, {t, t, t});
  EXPECT_EQ(r.integral, 1);
  EXPECT_EQ(r.lift, 1);
  ASSERT_TRUE(r.hilbert);
  EXPECT_EQ(*r.hilbert, 1);
  EXPECT_TRUE(r.agree);
}

TEST(Index, TorusIsBernsteinKushnirenko) {
  auto t = torus2();
  auto simplex = [&](long d) { return torus_poly(t, {{0, 0}, {d, 0}, {0, d}}); };
  EXPECT_EQ(both_routes(t, {simplex(1), simplex(1)}), 1);
  for (long d1 = 1; d1 <= 3; ++d1)
    for (long d2 = 1; d2 <= 3; ++d2) EXPECT_EQ(both_routes(t, {simplex(d1), simplex(d2)}), d1 * d2);
  auto square = torus_poly(t, {{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  EXPECT_EQ(both_routes(t, {square, square}), 2);
}

TEST(Index, FlagDegrees) {
  auto flag2 = HorosphericalSpace(ChamberFace::full(GroupDescriptor::gl(2)), sublattice(2, {}), SpaceMode::general);
  for (long k = 1; k <= 5; ++k) EXPECT_EQ(both_routes(flag2, {SupportSet(flag2, {{k, 0}})}), k);
  auto flag3 = HorosphericalSpace(ChamberFace::full(GroupDescriptor::gl(3)), sublattice(3, {}), SpaceMode::general);
  SupportSet rho(flag3, {{2, 1, 0}});
  auto r = compute_index(flag3, {rho, rho, rho});
  EXPECT_EQ(r.integral, 6);
  EXPECT_EQ(r.lift, 6);
  EXPECT_EQ(r.hilbert, Rational(6));
}

TEST(Index, WrongArityIsDomainError) {
  auto b = bezout();
  EXPECT_THROW(index_via_integral(b, {ray_support(b, {0, 1})}), DomainError);
  EXPECT_THROW(index_via_lift(b, {ray_support(b, {0, 1})}), DomainError);
  auto q = gl2_quotient();
  EXPECT_THROW(index_via_integral(b, {ray_support(b, {0, 1}), ray_support(b, {0, 1}), gl2_triangle(q)}), DomainError);
}

TEST(Index, NonIntegerResultIsValidationError) {
  EXPECT_THROW(detail::checked_index(frac(1, 2), "test"), ValidationError);
  EXPECT_THROW(detail::checked_index(Rational(-1), "test"), ValidationError);
  EXPECT_EQ(detail::checked_index(Rational(3), "test"), 3);
}

TEST(Hilbert, Examples) {
  auto q = gl2_quotient();
  auto t = gl2_triangle(q);
  EXPECT_EQ(hilbert_function(t, 0), 1);
  EXPECT_EQ(hilbert_function(t, 1), 4);
  EXPECT_EQ(hilbert_function(t, 2), 10);
  for (long k = 0; k <= 6; ++k) {
    // Sum over the dilated triangle of (t+1)(k+1-t) with t the second coordinate.
    Integer expect = 0;
    for (long s = 0; s <= k; ++s) expect += (s + 1) * (k + 1 - s);
    EXPECT_EQ(hilbert_function(t, k), expect);
  }
  EXPECT_THROW(hilbert_function(t, -1), DomainError);
  auto c = hilbert_polynomial(t, 6);
  EXPECT_EQ(c[3], frac(1, 6));
}

TEST(Hilbert, PointSupportIsWeylDimension) {
  auto q = gl2_quotient();
  SupportSet pt(q, {{3, 1}});
  for (long k = 0; k <= 4; ++k) EXPECT_EQ(hilbert_function(pt, k), dim_irrep(q.group(), {3 * k, k}));
  EXPECT_EQ(self_index_via_hilbert(pt), 0);
}

TEST(Hilbert, BezoutCubes) {
  auto b = bezout();
  for (long d = 1; d <= 2; ++d) EXPECT_EQ(self_index_via_hilbert(ray_support(b, upto(d))), d * d * d);
}

TEST(IndexProperty, RouteAgreementAndIntegrality) {
  gen::Rng rng(61);
  for (const auto& s : property_spaces()) {
    int nonzero = 0;
    for (int trial = 0; trial < 6; ++trial) {
      auto a = gen::supports(rng, s);
      Rational i = both_routes(s, a);
      EXPECT_TRUE(is_integer(i));
      EXPECT_GE(i, 0);
      nonzero += sgn(i) > 0;
    }
    EXPECT_GT(nonzero, 0) << "every sampled index vanished";
  }
}

TEST(IndexProperty, DiagonalHilbertAgreement) {
  gen::Rng rng(62);
  for (const auto& s : property_spaces()) {
    for (int trial = 0; trial < 4; ++trial) {
      auto a = gen::support(rng, s);
      std::vector<SupportSet> diag(s.arity(), a);
      auto r = compute_index(s, diag);
      ASSERT_TRUE(r.hilbert);
      EXPECT_TRUE(r.agree) << to_string(r.integral) << " " << to_string(r.lift) << " " << to_string(*r.hilbert);
    }
  }
}

TEST(IndexProperty, Symmetry) {
  gen::Rng rng(63);
  for (const auto& s : property_spaces()) {
    auto a = gen::supports(rng, s);
    Rational base = index_via_integral(s, a);
    std::vector<std::size_t> perm(a.size());
    std::iota(perm.begin(), perm.end(), 0);
    while (std::next_permutation(perm.begin(), perm.end())) {
      std::vector<SupportSet> b;
      for (auto i : perm) b.push_back(a[i]);
      EXPECT_EQ(index_via_integral(s, b), base);
      EXPECT_EQ(index_via_lift(s, b), base);
    }
  }
}

TEST(IndexProperty, CompletionInvariance) {
  gen::Rng rng(64);
  for (const auto& s : property_spaces()) {
    for (int trial = 0; trial < 3; ++trial) {
      auto a = gen::supports(rng, s);
      Rational base = both_routes(s, a);
      for (std::size_t i = 0; i < a.size(); ++i) {
        auto b = a;
        b[i] = completion_support(a[i]);
        EXPECT_EQ(both_routes(s, b), base);
      }
    }
  }
}

TEST(IndexProperty, AdditivityUnderProducts) {
  gen::Rng rng(65);
  for (const auto& s : property_spaces()) {
    for (int trial = 0; trial < 3; ++trial) {
      auto a = gen::supports(rng, s);
      auto extra = gen::support(rng, s);
      auto with_extra = a;
      with_extra[0] = extra;
      auto prod = a;
      prod[0] = product_support(a[0], extra);
      EXPECT_EQ(both_routes(s, prod), both_routes(s, a) + both_routes(s, with_extra));
    }
  }
}

TEST(IndexProperty, Monotonicity) {
  gen::Rng rng(66);
  for (const auto& s : property_spaces()) {
    for (int trial = 0; trial < 3; ++trial) {
      auto a = gen::supports(rng, s);
      auto bigger = a;
      std::size_t i = static_cast<std::size_t>(gen::between(rng, 0, static_cast<long>(a.size()) - 1));
      auto w = a[i].weights();
      for (const auto& x : gen::support(rng, s).weights()) {
        // Stay in the coset of the original support.
        auto trial_set = w;
        trial_set.push_back(x);
        try {
          bigger[i] = SupportSet(s, trial_set);
          w = trial_set;
        } catch (const DomainError&) {
        }
      }
      EXPECT_GE(both_routes(s, bigger), both_routes(s, a));
    }
  }
}
