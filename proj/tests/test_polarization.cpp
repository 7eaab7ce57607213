#include <gtest/gtest.h>

#include <numeric>

#include "generators.hpp"
#include "horo/polarization.hpp"
#include "oracles.hpp"

using namespace horo;

namespace {

QVec q(std::initializer_list<long> v) {
  QVec out;
  for (long x : v) out.emplace_back(x);
  return out;
}

AffineLattice z(std::size_t n) { return AffineLattice::standard(n); }
Polytope square() { return hull({q({0, 0}), q({1, 0}), q({0, 1}), q({1, 1})}); }
Polytope simplex2() { return hull({q({0, 0}), q({1, 0}), q({0, 1})}); }
// {0 <= x2 <= x1 <= 1}
Polytope dominant_triangle() { return hull({q({0, 0}), q({1, 0}), q({1, 1})}); }

Polynomial x(std::size_t n, std::size_t i) { return Polynomial::variable(n, i); }

Rational mv(std::vector<Polytope> bodies, std::size_t dim, unsigned workers = 1) {
  return mixed_volume(BodySystem(std::move(bodies), z(dim)), workers);
}

}  // namespace

TEST(Polynomial, ArithmeticAndComponents) {
  Polynomial f = x(2, 0) * x(2, 0) - x(2, 1) + Polynomial::constant(2, 3);
  EXPECT_EQ(f.total_degree(), 2);
  EXPECT_FALSE(f.is_homogeneous());
  auto comps = f.homogeneous_components();
  ASSERT_EQ(comps.size(), 3u);
  EXPECT_EQ(comps[2], x(2, 0) * x(2, 0));
  EXPECT_EQ(f.top_component(), comps[2]);
  Polynomial sum(2);
  for (const auto& [d, p] : comps) sum += p;
  EXPECT_EQ(sum, f);
  EXPECT_EQ(f.evaluate(q({2, 5})), 2);
  EXPECT_TRUE((f - f).is_zero());
  EXPECT_EQ((f - f).total_degree(), -1);
  EXPECT_EQ(f.to_string(), "x0^2 - x1 + 3");
}

TEST(Polynomial, ComposeSubstitutes) {
  // (a + b)^2 with a = u, b = u - v
  Polynomial f = (x(2, 0) + x(2, 1)) * (x(2, 0) + x(2, 1));
  Polynomial g = f.compose({x(2, 0), x(2, 0) - x(2, 1)});
  EXPECT_EQ(g, (x(2, 0) * Rational(2) - x(2, 1)) * (x(2, 0) * Rational(2) - x(2, 1)));
  EXPECT_THROW(f.compose({x(2, 0)}), DomainError);
}

TEST(Integrate, Examples) {
  EXPECT_EQ(integrate(Polynomial::constant(2, 1), square(), z(2)), 1);
  EXPECT_EQ(integrate(x(2, 0), square(), z(2)), Rational(1, 2));
  // int_0^1 int_{x2}^1 (x1 - x2) dx1 dx2 = 1/6
  EXPECT_EQ(integrate(x(2, 0) - x(2, 1), dominant_triangle(), z(2)), Rational(1, 6));
}

TEST(Integrate, MonomialsOverBoxMatchClosedForm) {
  // int over [0,a]x[0,b] of x^i y^j = a^(i+1) b^(j+1) / ((i+1)(j+1))
  gen::Rng rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    long a = gen::between(rng, 1, 3), b = gen::between(rng, 1, 3);
    int i = static_cast<int>(gen::between(rng, 0, 3)), j = static_cast<int>(gen::between(rng, 0, 3));
    Polynomial m(2);
    m.add_term({i, j}, 1);
    auto box = hull({q({0, 0}), q({a, 0}), q({0, b}), q({a, b})});
    Rational expect = 1;
    for (int k = 0; k <= i; ++k) expect *= a;
    for (int k = 0; k <= j; ++k) expect *= b;
    expect /= Rational((i + 1) * (j + 1));
    EXPECT_EQ(integrate(m, box, z(2)), expect);
  }
}

TEST(Integrate, LowerDimensionalSpan) {
  // Segment from (0,0) to (2,4): lattice length 2, x0 runs 0..2 linearly.
  auto seg = hull({q({0, 0}), q({2, 4})});
  EXPECT_EQ(integrate(Polynomial::constant(2, 1), seg, z(2)), 2);
  EXPECT_EQ(integrate(x(2, 0), seg, z(2)), 2);  // mean 1 times length 2
  EXPECT_EQ(integrate(x(2, 0), Polytope::point(q({3, 1})), z(2)), 3);
}

TEST(MixedVolume, Examples) {
  EXPECT_EQ(mv({square(), square()}, 2), 1);
  EXPECT_EQ(mv({simplex2(), simplex2()}, 2), Rational(1, 2));
  EXPECT_EQ(mv({square(), simplex2()}, 2), 1);
  // Inclusion-exclusion with the shoelace oracle.
  Rational sum_area = oracle::shoelace_area(minkowski_sum(square(), simplex2()).vertices());
  EXPECT_EQ((sum_area - 1 - Rational(1, 2)) / 2, 1);
  for (long d1 = 1; d1 <= 3; ++d1)
    for (long d2 = 1; d2 <= 3; ++d2)
      EXPECT_EQ(mv({dilate(simplex2(), d1), dilate(simplex2(), d2)}, 2), frac(d1 * d2, 2));
}

TEST(MixedVolume, CountMismatchIsDomainError) {
  EXPECT_THROW(mv({square()}, 2), DomainError);
  EXPECT_THROW(mv({square(), square(), square()}, 2), DomainError);
}

TEST(MixedVolume, BodyNotParallelIsDomainError) {
  AffineLattice line(q({0, 0}), {{1, 0}});
  EXPECT_THROW(BodySystem({square()}, line), DomainError);
}

TEST(MixedVolume, RelativeToSubspace) {
  // Segments on the line spanned by (1,1), normalized to Z(1,1).
  AffineLattice diag(q({0, 0}), {{1, 1}});
  auto seg = [](long a, long b) { return hull({q({a, a}), q({b, b})}); };
  EXPECT_EQ(mixed_volume(BodySystem({seg(0, 3)}, diag)), 3);
  // Bodies in parallel translates are fine.
  auto shifted = hull({q({1, 0}), q({3, 2})});
  EXPECT_EQ(mixed_volume(BodySystem({shifted}, diag)), 2);
  // A point has zero Pi-volume when Pi has positive rank.
  EXPECT_EQ(mixed_volume(BodySystem({Polytope::point(q({1, 1}))}, diag)), 0);
}

TEST(MixedVolume, EmptySystemIsOne) {
  AffineLattice none(q({0, 0}), {});
  EXPECT_EQ(mixed_volume(BodySystem({}, none)), 1);
}

TEST(MixedIntegral, Examples) {
  // F = 1 gives the mixed volume.
  EXPECT_EQ(mixed_integral(Polynomial::constant(2, 1), BodySystem({square(), simplex2()}, z(2))), 1);
  // Pi = R, F = k^2/2, bodies [0,d1],[0,d2],[0,d3] -> d1 d2 d3 / 3!
  Polynomial half_sq = x(1, 0) * x(1, 0) * Rational(1, 2);
  for (long d1 = 1; d1 <= 3; ++d1)
    for (long d2 = 1; d2 <= 3; ++d2)
      for (long d3 = 1; d3 <= 3; ++d3) {
        BodySystem s({hull({q({0}), q({d1})}), hull({q({0}), q({d2})}), hull({q({0}), q({d3})})}, z(1));
        EXPECT_EQ(mixed_integral(half_sq, s), frac(d1 * d2 * d3, 6));
      }
  auto t = dominant_triangle();
  EXPECT_EQ(mixed_integral(x(2, 0) - x(2, 1), BodySystem({t, t, t}, z(2))), Rational(1, 6));
}

TEST(MixedIntegral, Errors) {
  EXPECT_THROW(mixed_integral(x(2, 0) + Polynomial::constant(2, 1), BodySystem({square(), square()}, z(2))),
               DomainError);
  EXPECT_THROW(mixed_integral(x(2, 0), BodySystem({square(), square()}, z(2))), DomainError);
}

TEST(MixedIntegral, DegreeZeroOnRankZero) {
  AffineLattice none(q({0, 0}), {});
  EXPECT_EQ(mixed_integral(Polynomial::constant(2, 5), BodySystem({}, none)), 5);
}

TEST(Polarize, SymmetryExhaustive) {
  gen::Rng rng(22);
  for (std::size_t dim = 1; dim <= 3; ++dim) {
    for (int trial = 0; trial < 3; ++trial) {
      std::vector<Polytope> bodies;
      for (std::size_t i = 0; i < dim; ++i) bodies.push_back(gen::int_polytope(rng, dim, 4, 0, 2));
      Rational base = mv(bodies, dim);
      std::vector<std::size_t> perm(dim);
      std::iota(perm.begin(), perm.end(), 0);
      do {
        std::vector<Polytope> pb;
        for (auto i : perm) pb.push_back(bodies[i]);
        EXPECT_EQ(mv(pb, dim), base);
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }
}

TEST(Polarize, MultilinearityProperty) {
  gen::Rng rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t dim = static_cast<std::size_t>(gen::between(rng, 1, 3));
    std::vector<Polytope> bodies;
    for (std::size_t i = 0; i < dim; ++i) bodies.push_back(gen::int_polytope(rng, dim, 4, 0, 2));
    Polytope extra = gen::int_polytope(rng, dim, 4, 0, 2);
    auto with = bodies;
    with[0] = minkowski_sum(bodies[0], extra);
    auto alone = bodies;
    alone[0] = extra;
    EXPECT_EQ(mv(with, dim), mv(bodies, dim) + mv(alone, dim));
  }
}

TEST(Polarize, TranslationInvarianceProperty) {
  gen::Rng rng(24);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t dim = static_cast<std::size_t>(gen::between(rng, 1, 3));
    std::vector<Polytope> bodies;
    for (std::size_t i = 0; i < dim; ++i) bodies.push_back(gen::int_polytope(rng, dim, 4, 0, 2));
    auto moved = bodies;
    std::size_t which = static_cast<std::size_t>(gen::between(rng, 0, static_cast<long>(dim) - 1));
    moved[which] = translate(bodies[which], to_qvec(gen::int_point(rng, dim, -2, 2)));
    EXPECT_EQ(mv(moved, dim), mv(bodies, dim));
  }
}

TEST(Polarize, MixedIntegralTranslationMatchesShiftedPolynomial) {
  // Translating every body by t equals integrating F(. + t) over the
  // originals; F(. + t) is inhomogeneous, so compare on the diagonal.
  gen::Rng rng(25);
  for (int trial = 0; trial < 10; ++trial) {
    auto p = gen::full_polytope(rng, 2, 2);
    QVec t = to_qvec(gen::int_point(rng, 2, -2, 2));
    Polynomial f = x(2, 0) * x(2, 1);
    Polynomial shifted = f.compose({x(2, 0) + Polynomial::constant(2, t[0]), x(2, 1) + Polynomial::constant(2, t[1])});
    auto moved = translate(p, t);
    EXPECT_EQ(mixed_integral(f, BodySystem({moved, moved, moved, moved}, z(2))), integrate(shifted, p, z(2)));
  }
}

TEST(Polarize, DiagonalConsistencyProperty) {
  gen::Rng rng(26);
  for (int trial = 0; trial < 15; ++trial) {
    std::size_t dim = static_cast<std::size_t>(gen::between(rng, 1, 2));
    auto p = gen::full_polytope(rng, dim, 3);
    Polynomial f = x(dim, 0) * x(dim, 0);
    std::vector<Polytope> bodies(dim + 2, p);
    EXPECT_EQ(mixed_integral(f, BodySystem(bodies, z(dim))), integrate(f, p, z(dim)));
    std::vector<Polytope> vb(dim, p);
    EXPECT_EQ(mv(vb, dim), volume(p, z(dim)));
    EXPECT_GE(mv(vb, dim), 0);
  }
  // A body of lower dimension than Pi has Pi-volume zero, unlike its own
  // span-relative volume.
  auto seg = hull({q({0, 0}), q({2, 1})});
  EXPECT_EQ(mv({seg, seg}, 2), 0);
  EXPECT_EQ(volume(seg, z(2)), 1);
}

TEST(Polarize, ParallelWorkersGiveIdenticalResults) {
  gen::Rng rng(27);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<Polytope> bodies;
    for (int i = 0; i < 3; ++i) bodies.push_back(gen::int_polytope(rng, 3, 5, 0, 3));
    EXPECT_EQ(mv(bodies, 3, 1), mv(bodies, 3, 4));
  }
}
