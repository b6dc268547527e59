#include <gtest/gtest.h>

#include <random>

#include "tlalg/algebroid.hpp"
#include "tlalg/error.hpp"
#include "support/fixtures.hpp"

namespace tlalg {
namespace {

using testing::circle;
using testing::scalar;
using testing::torus;

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an Error";
  return ErrorCode::InvalidArgument;
}

/// The 2-cochain equal to 1 on the first triangle: it evaluates to 1 on the
/// fundamental cycle (whose first coefficient is +1).
TwistedCochain fundamental_cocycle(const SystemPtr& s) {
  TwistedCochain w(s, 2);
  RationalVector v(s->rank(), Rational(0));
  v[0] = 1;
  w.set_value(0, v);
  return w;
}

std::vector<RationalVector> coords_of(const std::vector<ChernWeilClass>& classes) {
  std::vector<RationalVector> out;
  for (const auto& c : classes) out.push_back(c.coordinates);
  return out;
}

TEST(TrivialAlgebroid, Examples) {
  auto a = trivial_algebroid(torus(), 1);
  EXPECT_TRUE(a.omega().is_zero());
  EXPECT_EQ(invariant_sections(a, 1).dimension(), 1u);

  auto b = trivial_algebroid(circle(), 2);
  EXPECT_EQ(cohomology(b.adjoint_ptr(), 0).dimension(), 2u);
  EXPECT_EQ(cohomology(b.adjoint_ptr(), 1).dimension(), 2u);

  EXPECT_EQ(code_of([] { trivial_algebroid(torus(), 0); }), ErrorCode::InvalidArgument);
}

TEST(MakeAlgebroid, AcceptsValidPairs) {
  auto t = torus();
  auto l = share(from_representation(t, {{"a", Rational(2)}, {"b", Rational(1)}}));
  EXPECT_NO_THROW(make_algebroid(l, TwistedCochain(l, 2)));

  auto triv = share(LocalSystem::trivial(t, 1));
  auto a = make_algebroid(triv, fundamental_cocycle(triv));
  auto cw = chern_weil(a, invariant_sections(a, 1).basis[0], 1);
  EXPECT_FALSE(cw.is_zero());
}

TEST(MakeAlgebroid, RejectsNonFlatWithTriangles) {
  auto t = torus();
  std::vector<RationalMatrix> tr(t->count(1), scalar(1));
  tr[0] = scalar(2);
  auto l = share(LocalSystem::from_transports(t, 1, tr));
  try {
    make_algebroid(l, TwistedCochain(l, 2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotFlat);
    EXPECT_EQ(e.witnesses(), check_flat(*l));
    EXPECT_EQ(e.witnesses().size(), 2u);
  }
}

TEST(MakeAlgebroid, RejectsNonClosedOnThreeSimplex) {
  auto c = testing::make(simplex_model(3));
  auto l = share(LocalSystem::trivial(c, 1));
  TwistedCochain w(l, 2);
  w.set_value(0, {1});
  try {
    make_algebroid(l, w);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotClosed);
    EXPECT_EQ(e.witnesses(), (std::vector<Simplex>{{0, 1, 2, 3}}));
  }
}

TEST(MakeAlgebroid, RejectsForeignOmega) {
  auto t = torus();
  auto l = share(LocalSystem::trivial(t, 1));
  auto other = share(LocalSystem::trivial(t, 2));
  EXPECT_EQ(code_of([&] { make_algebroid(l, TwistedCochain(other, 2)); }), ErrorCode::BaseMismatch);
  EXPECT_EQ(code_of([&] { make_algebroid(l, TwistedCochain(l, 1)); }), ErrorCode::BaseMismatch);
}

TEST(InvariantSections, Examples) {
  auto t = torus();
  auto triv = trivial_algebroid(t, 1);
  for (std::size_t k = 0; k <= 3; ++k) EXPECT_EQ(invariant_sections(triv, k).dimension(), 1u);

  auto l = share(from_representation(t, {{"a", Rational(2)}, {"b", Rational(1)}}));
  EXPECT_EQ(invariant_sections(make_algebroid(l, TwistedCochain(l, 2)), 1).dimension(), 0u);

  auto m = share(from_representation(t, {{"a", Rational(-1)}, {"b", Rational(1)}}));
  auto am = make_algebroid(m, TwistedCochain(m, 2));
  EXPECT_EQ(invariant_sections(am, 1).dimension(), 0u);
  EXPECT_EQ(invariant_sections(am, 2).dimension(), 1u);
}

TEST(InvariantSections, BoundedByRankWithEqualityIffTrivial) {
  std::mt19937 rng(41);
  auto t = torus();
  for (int i = 0; i < 10; ++i) {
    auto l = share(testing::random_flat_system(t, 1, rng));
    auto a = make_algebroid(l, TwistedCochain(l, 2));
    auto d = invariant_sections(a, 1).dimension();
    EXPECT_LE(d, 1u);
    EXPECT_EQ(d == 1, iso_rank1(*l, LocalSystem::trivial(t, 1)));
  }
}

TEST(ChernWeil, TorusCounterexampleImageIsZero) {
  std::mt19937 rng(42);
  auto t = torus();
  auto l = share(from_representation(t, {{"a", Rational(2)}, {"b", Rational(1)}}));
  for (int i = 0; i < 5; ++i) {
    auto a = make_algebroid(l, testing::random_cochain(l, 2, rng));
    for (std::size_t k = 1; k <= 2; ++k) {
      EXPECT_TRUE(chern_weil_image(a, k).empty());
      EXPECT_EQ(chern_weil_image_dimension(a, k), 0u);
    }
  }
}

TEST(ChernWeil, CoboundaryShiftLeavesClass) {
  std::mt19937 rng(43);
  auto t = torus();
  auto triv = share(LocalSystem::trivial(t, 1));
  auto a = make_algebroid(triv, fundamental_cocycle(triv));
  auto phi = invariant_sections(a, 1).basis[0];
  auto before = chern_weil(a, phi, 1);
  for (int i = 0; i < 5; ++i) {
    auto b = change_splitting(a, testing::random_cochain(triv, 1, rng));
    EXPECT_EQ(chern_weil(b, phi, 1).coordinates, before.coordinates);
  }
}

TEST(ChernWeil, DegreeZeroIsConstantClass) {
  auto a = trivial_algebroid(torus(), 1);
  auto cw = chern_weil(a, invariant_sections(a, 0).basis[0], 0);
  EXPECT_EQ(cw.degree, 0);
  EXPECT_FALSE(cw.is_zero());
}

TEST(ChernWeil, TrivialAlgebroidVanishesInPositiveDegree) {
  for (std::size_t dim = 1; dim <= 2; ++dim) {
    auto a = trivial_algebroid(torus(), dim);
    for (std::size_t k = 1; k <= 2; ++k)
      for (const auto& c : chern_weil_image(a, k)) EXPECT_TRUE(c.is_zero());
  }
}

TEST(ChernWeil, NonInvariantSectionThrows) {
  auto t = torus();
  auto l = share(from_representation(t, {{"a", Rational(2)}, {"b", Rational(1)}}));
  auto a = make_algebroid(l, TwistedCochain(l, 2));
  auto sys = share(sym_power(dual(*l), 1));
  TwistedCochain phi(sys, 0, RationalVector(9, Rational(1)));
  EXPECT_EQ(code_of([&] { chern_weil(a, phi, 1); }), ErrorCode::NotInvariant);
}

TEST(ChernWeil, RankTwoSquareOfCurvature) {
  // Trivial rank-2 adjoint, omega = (w, 0) with w the fundamental cocycle.
  // The quadratic invariant x0^2 pairs with omega^2 in degree 4, which is
  // zero on a surface; in degree 2, x0 recovers w.
  auto t = torus();
  auto l = share(LocalSystem::trivial(t, 2));
  auto a = make_algebroid(l, fundamental_cocycle(l));
  auto inv1 = invariant_sections(a, 1);
  ASSERT_EQ(inv1.dimension(), 2u);
  EXPECT_EQ(chern_weil_image_dimension(a, 1), 1u);
  EXPECT_EQ(invariant_sections(a, 2).dimension(), 3u);
  EXPECT_EQ(chern_weil_image_dimension(a, 2), 0u);
}

TEST(ChernWeil, QuadraticInvariantOnFourComplex) {
  // Exact omega on a contractible 4-complex: the k = 2 cocycle is closed
  // and its class is zero.
  auto c = testing::make(simplex_model(4));
  auto l = share(LocalSystem::trivial(c, 1));
  TwistedCochain w = coboundary(TwistedCochain(l, 1, RationalVector(c->count(1), Rational(1, 3))));
  auto a = make_algebroid(l, w);
  auto cw = chern_weil(a, invariant_sections(a, 2).basis[0], 2);
  EXPECT_EQ(cw.degree, 4);
  EXPECT_TRUE(coboundary(cw.cocycle).is_zero());
  EXPECT_TRUE(cw.is_zero());
}

TEST(ChangeSplitting, Examples) {
  std::mt19937 rng(44);
  auto t = torus();
  auto l = share(testing::random_flat_system(t, 1, rng));
  auto a = make_algebroid(l, testing::random_cochain(l, 2, rng));
  EXPECT_EQ(change_splitting(a, TwistedCochain(l, 1)), a);
  auto eta = testing::random_cochain(l, 1, rng);
  auto b = change_splitting(a, eta);
  EXPECT_EQ(b.adjoint(), a.adjoint());
  EXPECT_EQ(b.omega(), a.omega() + coboundary(eta));
}

TEST(PullbackAlgebroid, Examples) {
  std::mt19937 rng(45);
  auto t = torus();
  auto l = share(testing::random_flat_system(t, 1, rng));
  auto a = make_algebroid(l, testing::random_cochain(l, 2, rng));
  auto id = SimplicialMap::identity(t);
  EXPECT_EQ(pullback_algebroid(id, a), a);

  auto k = SimplicialMap::constant(torus(), t, 3);
  auto p = pullback_algebroid(k, a);
  EXPECT_EQ(p.adjoint(), LocalSystem::trivial(k.source_ptr(), 1));
  EXPECT_TRUE(p.omega().is_zero());
}

TEST(PullbackAlgebroid, ContiguousMapsGiveEqualChernWeilImages) {
  std::mt19937 rng(46);
  for (const auto& pr : testing::contiguous_pairs()) {
    auto triv = share(LocalSystem::trivial(pr.f.target_ptr(), 1));
    auto a = make_algebroid(triv, fundamental_cocycle(triv) + coboundary(testing::random_cochain(triv, 1, rng)));
    auto pf = pullback_algebroid(pr.f, a), pg = pullback_algebroid(pr.g, a);
    EXPECT_TRUE(iso_rank1(pf.adjoint(), pg.adjoint())) << pr.name;
    EXPECT_EQ(coords_of(chern_weil_image(pf, 1)), coords_of(chern_weil_image(pg, 1))) << pr.name;
  }
}

TEST(PullbackAlgebroid, ChernWeilIsNatural) {
  std::mt19937 rng(47);
  auto f = testing::torus_lazy_halving();
  auto triv = share(LocalSystem::trivial(f.target_ptr(), 1));
  for (int i = 0; i < 3; ++i) {
    auto omega = Rational(i + 1) * fundamental_cocycle(triv) + coboundary(testing::random_cochain(triv, 1, rng));
    auto a = make_algebroid(triv, omega);
    auto p = pullback_algebroid(f, a);
    auto phi = invariant_sections(a, 1).basis[0];
    auto phi_pulled = pullback_cochain(f, phi, share(pullback_system(f, phi.system())));
    auto lhs = chern_weil(p, TwistedCochain(share(sym_power(dual(p.adjoint()), 1)), 0, phi_pulled.values()), 1);
    auto rhs = chern_weil(a, phi, 1);
    auto m = induced_map_untwisted<Rational>(f, 2);
    EXPECT_EQ(lhs.coordinates, m * rhs.coordinates);
  }
}

}  // namespace
}  // namespace tlalg
