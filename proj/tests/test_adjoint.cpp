#include <gtest/gtest.h>

#include "qons/adjoint.hpp"
#include "qons/freealg.hpp"
#include "support.hpp"

using namespace qons;
using testing_support::Gen;
using testing_support::poly;
using testing_support::Q;
using testing_support::qd;

namespace {

struct Fixture {
  AlphabetPtr a = Alphabet::make({"A", "B", "X"});
  SymPoly A = SymPoly::generator(a, "A");
  SymPoly B = SymPoly::generator(a, "B");
  SymPoly X = SymPoly::generator(a, "X");
  SymbolicQ f;
};

}  // namespace

TEST(Ad, Examples) {
  Fixture F;
  EXPECT_EQ(apply_ad(F.f, 0, F.A, F.X), F.A * F.X - F.X * F.A);
  EXPECT_EQ(apply_ad(F.f, 1, F.A, SymPoly::one(F.a)), qd(1) * F.A);
  for (int r = -3; r <= 3; ++r) EXPECT_EQ(apply_ad(F.f, r, F.A, F.A), qd(r) * (F.A * F.A));
}

TEST(Ad, PrimitivesCommute) {
  Fixture F;
  Gen g(7);
  for (int t = 0; t < 8; ++t) {
    auto X = g.sympoly(F.a, 3, 2);
    for (int r = -3; r <= 3; ++r)
      for (int s = -3; s <= 3; ++s)
        EXPECT_EQ(apply_ad(F.f, r, F.A, apply_ad(F.f, s, F.A, X)), apply_ad(F.f, s, F.A, apply_ad(F.f, r, F.A, X)));
  }
}

TEST(Bad, Zero) {
  Fixture F;
  EXPECT_EQ(apply_bad(F.f, 0, F.A, F.B), qd(1).inverse() * poly(F.a, {{1, "AB"}, {-1, "BA"}}));
}

TEST(Bad, OneByExpansion) {
  Fixture F;
  // ad_1 ad_-1 X = A^2 X - (q^2 + q^-2) AXA + XA^2
  auto num = qd(2) * qd(2) * F.X + poly(F.a, {{1, "AAX"}, {-(Q(2) + Q(-2)), "AXA"}, {1, "XAA"}});
  EXPECT_EQ(apply_bad(F.f, 1, F.A, F.X), (qd(2) * qd(3)).inverse() * num);
}

TEST(Bad, TwoAtOne) {
  Fixture F;
  auto one = SymPoly::one(F.a);
  auto num = qd(4) * qd(4) * one - qd(2) * qd(2) * (F.A * F.A);
  EXPECT_EQ(apply_bad(F.f, 2, F.A, one), (qd(4) * qd(5)).inverse() * num);
}

TEST(BadProd, Examples) {
  Fixture F;
  EXPECT_EQ(apply_badprod(F.f, 0, F.A, F.X), F.X);
  EXPECT_EQ(apply_badprod(F.f, 1, F.A, F.B), apply_bad(F.f, 0, F.A, F.B));
  auto q3 = qint(3);
  auto dg1 = poly(F.a, {{1, "AAAB"}, {-q3, "AABA"}, {q3, "ABAA"}, {-1, "BAAA"}}) +
             qd(2) * qd(2) * poly(F.a, {{1, "AB"}, {-1, "BA"}});
  EXPECT_EQ(apply_badprod(F.f, 2, F.A, F.B), (qd(1) * qd(2) * qd(3)).inverse() * dg1);
}

TEST(BadProd, Factorization) {
  Fixture F;
  Gen g(9);
  for (int t = 0; t < 3; ++t) {
    auto X = g.sympoly(F.a, 2, 2);
    for (int n = 0; n <= 4; ++n)
      EXPECT_EQ(apply_badprod(F.f, n + 1, F.A, X), apply_bad(F.f, n, F.A, apply_badprod(F.f, n, F.A, X)));
  }
}

TEST(S, Examples) {
  Fixture F;
  EXPECT_EQ(apply_S(F.f, 0, F.A, F.X, Direction::Forward), F.X);
  auto norm = (qd(1) * qd(2)).inverse();
  auto fwd = norm * poly(F.a, {{Q(1), "AAB"}, {-(Q(1) + Q(-1)), "ABA"}, {Q(-1), "BAA"}});
  auto inv = norm * poly(F.a, {{Q(-1), "AAB"}, {-(Q(1) + Q(-1)), "ABA"}, {Q(1), "BAA"}});
  EXPECT_EQ(apply_S(F.f, 1, F.A, F.B, Direction::Forward), fwd);
  EXPECT_EQ(apply_S(F.f, 1, F.A, F.B, Direction::Inverse), inv);
}

TEST(S, ExpansionCacheMatchesDirect) {
  Fixture F;
  Gen g(13);
  auto X = g.sympoly(F.a, 3, 2);
  AdjointExpansion<SymbolicQ, SymPoly> ex(F.f, F.A, X);
  for (int n = 0; n <= 3; ++n)
    for (auto d : {Direction::Forward, Direction::Inverse})
      EXPECT_EQ(ex.S(n, d), apply_S(F.f, n, F.A, X, d));
}

TEST(TruncatedSum, Examples) {
  Fixture F;
  EXPECT_EQ(truncated_sum(F.f, F.A, F.X, 0, Direction::Forward), F.X);
  EXPECT_EQ(truncated_sum(F.f, F.A, F.B, 1, Direction::Forward), F.B + apply_S(F.f, 1, F.A, F.B, Direction::Forward));
  EXPECT_EQ(truncated_sum(F.f, F.A, F.A, 3, Direction::Forward), F.A);
}

TEST(A1Image, MatchesSumOfFirstTwo) {
  Fixture F;
  for (auto d : {Direction::Forward, Direction::Inverse})
    EXPECT_EQ(a1_image(F.f, F.A, F.B, d), truncated_sum(F.f, F.A, F.B, 1, d));
}

TEST(Operator, ApplyMatchesDirect) {
  Fixture F;
  Gen g(17);
  auto X = g.sympoly(F.a, 2, 2);
  for (int n = 0; n <= 3; ++n) {
    EXPECT_EQ((AdjointOperator<SymbolicQ, SymPoly>::bad(F.f, F.A, n).apply(X)), apply_bad(F.f, n, F.A, X));
    EXPECT_EQ((AdjointOperator<SymbolicQ, SymPoly>::badprod(F.f, F.A, n).apply(X)), apply_badprod(F.f, n, F.A, X));
    for (auto d : {Direction::Forward, Direction::Inverse})
      EXPECT_EQ((AdjointOperator<SymbolicQ, SymPoly>::S(F.f, F.A, n, d).apply(X)), apply_S(F.f, n, F.A, X, d));
  }
}

TEST(Operator, ReorderedCompositionsAgree) {
  Fixture F;
  Gen g(19);
  using Op = AdjointOperator<SymbolicQ, SymPoly>;
  for (int t = 0; t < 10; ++t) {
    std::vector<int> comp;
    for (int k = 0; k < 3; ++k) comp.push_back(g.integer(-3, 3));
    Op x = Op::identity(F.f, F.A), y = Op::identity(F.f, F.A);
    for (int r : comp) x = x * Op::ad(F.f, F.A, r);
    for (auto it = comp.rbegin(); it != comp.rend(); ++it) y = y * Op::ad(F.f, F.A, *it);
    auto X = g.sympoly(F.a, 2, 2);
    EXPECT_EQ(x.apply(X), y.apply(X));
  }
}

TEST(Numeric, AgreesWithSpecializedSymbolic) {
  Fixture F;
  Rational q0(5, 3);
  NumericQ nf(q0);
  auto nA = specialize(F.A, q0), nB = specialize(F.B, q0);
  for (int n = 0; n <= 3; ++n)
    EXPECT_EQ(apply_S(nf, n, nA, nB, Direction::Forward), specialize(apply_S(F.f, n, F.A, F.B, Direction::Forward), q0));
}
