#include <gtest/gtest.h>

#include "qons/onsager.hpp"
#include "support.hpp"

using namespace qons;
using testing_support::Gen;
using testing_support::poly;
using testing_support::Q;
using testing_support::qd;

namespace {

const OnsagerContext& ctx() {
  static const OnsagerContext cx;
  return cx;
}

Word W(const char* s) { return parse_word(*ctx().alphabet(), s); }

// B + [q^{+-1} A^2 B - (q + q^-1) ABA + q^{-+1} B A^2] / [(q - q^-1)(q^2 - q^-2)]
SymPoly closed_image(int s) {
  const auto& al = ctx().alphabet();
  RationalFunctionQ n = (qd(1) * qd(2)).inverse();
  return ctx().B() + n * poly(al, {{Q(s), "AAB"}, {-(Q(1) + Q(-1)), "ABA"}, {Q(-s), "BAA"}});
}

template <class F>
std::optional<Errc> code_of(F&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace

TEST(OnsagerContext, Certificates) {
  const auto& cx = ctx();
  EXPECT_EQ(cx.certificate_A().bound, 0);
  EXPECT_EQ(cx.certificate_B().bound, 1);
  EXPECT_EQ(cx.certificate_B().evidence, StandardnessCertificate::Evidence::DirectVanish);
  EXPECT_TRUE(cx.is_zero_mod(apply_badprod(cx.field(), 2, cx.A(), cx.B())).zero());
  EXPECT_EQ(cx.qdg().rules().size(), 2u);
}

TEST(StandardBound, Words) {
  const auto& cx = ctx();
  EXPECT_EQ(cx.standard_bound(W("AABA")), 1);
  EXPECT_EQ(cx.standard_bound(W("BB")), 2);
  EXPECT_EQ(cx.standard_bound(W("AAA")), 0);
  EXPECT_EQ(cx.standard_bound(Word{}), 0);
  auto c = cx.certify_word(W("BAB"));
  EXPECT_EQ(c.evidence, StandardnessCertificate::Evidence::ProductRule);
  EXPECT_EQ(c.element, SymPoly::monomial(cx.alphabet(), W("BAB")));
  EXPECT_EQ(cx.standard_bound(cx.A() * cx.B() * cx.B() + cx.A()), 2);
  EXPECT_EQ(cx.standard_bound(SymPoly(cx.alphabet())), 0);
}

TEST(StandardBound, RandomWordsMatchLetterCount) {
  const auto& cx = ctx();
  Gen g(41);
  for (int t = 0; t < 30; ++t) {
    Word w = g.word(2, 8);
    EXPECT_EQ(cx.standard_bound(w), std::count(w.begin(), w.end(), cx.alphabet()->letter("B")));
  }
}

TEST(Certificates, ProductRule) {
  const auto& cx = ctx();
  auto bb = certify_product(cx.certificate_B(), cx.certificate_B());
  EXPECT_EQ(bb.bound, 2);
  EXPECT_EQ(bb.element, cx.B() * cx.B());
  EXPECT_EQ(bb.factors.size(), 2u);
  auto ab = certify_product(cx.certificate_A(), cx.certificate_B());
  EXPECT_EQ(ab.bound, 1);
  auto one = *certify_direct(cx.A(), SymPoly::one(cx.alphabet()), 0);
  EXPECT_EQ(certify_product(one, cx.certificate_B()).bound, 1);
  // Over another base element.
  auto other = generator_certificate(cx.B(), cx.A(), 0, "swapped roles");
  EXPECT_EQ(code_of([&] { certify_product(other, cx.certificate_B()); }), Errc::ContextMismatch);
  EXPECT_FALSE(certify_direct(cx.A(), cx.B(), 1).has_value());  // not in the free algebra
  EXPECT_TRUE(to_json(bb).contains("factors"));
}

TEST(Lusztig, ClosedFormsOnGenerators) {
  const auto& cx = ctx();
  EXPECT_EQ(cx.lusztig(cx.A(), Direction::Forward), cx.A());
  EXPECT_EQ(cx.lusztig(cx.A(), Direction::Inverse), cx.A());
  // Identically in the free algebra, before any rewriting.
  EXPECT_EQ(cx.lusztig_raw(cx.B(), Direction::Forward, 1), closed_image(1));
  EXPECT_EQ(cx.lusztig_raw(cx.B(), Direction::Inverse, 1), closed_image(-1));
  EXPECT_EQ(cx.lusztig(cx.B(), Direction::Forward), cx.normal_form(closed_image(1)));
  EXPECT_EQ(cx.a1_closed_form(cx.B(), Direction::Forward), closed_image(1));
  EXPECT_EQ(cx.a1_closed_form(cx.B(), Direction::Inverse), closed_image(-1));
  EXPECT_EQ(cx.a1_closed_form(cx.A(), Direction::Forward), cx.A());
}

TEST(Lusztig, InverseRestoresB) {
  const auto& cx = ctx();
  for (auto dir : {Direction::Forward, Direction::Inverse}) {
    auto other = dir == Direction::Forward ? Direction::Inverse : Direction::Forward;
    auto back = cx.lusztig(cx.lusztig(cx.B(), dir), other);
    EXPECT_TRUE(cx.is_zero_mod(back - cx.B()).zero());
  }
}

TEST(Lusztig, TruncationStability) {
  const auto& cx = ctx();
  for (const auto& X : {cx.B(), cx.B() * cx.B(), cx.A() * cx.B() + cx.B() * cx.A()}) {
    int N = cx.standard_bound(X);
    for (auto dir : {Direction::Forward, Direction::Inverse}) {
      auto diff = cx.lusztig_raw(X, dir, N + 2) - cx.lusztig_raw(X, dir, N);
      EXPECT_TRUE(cx.is_zero_mod(diff).zero());
    }
  }
}

TEST(A1ClosedForm, RejectsElementsOutsideA1) {
  const auto& cx = ctx();
  EXPECT_EQ(code_of([&] { cx.a1_closed_form(cx.B() * cx.B(), Direction::Forward); }), Errc::NotCertifiedA1);
}

TEST(ZeroCheck, FallsBackToModels) {
  const auto& cx = ctx();
  ASSERT_GE(cx.models().size(), 3u);
  for (const auto& m : cx.models()) {
    EXPECT_TRUE(dg_defect(NumericQ(m.q0), m.A, m.B).is_zero());
    EXPECT_TRUE(dg_defect(NumericQ(m.q0), m.B, m.A).is_zero());
  }
  auto z = cx.zero_check(cx.A() * cx.B() - cx.B() * cx.A());
  EXPECT_EQ(z.status, Status::Fail);
  EXPECT_NE(z.evidence.find("matrix-model"), std::string::npos);
  EXPECT_EQ(cx.zero_check(apply_badprod(cx.field(), 2, cx.A(), cx.B())).status, Status::Pass);
}

TEST(CommutantFixed, PolynomialsInA) {
  const auto& cx = ctx();
  const auto& A = cx.A();
  EXPECT_EQ(cx.commutant_fixed_check(A * A * A).status, Status::Pass);
  EXPECT_EQ(cx.commutant_fixed_check(SymPoly::one(cx.alphabet())).status, Status::Pass);
  EXPECT_EQ(cx.commutant_fixed_check(A * A + qd(1) * A).status, Status::Pass);
  EXPECT_EQ(cx.commutant_fixed_check(cx.B()).status, Status::Inconclusive);
}

TEST(HigherDg, BothModes) {
  const auto& cx = ctx();
  for (int r = 1; r <= 3; ++r) {
    EXPECT_EQ(cx.higher_dg_check(r, HigherDgMode::Rewrite).status, Status::Pass) << r;
    EXPECT_EQ(cx.higher_dg_check(r, HigherDgMode::Certified).status, Status::Pass) << r;
  }
  EXPECT_EQ(code_of([&] { cx.higher_dg_check(0, HigherDgMode::Rewrite); }), Errc::InvalidParams);
}

TEST(HigherDg, WordsWithFewBs) {
  // (bad A)_{k+1}(w) vanishes for every word with k B letters.
  const auto& cx = ctx();
  Gen g(42);
  for (int t = 0; t < 12; ++t) {
    Word w = g.word(2, 5);
    int k = cx.standard_bound(w);
    if (k > 3) continue;
    auto v = apply_badprod(cx.field(), k + 1, cx.A(), SymPoly::monomial(cx.alphabet(), w));
    auto z = cx.zero_check(v);
    EXPECT_EQ(z.status, Status::Pass) << word_to_string(*cx.alphabet(), w);
  }
}

TEST(Homomorphism, SpotChecks) {
  const auto& cx = ctx();
  for (auto [a, b] : {std::pair{"A", "B"}, {"B", ""}, {"B", "A"}, {"B", "B"}, {"AB", "B"}}) {
    auto rep = cx.homomorphism_spotcheck(W(a), W(b));
    EXPECT_EQ(rep.status, Status::Pass) << a << "." << b << " " << rep.witness->dump();
  }
}
