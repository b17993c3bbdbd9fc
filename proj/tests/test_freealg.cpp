#include <gtest/gtest.h>

#include "qons/freealg.hpp"
#include "support.hpp"

using namespace qons;
using testing_support::Gen;
using testing_support::poly;
using testing_support::Q;

namespace {

AlphabetPtr AB() { return Alphabet::make({"A", "B"}); }

}  // namespace

TEST(Alphabet, RejectsDuplicatesAndEmpty) {
  EXPECT_THROW(Alphabet::make({"A", "A"}), Error);
  EXPECT_THROW(Alphabet::make({"A", ""}), Error);
  auto a = Alphabet::make({"A", "B"}, {"B", "A"});
  EXPECT_GT(a->rank(1), a->rank(0));
}

TEST(DegLex, DegreeFirstThenPrecedence) {
  auto a = AB();
  DegLex less{a.get()};
  EXPECT_TRUE(less(parse_word(*a, "AA"), parse_word(*a, "BBB")));
  EXPECT_TRUE(less(parse_word(*a, "BA"), parse_word(*a, "AB")));
  EXPECT_TRUE(less(parse_word(*a, "BAAA"), parse_word(*a, "AAAB")));
  EXPECT_FALSE(less(parse_word(*a, "AB"), parse_word(*a, "AB")));
}

TEST(DegLex, CompatibleWithConcatenation) {
  auto a = AB();
  DegLex less{a.get()};
  Gen g(2);
  for (int t = 0; t < 300; ++t) {
    Word x = g.word(2, 4), y = g.word(2, 4), u = g.word(2, 3), v = g.word(2, 3);
    if (!less(x, y)) std::swap(x, y);
    if (x == y) continue;
    EXPECT_TRUE(less(concat(concat(u, x), v), concat(concat(u, y), v)));
  }
}

TEST(NcPoly, Products) {
  auto a = AB();
  auto A = SymPoly::generator(a, "A"), B = SymPoly::generator(a, "B");
  EXPECT_EQ(A * B, poly(a, {{1, "AB"}}));
  auto c = A * B - B * A;
  EXPECT_EQ(c * SymPoly::one(a), c);
  EXPECT_EQ((A + B) * (A + B), poly(a, {{1, "AA"}, {1, "AB"}, {1, "BA"}, {1, "BB"}}));
}

TEST(NcPoly, AlphabetMismatch) {
  auto x = SymPoly::generator(AB(), "A");
  auto y = SymPoly::generator(Alphabet::make({"A", "C"}), "A");
  try {
    (void)(x * y);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::AlphabetMismatch);
  }
}

TEST(NcPoly, IsZero) {
  auto a = AB();
  auto A = SymPoly::generator(a, "A"), B = SymPoly::generator(a, "B");
  EXPECT_TRUE(is_zero(A * B - A * B));
  EXPECT_FALSE(is_zero(A * B - B * A));
  EXPECT_TRUE(is_zero((Q(1) - Q(-1)) * A - Q(1) * A + Q(-1) * A));
}

TEST(NcPoly, Associativity) {
  auto a = Alphabet::make({"A", "B", "C"});
  Gen g(31);
  for (int t = 0; t < 60; ++t) {
    auto p = g.sympoly(a), r = g.sympoly(a), s = g.sympoly(a);
    EXPECT_EQ((p * r) * s, p * (r * s));
  }
}

TEST(NcPoly, DegreeAdditive) {
  Gen g(37);
  for (int t = 0; t < 100; ++t) {
    Word x = g.word(3, 5), y = g.word(3, 5);
    EXPECT_EQ(concat(x, y).size(), x.size() + y.size());
  }
}

TEST(Substitute, Examples) {
  auto a = AB();
  auto A = SymPoly::generator(a, "A"), B = SymPoly::generator(a, "B");
  EXPECT_EQ(substitute(A * B, {{"A", A}, {"B", A}}), A * A);
  EXPECT_TRUE(is_zero(substitute(A * B - B * A, {{"A", A}, {"B", SymPoly::one(a)}})));
  auto xy = Alphabet::make({"X", "Y"});
  auto X = SymPoly::generator(xy, "X"), Y = SymPoly::generator(xy, "Y");
  EXPECT_EQ(substitute(A, {{"A", X + Y}}), X + Y);
  try {
    (void)substitute(A * B, {{"A", X}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::MissingImage);
  }
}

TEST(Substitute, Multiplicative) {
  auto a = Alphabet::make({"A", "B", "C"});
  auto t = Alphabet::make({"X", "Y"});
  Gen g(41);
  for (int k = 0; k < 40; ++k) {
    std::map<std::string, SymPoly> img{{"A", g.sympoly(t, 2, 2)}, {"B", g.sympoly(t, 2, 2)}, {"C", g.sympoly(t, 2, 2)}};
    auto p = g.sympoly(a, 3, 2), r = g.sympoly(a, 3, 2);
    EXPECT_EQ(substitute(p * r, img), substitute(p, img) * substitute(r, img));
  }
}

TEST(Specialize, MatchesEvaluation) {
  auto a = AB();
  auto p = poly(a, {{Q(1) + Q(-1), "AB"}, {Q(2), "B"}});
  auto n = specialize(p, 2);
  EXPECT_EQ(n.coefficient(parse_word(*a, "AB")), Rational(5, 2));
  EXPECT_EQ(n.coefficient(parse_word(*a, "B")), 4);
}

TEST(ExpressionJson, RoundTrip) {
  auto a = Alphabet::make({"A", "B", "C"});
  Gen g(43);
  for (int t = 0; t < 30; ++t) {
    auto p = g.sympoly(a, 4, 4);
    auto text = to_json(p).dump();
    auto back = sympoly_from_json(Json::parse(text));
    EXPECT_EQ(back, p);
    EXPECT_EQ(to_json(back).dump(), text);
  }
}

TEST(ExpressionJson, Parse) {
  auto p = sympoly_from_json(Json::parse(R"({"alphabet":["A","B"],"terms":[{"word":["B"],"coeff":1}]})"));
  EXPECT_EQ(p, SymPoly::generator(p.alphabet(), "B"));
  auto z = sympoly_from_json(Json::parse(R"({"alphabet":["A","B"],"terms":[]})"));
  EXPECT_TRUE(z.is_zero());
  try {
    (void)sympoly_from_json(Json::parse(R"({"alphabet":["A","B"],"terms":[{"word":["A","C"],"coeff":1}]})"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ParseError);
    EXPECT_NE(std::string(e.what()).find("/terms/0/word/1"), std::string::npos) << e.what();
  }
}
