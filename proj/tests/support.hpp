#pragma once

// Seeded generators for the property tests.

#include <random>

#include "qons/freealg.hpp"
#include "qons/matrix.hpp"

namespace testing_support {

using namespace qons;

class Gen {
 public:
  explicit Gen(unsigned seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  Rational rational(int span = 5) {
    int den = integer(1, span);
    Rational r(integer(-span, span), den);
    r.canonicalize();
    return r;
  }
  Rational nonzero_rational(int span = 5) {
    Rational r;
    do r = rational(span);
    while (sgn(r) == 0);
    return r;
  }
  /// A rational outside {0, 1, -1}.
  Rational valid_q(int span = 6) {
    Rational r;
    do {
      r = Rational(integer(-span, span), integer(1, span));
      r.canonicalize();
    } while (!is_valid_q(r));
    return r;
  }

  LaurentPoly laurent(int max_terms = 3, int exp_span = 3) {
    std::vector<LaurentPoly::Term> ts;
    int n = integer(0, max_terms);
    for (int k = 0; k < n; ++k) ts.push_back({integer(-exp_span, exp_span), rational()});
    return LaurentPoly::from_terms(ts);
  }
  LaurentPoly nonzero_laurent(int max_terms = 3, int exp_span = 3) {
    LaurentPoly p;
    do p = laurent(max_terms, exp_span);
    while (p.is_zero());
    return p;
  }
  RationalFunctionQ rf() { return RationalFunctionQ(laurent(), nonzero_laurent()); }
  RationalFunctionQ nonzero_rf() { return RationalFunctionQ(nonzero_laurent(), nonzero_laurent()); }

  Word word(size_t letters, int max_len) {
    Word w;
    int n = integer(0, max_len);
    for (int k = 0; k < n; ++k) w.push_back(static_cast<std::uint16_t>(integer(0, static_cast<int>(letters) - 1)));
    return w;
  }
  SymPoly sympoly(const AlphabetPtr& a, int max_terms = 3, int max_len = 3) {
    SymPoly p(a);
    int n = integer(0, max_terms);
    for (int k = 0; k < n; ++k) p.add_term(word(a->size(), max_len), RationalFunctionQ(laurent(2, 2)));
    return p;
  }
  NumPoly numpoly(const AlphabetPtr& a, int max_terms = 4, int max_len = 4) {
    NumPoly p(a);
    int n = integer(0, max_terms);
    for (int k = 0; k < n; ++k) p.add_term(word(a->size(), max_len), rational());
    return p;
  }
  QMatrix matrix(size_t n, int span = 4) {
    QMatrix m(n);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) m(i, j) = integer(-span, span);
    return m;
  }

  std::mt19937& engine() { return rng_; }

 private:
  std::mt19937 rng_;
};

inline RationalFunctionQ Q(int n) { return RationalFunctionQ::q_power(n); }
inline RationalFunctionQ qd(int n) { return Q(n) - Q(-n); }

}  // namespace testing_support

namespace testing_support {

/// Builds sum c_k * w_k from single-character words like "AAB"; "" is 1.
inline SymPoly poly(const AlphabetPtr& a, std::initializer_list<std::pair<RationalFunctionQ, const char*>> ts) {
  SymPoly p(a);
  for (const auto& [c, w] : ts) p.add_term(parse_word(*a, w), c);
  return p;
}

}  // namespace testing_support
