#pragma once

// Coefficient field: Laurent polynomials and rational functions in q over Q,
// plus a numeric mode where q is pinned to a rational number.

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"
#include "qons/error.hpp"

namespace qons {

using Integer = mpz_class;
using Rational = mpq_class;
using Json = nlohmann::json;

/// Parses "p", "-p" or "p/q". Throws Errc::ParseError.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& x);

/// Sparse Laurent polynomial with rational coefficients. Exponents are strictly
/// increasing and no stored coefficient is zero; the empty list is zero.
class LaurentPoly {
 public:
  struct Term {
    int exponent;
    Rational coeff;
    bool operator==(const Term& o) const { return exponent == o.exponent && coeff == o.coeff; }
  };

  LaurentPoly() = default;
  explicit LaurentPoly(const Rational& constant);

  static LaurentPoly monomial(int exponent, const Rational& coeff = 1);
  /// Sorts, merges equal exponents, and drops zeros.
  static LaurentPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  int min_exponent() const;
  int max_exponent() const;
  Rational coefficient(int exponent) const;
  Rational evaluate(const Rational& q0) const;
  LaurentPoly shifted(int by) const;

  friend LaurentPoly operator+(const LaurentPoly& x, const LaurentPoly& y);
  friend LaurentPoly operator-(const LaurentPoly& x, const LaurentPoly& y);
  friend LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y);
  friend LaurentPoly operator-(const LaurentPoly& x);
  friend bool operator==(const LaurentPoly& x, const LaurentPoly& y) { return x.terms_ == y.terms_; }

  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

/// Element of Q(q) in canonical form.
///
/// Stored as scale * q^shift * N(q) / D(q) where N and D are primitive integer
/// polynomials with nonzero constant term and positive leading coefficient, and
/// gcd(N, D) = 1. The representation is unique, so == is mathematical equality.
/// Seen as num/den, den = D (min exponent 0, content 1, positive leading
/// coefficient) and num = scale * q^shift * N.
class RationalFunctionQ {
 public:
  RationalFunctionQ();
  RationalFunctionQ(long value);  // NOLINT(google-explicit-constructor)
  RationalFunctionQ(const Rational& value);  // NOLINT(google-explicit-constructor)
  /// Throws Errc::DivisionByZero when den is zero.
  RationalFunctionQ(const LaurentPoly& num, const LaurentPoly& den);
  explicit RationalFunctionQ(const LaurentPoly& num) : RationalFunctionQ(num, LaurentPoly(Rational(1))) {}

  static RationalFunctionQ q_power(int n);

  LaurentPoly numerator() const;
  LaurentPoly denominator() const;
  bool is_zero() const noexcept { return sgn(scale_) == 0; }
  /// True when the denominator is 1.
  bool is_laurent() const noexcept { return den_.size() == 1; }
  /// Throws Errc::DivisionByZero on zero.
  RationalFunctionQ inverse() const;

  friend RationalFunctionQ operator+(const RationalFunctionQ& x, const RationalFunctionQ& y);
  friend RationalFunctionQ operator-(const RationalFunctionQ& x, const RationalFunctionQ& y);
  friend RationalFunctionQ operator*(const RationalFunctionQ& x, const RationalFunctionQ& y);
  friend RationalFunctionQ operator/(const RationalFunctionQ& x, const RationalFunctionQ& y);
  friend RationalFunctionQ operator-(const RationalFunctionQ& x);
  RationalFunctionQ& operator+=(const RationalFunctionQ& y) { return *this = *this + y; }
  RationalFunctionQ& operator-=(const RationalFunctionQ& y) { return *this = *this - y; }
  RationalFunctionQ& operator*=(const RationalFunctionQ& y) { return *this = *this * y; }
  friend bool operator==(const RationalFunctionQ& x, const RationalFunctionQ& y) {
    return x.scale_ == y.scale_ && x.shift_ == y.shift_ && x.num_ == y.num_ && x.den_ == y.den_;
  }

  std::string to_string() const;

  // Raw canonical parts, exposed for evaluation and tests of the invariants.
  const Rational& scale() const noexcept { return scale_; }
  int shift() const noexcept { return shift_; }
  const std::vector<Integer>& primitive_numerator() const noexcept { return num_; }
  const std::vector<Integer>& primitive_denominator() const noexcept { return den_; }

 private:
  Rational scale_;
  int shift_ = 0;
  std::vector<Integer> num_;
  std::vector<Integer> den_;
};

/// [n]_q = (q^n - q^-n)/(q - q^-1), as a Laurent polynomial.
RationalFunctionQ qint(int n);

/// Substitutes q -> q0. Throws InvalidQ for q0 in {0, 1, -1} and PoleAtPoint
/// when the denominator vanishes at q0.
Rational eval_at(const RationalFunctionQ& x, const Rational& q0);

/// The standing hypothesis on q for a rational value: not 0, 1 or -1.
bool is_valid_q(const Rational& q0);

// Scalar helpers shared by both coefficient types.
inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_zero(const RationalFunctionQ& x) { return x.is_zero(); }
Rational inverse(const Rational& x);
inline RationalFunctionQ inverse(const RationalFunctionQ& x) { return x.inverse(); }
inline std::string to_string(const RationalFunctionQ& x) { return x.to_string(); }

Json to_json(const LaurentPoly& p);
Json to_json(const RationalFunctionQ& x);
/// Constants are emitted in the same {"num","den"} shape.
Json to_json(const Rational& x);
LaurentPoly laurent_from_json(const Json& j);
/// Accepts an integer, a rational string, or a {"num","den"} object.
RationalFunctionQ rf_from_json(const Json& j);

/// Symbolic coefficient mode: scalars are elements of Q(q).
struct SymbolicQ {
  using Scalar = RationalFunctionQ;
  Scalar q_pow(int n) const { return RationalFunctionQ::q_power(n); }
  Scalar constant(const Rational& c) const { return RationalFunctionQ(c); }
  static std::string name() { return "symbolic"; }
};

/// Numeric coefficient mode: q is a fixed rational q0 outside {0, 1, -1}.
class NumericQ {
 public:
  using Scalar = Rational;
  explicit NumericQ(Rational q0);
  Scalar q_pow(int n) const;
  Scalar constant(const Rational& c) const { return c; }
  const Rational& q0() const noexcept { return q0_; }
  static std::string name() { return "numeric"; }

 private:
  Rational q0_;
};

using CoefficientMode = std::variant<SymbolicQ, NumericQ>;

std::string mode_name(const CoefficientMode& mode);

/// q^n - q^-n in the field's scalars.
template <class Field>
typename Field::Scalar qdiff(const Field& f, int n) {
  return f.q_pow(n) - f.q_pow(-n);
}

}  // namespace qons
