#include "qons/qcoeff.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace qons {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::PoleAtPoint: return "PoleAtPoint";
    case Errc::InvalidQ: return "InvalidQ";
    case Errc::AlphabetMismatch: return "AlphabetMismatch";
    case Errc::MissingImage: return "MissingImage";
    case Errc::InvalidParams: return "InvalidParams";
    case Errc::ContextMismatch: return "ContextMismatch";
    case Errc::NotLeadingMonomial: return "NotLeadingMonomial";
    case Errc::OrderViolation: return "OrderViolation";
    case Errc::NotCertifiedA1: return "NotCertifiedA1";
    case Errc::InvalidCutoff: return "InvalidCutoff";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::DegenerateEigenvalues: return "DegenerateEigenvalues";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::NotDiagonalizable: return "NotDiagonalizable";
    case Errc::ParseError: return "ParseError";
    case Errc::InvariantViolation: return "InvariantViolation";
    case Errc::IoError: return "IoError";
  }
  return "Unknown";
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto valid_int = [](std::string_view t) {
    if (!t.empty() && (t[0] == '-' || t[0] == '+')) t.remove_prefix(1);
    return !t.empty() && std::all_of(t.begin(), t.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || (den[0] == '-' || den[0] == '+'))
    throw Error(Errc::ParseError, "not a rational: '" + s + "'");
  if (num[0] == '+') num.erase(0, 1);
  Rational r;
  r.get_num() = Integer(num);
  r.get_den() = Integer(den);
  if (sgn(r.get_den()) == 0) throw Error(Errc::ParseError, "zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& x) { return x.get_str(); }

Rational inverse(const Rational& x) {
  if (sgn(x) == 0) throw Error(Errc::DivisionByZero, "inverse of zero rational");
  return 1 / x;
}

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly::LaurentPoly(const Rational& constant) {
  if (sgn(constant) != 0) terms_.push_back({0, constant});
}

LaurentPoly LaurentPoly::monomial(int exponent, const Rational& coeff) {
  LaurentPoly p;
  if (sgn(coeff) != 0) p.terms_.push_back({exponent, coeff});
  return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  std::map<int, Rational> acc;
  for (auto& t : terms) acc[t.exponent] += t.coeff;
  LaurentPoly p;
  for (auto& [e, c] : acc)
    if (sgn(c) != 0) p.terms_.push_back({e, c});
  return p;
}

int LaurentPoly::min_exponent() const {
  if (terms_.empty()) throw Error(Errc::InvalidParams, "min_exponent of zero polynomial");
  return terms_.front().exponent;
}

int LaurentPoly::max_exponent() const {
  if (terms_.empty()) throw Error(Errc::InvalidParams, "max_exponent of zero polynomial");
  return terms_.back().exponent;
}

Rational LaurentPoly::coefficient(int exponent) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                             [](const Term& t, int e) { return t.exponent < e; });
  if (it != terms_.end() && it->exponent == exponent) return it->coeff;
  return 0;
}

namespace {

Rational rational_pow(const Rational& x, int n) {
  Rational base = n < 0 ? inverse(x) : x;
  unsigned long k = n < 0 ? static_cast<unsigned long>(-static_cast<long>(n)) : static_cast<unsigned long>(n);
  Rational result;
  mpz_pow_ui(result.get_num_mpz_t(), base.get_num_mpz_t(), k);
  mpz_pow_ui(result.get_den_mpz_t(), base.get_den_mpz_t(), k);
  result.canonicalize();
  return result;
}

}  // namespace

Rational LaurentPoly::evaluate(const Rational& q0) const {
  if (terms_.empty()) return 0;
  if (sgn(q0) == 0) throw Error(Errc::InvalidQ, "evaluation of a Laurent polynomial at 0");
  // Horner from the top exponent down, then scale by q0^min.
  Rational acc = 0;
  int prev = terms_.back().exponent;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    acc *= rational_pow(q0, prev - it->exponent);
    acc += it->coeff;
    prev = it->exponent;
  }
  return acc * rational_pow(q0, prev);
}

LaurentPoly LaurentPoly::shifted(int by) const {
  LaurentPoly p = *this;
  for (auto& t : p.terms_) t.exponent += by;
  return p;
}

LaurentPoly operator+(const LaurentPoly& x, const LaurentPoly& y) {
  LaurentPoly r;
  auto a = x.terms_.begin(), b = y.terms_.begin();
  while (a != x.terms_.end() || b != y.terms_.end()) {
    if (b == y.terms_.end() || (a != x.terms_.end() && a->exponent < b->exponent)) {
      r.terms_.push_back(*a++);
    } else if (a == x.terms_.end() || b->exponent < a->exponent) {
      r.terms_.push_back(*b++);
    } else {
      Rational c = a->coeff + b->coeff;
      if (sgn(c) != 0) r.terms_.push_back({a->exponent, c});
      ++a;
      ++b;
    }
  }
  return r;
}

LaurentPoly operator-(const LaurentPoly& x) {
  LaurentPoly r = x;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

LaurentPoly operator-(const LaurentPoly& x, const LaurentPoly& y) { return x + (-y); }

LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y) {
  std::vector<LaurentPoly::Term> out;
  out.reserve(x.terms_.size() * y.terms_.size());
  for (const auto& a : x.terms_)
    for (const auto& b : y.terms_) out.push_back({a.exponent + b.exponent, a.coeff * b.coeff});
  return LaurentPoly::from_terms(std::move(out));
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    Rational c = it->coeff;
    bool neg = sgn(c) < 0;
    if (neg) c = -c;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    if (it->exponent == 0) {
      os << c.get_str();
      continue;
    }
    if (c != 1) os << c.get_str() << "*";
    os << "q";
    if (it->exponent != 1) os << "^" << it->exponent;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Dense integer polynomials (index = degree), used for canonical forms.

namespace {

using ZPoly = std::vector<Integer>;

void trim(ZPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

int degree(const ZPoly& p) { return static_cast<int>(p.size()) - 1; }

bool is_one(const ZPoly& p) { return p.size() == 1 && p[0] == 1; }

ZPoly mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  if (is_one(a)) return b;
  if (is_one(b)) return a;
  ZPoly r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
  trim(r);
  return r;
}

ZPoly scaled(const ZPoly& a, const Integer& c) {
  ZPoly r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * c;
  trim(r);
  return r;
}

ZPoly shifted_up(const ZPoly& a, int k) {
  if (k == 0 || a.empty()) return a;
  ZPoly r(static_cast<size_t>(k), Integer(0));
  r.insert(r.end(), a.begin(), a.end());
  return r;
}

// Positive content; zero for the zero polynomial.
Integer content(const ZPoly& a) {
  Integer g = 0;
  for (const auto& c : a) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

// Divides out the content and fixes the sign so the leading coefficient is
// positive; returns the signed factor removed.
Integer make_primitive(ZPoly& a) {
  Integer g = content(a);
  if (sgn(g) == 0) return 0;
  if (sgn(a.back()) < 0) g = -g;
  if (g != 1)
    for (auto& c : a) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return g;
}

// Number of leading zero coefficients; the rest is moved down.
int strip_low_zeros(ZPoly& a) {
  size_t k = 0;
  while (k < a.size() && sgn(a[k]) == 0) ++k;
  if (k > 0) a.erase(a.begin(), a.begin() + static_cast<long>(k));
  return static_cast<int>(k);
}

// Pseudo-remainder of a by b (b nonzero), up to a nonzero integer factor.
ZPoly pseudo_rem(ZPoly a, const ZPoly& b) {
  const Integer& lb = b.back();
  int db = degree(b);
  while (!a.empty() && degree(a) >= db) {
    Integer la = a.back();
    int k = degree(a) - db;
    for (auto& c : a) c *= lb;
    for (int i = 0; i <= db; ++i) mpz_submul(a[i + k].get_mpz_t(), la.get_mpz_t(), b[i].get_mpz_t());
    trim(a);
  }
  return a;
}

// gcd of primitive polynomials via the primitive remainder sequence.
ZPoly gcd_primitive(ZPoly a, ZPoly b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  if (a.size() == 1 || b.size() == 1) return {Integer(1)};
  if (a == b) return a;
  if (degree(a) < degree(b)) std::swap(a, b);
  while (!b.empty()) {
    if (b.size() == 1) return {Integer(1)};
    ZPoly r = pseudo_rem(a, b);
    make_primitive(r);
    a = std::move(b);
    b = std::move(r);
  }
  make_primitive(a);
  return a;
}

// Exact quotient a / b over Z where b divides a in Z[x].
ZPoly div_exact(ZPoly a, const ZPoly& b) {
  if (is_one(b)) return a;
  int db = degree(b);
  int dq = degree(a) - db;
  if (dq < 0) throw std::logic_error("div_exact: degree underflow");
  ZPoly q(static_cast<size_t>(dq + 1));
  const Integer& lb = b.back();
  for (int k = dq; k >= 0; --k) {
    Integer& top = a[static_cast<size_t>(k + db)];
    if (sgn(top) == 0) continue;
    mpz_divexact(q[k].get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    for (int i = 0; i <= db; ++i) mpz_submul(a[i + k].get_mpz_t(), q[k].get_mpz_t(), b[i].get_mpz_t());
  }
  return q;
}

Rational eval_zpoly(const ZPoly& p, const Rational& x) {
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

struct Normalized {
  Rational scale;
  int shift = 0;
  ZPoly prim;
};

// Writes a nonzero Laurent polynomial as scale * q^shift * prim.
Normalized normalize(const LaurentPoly& p) {
  Normalized n;
  if (p.is_zero()) return n;
  Integer lcm_den = 1;
  for (const auto& t : p.terms()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), t.coeff.get_den_mpz_t());
  int lo = p.min_exponent();
  n.shift = lo;
  n.prim.assign(static_cast<size_t>(p.max_exponent() - lo + 1), Integer(0));
  for (const auto& t : p.terms()) {
    Integer v = t.coeff.get_num() * (lcm_den / t.coeff.get_den());
    n.prim[static_cast<size_t>(t.exponent - lo)] = v;
  }
  Integer g = make_primitive(n.prim);
  n.scale = Rational(g, lcm_den);
  n.scale.canonicalize();
  return n;
}

LaurentPoly to_laurent(const ZPoly& p, int shift, const Rational& scale) {
  std::vector<LaurentPoly::Term> terms;
  for (size_t i = 0; i < p.size(); ++i)
    if (sgn(p[i]) != 0) terms.push_back({static_cast<int>(i) + shift, scale * p[i]});
  return LaurentPoly::from_terms(std::move(terms));
}

}  // namespace

// ---------------------------------------------------------------------------
// RationalFunctionQ

RationalFunctionQ::RationalFunctionQ() : scale_(0), den_{Integer(1)} {}

RationalFunctionQ::RationalFunctionQ(long value) : RationalFunctionQ(Rational(value)) {}

RationalFunctionQ::RationalFunctionQ(const Rational& value) : scale_(value), den_{Integer(1)} {
  if (sgn(value) != 0) num_ = {Integer(1)};
}

RationalFunctionQ::RationalFunctionQ(const LaurentPoly& num, const LaurentPoly& den) : RationalFunctionQ() {
  if (den.is_zero()) throw Error(Errc::DivisionByZero, "rational function with zero denominator");
  if (num.is_zero()) return;
  Normalized n = normalize(num);
  Normalized d = normalize(den);
  ZPoly g = gcd_primitive(n.prim, d.prim);
  scale_ = n.scale / d.scale;
  shift_ = n.shift - d.shift;
  num_ = div_exact(std::move(n.prim), g);
  den_ = div_exact(std::move(d.prim), g);
  // Both quotients of primitive positive-leading polynomials by a primitive
  // positive-leading divisor stay primitive with positive leading term.
}

RationalFunctionQ RationalFunctionQ::q_power(int n) {
  RationalFunctionQ r(Rational(1));
  r.shift_ = n;
  return r;
}

LaurentPoly RationalFunctionQ::numerator() const { return to_laurent(num_, shift_, scale_); }

LaurentPoly RationalFunctionQ::denominator() const { return to_laurent(den_, 0, 1); }

RationalFunctionQ RationalFunctionQ::inverse() const {
  if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero rational function");
  RationalFunctionQ r;
  r.scale_ = 1 / scale_;
  r.shift_ = -shift_;
  r.num_ = den_;
  r.den_ = num_;
  return r;
}

RationalFunctionQ operator*(const RationalFunctionQ& x, const RationalFunctionQ& y) {
  if (x.is_zero() || y.is_zero()) return {};
  RationalFunctionQ r;
  r.scale_ = x.scale_ * y.scale_;
  r.shift_ = x.shift_ + y.shift_;
  ZPoly g1 = gcd_primitive(x.num_, y.den_);
  ZPoly g2 = gcd_primitive(y.num_, x.den_);
  r.num_ = mul(div_exact(x.num_, g1), div_exact(y.num_, g2));
  r.den_ = mul(div_exact(x.den_, g2), div_exact(y.den_, g1));
  return r;
}

RationalFunctionQ operator+(const RationalFunctionQ& x, const RationalFunctionQ& y) {
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  int s = std::min(x.shift_, y.shift_);
  ZPoly g = gcd_primitive(x.den_, y.den_);
  ZPoly dx = div_exact(x.den_, g);
  ZPoly dy = div_exact(y.den_, g);
  // x + y = (sx*q^a*Nx*dy + sy*q^b*Ny*dx) / (g*dx*dy); clear the rational scales.
  const Integer& xn = x.scale_.get_num();
  const Integer& xd = x.scale_.get_den();
  const Integer& yn = y.scale_.get_num();
  const Integer& yd = y.scale_.get_den();
  ZPoly tx = scaled(mul(shifted_up(x.num_, x.shift_ - s), dy), xn * yd);
  ZPoly ty = scaled(mul(shifted_up(y.num_, y.shift_ - s), dx), yn * xd);
  if (tx.size() < ty.size()) tx.resize(ty.size());
  for (size_t i = 0; i < ty.size(); ++i) tx[i] += ty[i];
  trim(tx);
  if (tx.empty()) return {};
  RationalFunctionQ r;
  r.shift_ = s + strip_low_zeros(tx);
  Integer c = make_primitive(tx);
  r.scale_ = Rational(c, xd * yd);
  r.scale_.canonicalize();
  // Any common factor of the numerator and g*dx*dy divides g.
  ZPoly h = gcd_primitive(tx, g);
  r.num_ = div_exact(std::move(tx), h);
  r.den_ = mul(mul(dx, dy), div_exact(g, h));
  return r;
}

RationalFunctionQ operator-(const RationalFunctionQ& x) {
  RationalFunctionQ r = x;
  r.scale_ = -r.scale_;
  return r;
}

RationalFunctionQ operator-(const RationalFunctionQ& x, const RationalFunctionQ& y) { return x + (-y); }

RationalFunctionQ operator/(const RationalFunctionQ& x, const RationalFunctionQ& y) {
  if (y.is_zero()) throw Error(Errc::DivisionByZero, "division by zero rational function");
  return x * y.inverse();
}

std::string RationalFunctionQ::to_string() const {
  if (is_zero()) return "0";
  std::string num = numerator().to_string();
  if (is_laurent()) return num;
  return "(" + num + ")/(" + denominator().to_string() + ")";
}

RationalFunctionQ qint(int n) {
  if (n == 0) return {};
  if (n < 0) return -qint(-n);
  std::vector<LaurentPoly::Term> terms;
  for (int k = 0; k < n; ++k) terms.push_back({n - 1 - 2 * k, 1});
  return RationalFunctionQ(LaurentPoly::from_terms(std::move(terms)), LaurentPoly(1));
}

bool is_valid_q(const Rational& q0) { return sgn(q0) != 0 && q0 != 1 && q0 != -1; }

Rational eval_at(const RationalFunctionQ& x, const Rational& q0) {
  if (!is_valid_q(q0)) throw Error(Errc::InvalidQ, "q0 = " + q0.get_str() + " is 0 or a root of unity");
  Rational d = eval_zpoly(x.primitive_denominator(), q0);
  if (sgn(d) == 0) throw Error(Errc::PoleAtPoint, x.to_string() + " at q = " + q0.get_str());
  if (x.is_zero()) return 0;
  return x.scale() * rational_pow(q0, x.shift()) * eval_zpoly(x.primitive_numerator(), q0) / d;
}

// ---------------------------------------------------------------------------
// JSON

Json to_json(const LaurentPoly& p) {
  Json arr = Json::array();
  for (const auto& t : p.terms()) arr.push_back(Json::array({t.exponent, t.coeff.get_str()}));
  return arr;
}

Json to_json(const RationalFunctionQ& x) {
  return Json{{"num", to_json(x.numerator())}, {"den", to_json(x.denominator())}};
}

Json to_json(const Rational& x) { return to_json(RationalFunctionQ(x)); }

LaurentPoly laurent_from_json(const Json& j) {
  if (!j.is_array()) throw Error(Errc::ParseError, "Laurent polynomial must be an array of [exponent, rational]");
  std::vector<LaurentPoly::Term> terms;
  int prev = 0;
  bool first = true;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 2 || !t[0].is_number_integer())
      throw Error(Errc::ParseError, "bad Laurent term " + t.dump());
    int e = t[0].get<int>();
    if (!first && e <= prev) throw Error(Errc::ParseError, "Laurent exponents must be strictly increasing");
    Rational c = t[1].is_string() ? parse_rational(t[1].get<std::string>())
                 : t[1].is_number_integer() ? Rational(t[1].get<long>())
                                            : throw Error(Errc::ParseError, "bad coefficient " + t[1].dump());
    terms.push_back({e, c});
    prev = e;
    first = false;
  }
  return LaurentPoly::from_terms(std::move(terms));
}

RationalFunctionQ rf_from_json(const Json& j) {
  if (j.is_number_integer()) return RationalFunctionQ(Rational(j.get<long>()));
  if (j.is_string()) return RationalFunctionQ(parse_rational(j.get<std::string>()));
  if (j.is_object() && j.contains("num") && j.contains("den")) {
    LaurentPoly den = laurent_from_json(j.at("den"));
    if (den.is_zero()) throw Error(Errc::ParseError, "zero denominator");
    return RationalFunctionQ(laurent_from_json(j.at("num")), den);
  }
  throw Error(Errc::ParseError, "coefficient must be an integer, rational string or {num, den}: " + j.dump());
}

// ---------------------------------------------------------------------------
// Modes

NumericQ::NumericQ(Rational q0) : q0_(std::move(q0)) {
  if (!is_valid_q(q0_)) throw Error(Errc::InvalidQ, "q0 = " + q0_.get_str() + " is 0 or a root of unity");
}

NumericQ::Scalar NumericQ::q_pow(int n) const { return rational_pow(q0_, n); }

std::string mode_name(const CoefficientMode& mode) {
  return std::visit([](const auto& m) { return m.name(); }, mode);
}

}  // namespace qons
