#pragma once

// Quantum adjoint calculus: ad_r A, bad_n A, (bad A)_n, S_n, S'_n and the
// truncated sums S, S'. Everything is generic over the element type (free
// algebra polynomials or exact matrices) and the coefficient field.

#include <map>
#include <vector>

#include "qons/qcoeff.hpp"

namespace qons {

enum class Direction { Forward, Inverse };

inline int sign(Direction d) { return d == Direction::Forward ? 1 : -1; }
inline const char* direction_name(Direction d) { return d == Direction::Forward ? "forward" : "inverse"; }

/// q^r A X - q^-r X A
template <class Field, class Elem>
Elem apply_ad(const Field& f, int r, const Elem& A, const Elem& X) {
  return f.q_pow(r) * (A * X) - f.q_pow(-r) * (X * A);
}

/// bad_0 = ad/(q - q^-1); for n >= 1
/// bad_n = [(q^2n - q^-2n)^2 I + ad_n ad_-n] / [(q^2n - q^-2n)(q^2n+1 - q^-2n-1)].
template <class Field, class Elem>
Elem apply_bad(const Field& f, int n, const Elem& A, const Elem& X) {
  if (n < 0) throw Error(Errc::InvalidParams, "bad_n requires n >= 0");
  if (n == 0) return inverse(qdiff(f, 1)) * apply_ad(f, 0, A, X);
  auto d2 = qdiff(f, 2 * n);
  auto norm = inverse(d2 * qdiff(f, 2 * n + 1));
  Elem r = (d2 * d2) * X + apply_ad(f, n, A, apply_ad(f, -n, A, X));
  return norm * r;
}

/// (bad A)_n = bad_{n-1} ... bad_0; (bad A)_0 = I.
template <class Field, class Elem>
Elem apply_badprod(const Field& f, int n, const Elem& A, Elem X) {
  if (n < 0) throw Error(Errc::InvalidParams, "(bad A)_n requires n >= 0");
  for (int i = 0; i < n; ++i) X = apply_bad(f, i, A, X);
  return X;
}

/// S_n = (bad A)_n ad_n A / (q^2n - q^-2n), S'_n with ad_-n; S_0 = S'_0 = I.
template <class Field, class Elem>
Elem apply_S(const Field& f, int n, const Elem& A, const Elem& X, Direction dir) {
  if (n < 0) throw Error(Errc::InvalidParams, "S_n requires n >= 0");
  if (n == 0) return X;
  Elem adx = apply_ad(f, sign(dir) * n, A, X);
  return inverse(qdiff(f, 2 * n)) * apply_badprod(f, n, A, adx);
}

/// Sum of S_0..S_N (or S'_0..S'_N) at X.
template <class Field, class Elem>
Elem truncated_sum(const Field& f, const Elem& A, const Elem& X, int N, Direction dir) {
  if (N < 0) throw Error(Errc::InvalidParams, "truncation bound must be >= 0");
  Elem acc = X;
  for (int n = 1; n <= N; ++n) acc += apply_S(f, n, A, X, dir);
  return acc;
}

/// The closed form of S (or S') on elements annihilated by (bad A)_2:
/// X + [q^{±1} A^2 X - (q + q^-1) A X A + q^{∓1} X A^2] / [(q - q^-1)(q^2 - q^-2)].
template <class Field, class Elem>
Elem a1_image(const Field& f, const Elem& A, const Elem& X, Direction dir) {
  int s = sign(dir);
  auto norm = inverse(qdiff(f, 1) * qdiff(f, 2));
  Elem ax = A * X;
  Elem xa = X * A;
  Elem num = f.q_pow(s) * (A * ax) - (f.q_pow(1) + f.q_pow(-1)) * (ax * A) + f.q_pow(-s) * (xa * A);
  return X + norm * num;
}

/// Memoized (bad A)_k(X), S_k(X), S'_k(X) for one pair (A, X).
///
/// S_k is evaluated as ad_{±k}((bad A)_k X) / (q^2k - q^-2k), i.e. with the
/// primitive maps reordered; reordering is sound because ad_r A, ad_s A
/// commute, which the unit tests check independently.
template <class Field, class Elem>
class AdjointExpansion {
 public:
  AdjointExpansion(Field f, Elem A, Elem X) : f_(std::move(f)), A_(std::move(A)) { bad_.push_back(std::move(X)); }

  const Elem& x() const { return bad_.front(); }

  const Elem& badprod(int k) {
    while (static_cast<int>(bad_.size()) <= k) {
      int i = static_cast<int>(bad_.size()) - 1;
      bad_.push_back(apply_bad(f_, i, A_, bad_.back()));
    }
    return bad_[static_cast<size_t>(k)];
  }

  const Elem& S(int k, Direction dir) {
    auto& cache = dir == Direction::Forward ? s_ : sp_;
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
    Elem v = k == 0 ? x() : inverse(qdiff(f_, 2 * k)) * apply_ad(f_, sign(dir) * k, A_, badprod(k));
    return cache.emplace(k, std::move(v)).first->second;
  }

 private:
  Field f_;
  Elem A_;
  std::vector<Elem> bad_;
  std::map<int, Elem> s_, sp_;
};

/// A formal linear combination of compositions of primitive maps ad_r A.
/// A composition {r1, r2, ..., rk} denotes ad_r1 ad_r2 ... ad_rk (ad_rk is
/// applied first); the empty composition is the identity map.
template <class Field, class Elem>
class AdjointOperator {
 public:
  using Scalar = typename Field::Scalar;
  using Composition = std::vector<int>;

  AdjointOperator(Field f, Elem A) : f_(std::move(f)), A_(std::move(A)) {}

  static AdjointOperator identity(const Field& f, const Elem& A) {
    AdjointOperator op(f, A);
    op.terms_[{}] = Scalar(1);
    return op;
  }
  static AdjointOperator ad(const Field& f, const Elem& A, int r) {
    AdjointOperator op(f, A);
    op.terms_[{r}] = Scalar(1);
    return op;
  }
  static AdjointOperator bad(const Field& f, const Elem& A, int n) {
    if (n == 0) return inverse(qdiff(f, 1)) * ad(f, A, 0);
    auto d2 = qdiff(f, 2 * n);
    auto norm = inverse(d2 * qdiff(f, 2 * n + 1));
    return norm * ((d2 * d2) * identity(f, A) + ad(f, A, n) * ad(f, A, -n));
  }
  static AdjointOperator badprod(const Field& f, const Elem& A, int n) {
    AdjointOperator op = identity(f, A);
    for (int i = 0; i < n; ++i) op = bad(f, A, i) * op;
    return op;
  }
  static AdjointOperator S(const Field& f, const Elem& A, int n, Direction dir) {
    if (n == 0) return identity(f, A);
    return inverse(qdiff(f, 2 * n)) * (badprod(f, A, n) * ad(f, A, sign(dir) * n));
  }

  const std::map<Composition, Scalar>& terms() const { return terms_; }

  Elem apply(const Elem& X) const {
    Elem acc = Scalar(0) * X;
    for (const auto& [comp, c] : terms_) {
      Elem v = X;
      for (auto it = comp.rbegin(); it != comp.rend(); ++it) v = apply_ad(f_, *it, A_, v);
      acc += c * v;
    }
    return acc;
  }

  friend AdjointOperator operator+(AdjointOperator x, const AdjointOperator& y) {
    for (const auto& [comp, c] : y.terms_) x.add(comp, c);
    return x;
  }
  friend AdjointOperator operator*(const Scalar& s, AdjointOperator x) {
    AdjointOperator r(x.f_, x.A_);
    for (const auto& [comp, c] : x.terms_) r.add(comp, s * c);
    return r;
  }
  /// Composition: (x * y)(X) = x(y(X)).
  friend AdjointOperator operator*(const AdjointOperator& x, const AdjointOperator& y) {
    AdjointOperator r(x.f_, x.A_);
    for (const auto& [cx, ax] : x.terms_)
      for (const auto& [cy, ay] : y.terms_) {
        Composition c = cx;
        c.insert(c.end(), cy.begin(), cy.end());
        r.add(c, ax * ay);
      }
    return r;
  }

 private:
  void add(const Composition& comp, const Scalar& c) {
    if (is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(comp, c);
    if (!inserted) {
      it->second += c;
      if (is_zero(it->second)) terms_.erase(it);
    }
  }

  Field f_;
  Elem A_;
  std::map<Composition, Scalar> terms_;
};

}  // namespace qons
