#pragma once

#include <string>
#include <vector>

#include "qons/qcoeff.hpp"

namespace qons {

/// Dense square matrix over an exact scalar type.
template <class K>
class Matrix {
 public:
  using Scalar = K;

  Matrix() = default;
  explicit Matrix(size_t n) : n_(n), a_(n * n) {}

  static Matrix identity(size_t n) {
    Matrix m(n);
    for (size_t i = 0; i < n; ++i) m(i, i) = K(1);
    return m;
  }
  static Matrix diagonal(const std::vector<K>& d) {
    Matrix m(d.size());
    for (size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }
  /// The matrix unit e_ij.
  static Matrix unit(size_t n, size_t i, size_t j) {
    Matrix m(n);
    m(i, j) = K(1);
    return m;
  }

  size_t dim() const noexcept { return n_; }
  K& operator()(size_t i, size_t j) { return a_[i * n_ + j]; }
  const K& operator()(size_t i, size_t j) const { return a_[i * n_ + j]; }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!qons::is_zero(x)) return false;
    return true;
  }
  bool is_diagonal() const {
    for (size_t i = 0; i < n_; ++i)
      for (size_t j = 0; j < n_; ++j)
        if (i != j && !qons::is_zero((*this)(i, j))) return false;
    return true;
  }

  Matrix& operator+=(const Matrix& o) {
    check(o);
    for (size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check(o);
    for (size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
  }
  Matrix& operator*=(const K& s) {
    for (auto& x : a_) x *= s;
    return *this;
  }
  friend Matrix operator+(Matrix x, const Matrix& y) { return x += y; }
  friend Matrix operator-(Matrix x, const Matrix& y) { return x -= y; }
  friend Matrix operator-(Matrix x) {
    for (auto& v : x.a_) v = -v;
    return x;
  }
  friend Matrix operator*(const K& s, Matrix x) { return x *= s; }
  friend Matrix operator*(Matrix x, const K& s) { return x *= s; }
  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    x.check(y);
    Matrix r(x.n_);
    for (size_t i = 0; i < x.n_; ++i)
      for (size_t k = 0; k < x.n_; ++k) {
        const K& xik = x(i, k);
        if (qons::is_zero(xik)) continue;
        for (size_t j = 0; j < x.n_; ++j)
          if (!qons::is_zero(y(k, j))) r(i, j) += xik * y(k, j);
      }
    return r;
  }
  friend bool operator==(const Matrix& x, const Matrix& y) { return x.n_ == y.n_ && x.a_ == y.a_; }

  void check(const Matrix& o) const {
    if (n_ != o.n_)
      throw Error(Errc::DimensionMismatch, std::to_string(n_) + "x" + std::to_string(n_) + " vs " +
                                               std::to_string(o.n_) + "x" + std::to_string(o.n_));
  }

 private:
  size_t n_ = 0;
  std::vector<K> a_;
};

using QMatrix = Matrix<Rational>;
using SymMatrix = Matrix<RationalFunctionQ>;

/// {"dimension": n, "entries": [[rational-string, ...], ...]}
Json to_json(const QMatrix& m);
QMatrix qmatrix_from_json(const Json& j);

/// Rank over Q by exact elimination.
size_t rank(std::vector<std::vector<Rational>> rows);

}  // namespace qons
