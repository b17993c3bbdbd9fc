#pragma once

// Exact matrix models: eigenvalue arrays, primitive idempotents, the twisting
// element Psi, the entrywise scalar law for S and S', and tridiagonal pairs.

#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qons/adjoint.hpp"
#include "qons/freealg.hpp"
#include "qons/matrix.hpp"
#include "qons/report.hpp"

namespace qons {

/// theta_i^2 - (q^2 + q^-2) theta_i theta_j + theta_j^2 + (q^2 - q^-2)^2
template <class Field>
typename Field::Scalar p_value(const Field& f, const typename Field::Scalar& x, const typename Field::Scalar& y) {
  typename Field::Scalar beta = f.q_pow(2) + f.q_pow(-2);
  typename Field::Scalar g = qdiff(f, 2);
  return x * x - beta * x * y + y * y + g * g;
}

/// theta_i = a q^{d-2i} + a^-1 q^{2i-d}, i = 0..d. Throws InvalidParams for
/// d < 1 or a = 0 and DegenerateEigenvalues when two values coincide. The
/// adjacent-pair relation p(i, i+1) = 0 and the three-term recurrence are
/// checked on the way out (InvariantViolation if either fails).
template <class Field>
std::vector<typename Field::Scalar> theta_sequence(const Field& f, int d, const Rational& a) {
  using Scalar = typename Field::Scalar;
  if (d < 1) throw Error(Errc::InvalidParams, "diameter must be >= 1");
  if (sgn(a) == 0) throw Error(Errc::InvalidParams, "a must be nonzero");
  Scalar ca = f.constant(a), cinv = f.constant(1 / a);
  std::vector<Scalar> th;
  for (int i = 0; i <= d; ++i) th.push_back(ca * f.q_pow(d - 2 * i) + cinv * f.q_pow(2 * i - d));
  for (int i = 0; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j)
      if (th[static_cast<size_t>(i)] == th[static_cast<size_t>(j)])
        throw Error(Errc::DegenerateEigenvalues, "theta_" + std::to_string(i) + " = theta_" + std::to_string(j) +
                                                     " = " + to_string(th[static_cast<size_t>(i)]));
  for (int i = 0; i + 1 <= d; ++i)
    if (!is_zero(p_value(f, th[static_cast<size_t>(i)], th[static_cast<size_t>(i + 1)])))
      throw Error(Errc::InvariantViolation, "p(i, i+1) != 0 at i = " + std::to_string(i));
  typename Field::Scalar beta = f.q_pow(2) + f.q_pow(-2);
  for (int j = 1; j + 1 <= d; ++j) {
    size_t u = static_cast<size_t>(j);
    if (!is_zero(th[u - 1] - beta * th[u] + th[u + 1]))
      throw Error(Errc::InvariantViolation, "three-term recurrence fails at j = " + std::to_string(j));
  }
  return th;
}

/// Lagrange idempotents prod_{j != i} (M - theta_j I)/(theta_i - theta_j).
template <class K>
std::vector<Matrix<K>> lagrange_idempotents(const Matrix<K>& M, const std::vector<K>& theta) {
  size_t n = M.dim();
  std::vector<Matrix<K>> E;
  for (size_t i = 0; i < theta.size(); ++i) {
    Matrix<K> e = Matrix<K>::identity(n);
    for (size_t j = 0; j < theta.size(); ++j) {
      if (j == i) continue;
      e = e * (M - theta[j] * Matrix<K>::identity(n));
      e *= inverse(theta[i] - theta[j]);
    }
    E.push_back(std::move(e));
  }
  return E;
}

template <class Field>
struct SpectralData {
  using Scalar = typename Field::Scalar;
  using Mat = Matrix<Scalar>;

  Field field;
  int d = 0;
  Rational a;
  std::vector<Scalar> theta;
  std::vector<Scalar> t;  // t_i = a^{2i} q^{2i(d-i)}
  Mat A;
  std::vector<Mat> E;
  Mat Psi, PsiInv;

  size_t dim() const { return static_cast<size_t>(d + 1); }
};

/// Problems with the idempotent system of sd (empty when all hold):
/// sum E_i = I, E_i E_j = delta_ij E_i, A E_i = theta_i E_i, E_i != 0,
/// Psi Psi^-1 = I.
template <class Field>
std::vector<std::string> spectral_violations(const SpectralData<Field>& sd) {
  using Mat = typename SpectralData<Field>::Mat;
  std::vector<std::string> out;
  size_t n = sd.dim();
  Mat sum(n);
  for (size_t i = 0; i < sd.E.size(); ++i) {
    sum += sd.E[i];
    if (sd.E[i].is_zero()) out.push_back("E_" + std::to_string(i) + " is zero");
    if (!(sd.A * sd.E[i] == sd.theta[i] * sd.E[i])) out.push_back("A E_" + std::to_string(i) + " != theta_i E_i");
    for (size_t j = 0; j < sd.E.size(); ++j) {
      Mat p = sd.E[i] * sd.E[j];
      if (i == j ? !(p == sd.E[i]) : !p.is_zero())
        out.push_back("E_" + std::to_string(i) + " E_" + std::to_string(j) + " != delta E_i");
    }
  }
  if (!(sum == Mat::identity(n))) out.push_back("sum of E_i != I");
  if (!(sd.Psi * sd.PsiInv == Mat::identity(n))) out.push_back("Psi Psi^-1 != I");
  return out;
}

/// Spectral data for a given matrix A whose eigenvalues are the theta array
/// of (d, a). Throws InvariantViolation when A does not fit.
template <class Field>
SpectralData<Field> spectral_data_for(const Field& f, const Matrix<typename Field::Scalar>& A, int d, const Rational& a) {
  using Scalar = typename Field::Scalar;
  using Mat = Matrix<Scalar>;
  SpectralData<Field> sd{f, d, a, theta_sequence(f, d, a), {}, A, {}, Mat(), Mat()};
  if (A.dim() != sd.dim())
    throw Error(Errc::DimensionMismatch, "matrix dimension " + std::to_string(A.dim()) + " for diameter " + std::to_string(d));
  Scalar a2 = f.constant(a * a);
  Scalar pw = f.constant(1);
  for (int i = 0; i <= d; ++i) {
    sd.t.push_back(pw * f.q_pow(2 * i * (d - i)));
    pw = pw * a2;
  }
  sd.E = lagrange_idempotents(A, sd.theta);
  sd.Psi = Mat(sd.dim());
  sd.PsiInv = Mat(sd.dim());
  for (size_t i = 0; i < sd.E.size(); ++i) {
    sd.Psi += sd.t[i] * sd.E[i];
    sd.PsiInv += inverse(sd.t[i]) * sd.E[i];
  }
  auto bad = spectral_violations(sd);
  if (!bad.empty()) {
    std::string msg = "spectral data invalid:";
    for (const auto& s : bad) msg += " " + s + ";";
    throw Error(Errc::InvariantViolation, msg);
  }
  return sd;
}

/// A = diag(theta_0, ..., theta_d).
template <class Field>
SpectralData<Field> spectral_data(const Field& f, int d, const Rational& a) {
  return spectral_data_for(f, Matrix<typename Field::Scalar>::diagonal(theta_sequence(f, d, a)), d, a);
}

/// sigma_r(i, j) for r >= 1; r = 0 gives (theta_i - theta_j)/(q - q^-1).
template <class Field>
typename Field::Scalar sigma(const Field& f, int r, const typename Field::Scalar& ti, const typename Field::Scalar& tj) {
  if (r == 0) return (ti - tj) * inverse(qdiff(f, 1));
  typename Field::Scalar g = qdiff(f, 2 * r);
  typename Field::Scalar num = g * g + (f.q_pow(r) * ti - f.q_pow(-r) * tj) * (f.q_pow(-r) * ti - f.q_pow(r) * tj);
  return num * inverse(g * qdiff(f, 2 * r + 1));
}

/// The product sigma_0 sigma_1 ... sigma_{n-1}, i.e. the parenthetical factor
/// of the n-th summand of the scalar sum.
template <class Field>
typename Field::Scalar sigma_product(const SpectralData<Field>& sd, size_t i, size_t j, int n) {
  auto acc = sigma(sd.field, 0, sd.theta[i], sd.theta[j]);
  for (int r = 1; r <= n - 1; ++r) acc = acc * sigma(sd.field, r, sd.theta[i], sd.theta[j]);
  return acc;
}

/// n-th summand (n >= 1) of the scalar sum for the eigenvalue pair (i, j).
template <class Field>
typename Field::Scalar ssum_term(const SpectralData<Field>& sd, size_t i, size_t j, int n, Direction dir) {
  const auto& f = sd.field;
  int s = sign(dir);
  typename Field::Scalar last = (f.q_pow(s * n) * sd.theta[i] - f.q_pow(-s * n) * sd.theta[j]) * inverse(qdiff(f, 2 * n));
  return sigma_product(sd, i, j, n) * last;
}

/// 1 + sum_{n=1}^{|i-j|} ssum_term; equals t_j/t_i forward and t_i/t_j inverse.
template <class Field>
typename Field::Scalar scalar_S_ratio(size_t i, size_t j, const SpectralData<Field>& sd, Direction dir) {
  if (i > static_cast<size_t>(sd.d) || j > static_cast<size_t>(sd.d)) throw Error(Errc::IndexOutOfRange, "index beyond d");
  auto acc = sd.field.constant(1);
  int top = static_cast<int>(i > j ? i - j : j - i);
  for (int n = 1; n <= top; ++n) acc = acc + ssum_term(sd, i, j, n, dir);
  return acc;
}

/// sum_{n=0}^{d} S_n(X) (or S'_n) with A from sd.
template <class Field>
Matrix<typename Field::Scalar> matrix_lusztig(const Matrix<typename Field::Scalar>& X, const SpectralData<Field>& sd,
                                              Direction dir) {
  sd.A.check(X);
  return truncated_sum(sd.field, sd.A, X, sd.d, dir);
}

/// sum_{|i-j| <= 1} E_i R E_j for a seeded integer matrix R, redrawn until
/// every E_i R E_{i+-1} is nonzero.
template <class Field>
Matrix<typename Field::Scalar> random_a1_matrix(const SpectralData<Field>& sd, unsigned seed) {
  using Scalar = typename Field::Scalar;
  using Mat = Matrix<Scalar>;
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> dist(-4, 4);
  size_t n = sd.dim();
  for (;;) {
    Mat R(n);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) R(i, j) = sd.field.constant(dist(rng));
    Mat X(n);
    bool ok = true;
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        if (i > j + 1 || j > i + 1) continue;
        Mat block = sd.E[i] * R * sd.E[j];
        if (i != j && block.is_zero()) ok = false;
        X += block;
      }
    if (ok) return X;
  }
}

template <class Field>
Json params_json(const SpectralData<Field>& sd) {
  Json j{{"d", sd.d}, {"a", to_string(sd.a)}};
  if constexpr (std::is_same_v<Field, NumericQ>) j["q"] = to_string(sd.field.q0());
  return j;
}

/// Draws X = random_a1_matrix and checks (bad A)_{r+1}(X^r) = 0 exactly.
template <class Field>
VerificationReport higher_dg_matrix(int r, const SpectralData<Field>& sd, unsigned seed) {
  if (r < 1) throw Error(Errc::InvalidParams, "r must be >= 1");
  using Mat = Matrix<typename Field::Scalar>;
  VerificationReport rep;
  rep.name = "repn.higher-dg";
  rep.statement = "(bad A)_{r+1}(X^r) = 0 for X with (bad A)_2(X) = 0";
  rep.mode = Field::name();
  rep.params = params_json(sd);
  rep.params["r"] = r;
  rep.params["seed"] = seed;
  Mat X = random_a1_matrix(sd, seed);
  Mat P = X;
  for (int k = 1; k < r; ++k) P = P * X;
  Mat v = apply_badprod(sd.field, r + 1, sd.A, P);
  rep.status = v.is_zero() ? Status::Pass : Status::Fail;
  if (!v.is_zero()) rep.detail = "nonzero matrix";
  return rep;
}

/// matrix_lusztig against Psi-conjugation on seeded random matrices, both
/// directions, plus the idempotent invariants. For diagonal A the entries are
/// also compared with t_j/t_i X_ij.
template <class Field>
VerificationReport verify_conjugation(const SpectralData<Field>& sd, int trials, unsigned seed) {
  using Mat = Matrix<typename Field::Scalar>;
  if (trials < 1) throw Error(Errc::InvalidParams, "trials must be >= 1");
  VerificationReport rep;
  rep.name = "repn.conjugation";
  rep.statement = "sum_n S_n(X) = Psi^-1 X Psi and sum_n S'_n(X) = Psi X Psi^-1";
  rep.mode = Field::name();
  rep.params = params_json(sd);
  rep.params["trials"] = trials;
  rep.params["seed"] = seed;
  std::vector<std::string> bad = spectral_violations(sd);
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> dist(-4, 4);
  size_t n = sd.dim();
  bool diag = sd.A.is_diagonal();
  for (int t = 0; t < trials && bad.size() < 8; ++t) {
    Mat X(n);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) X(i, j) = sd.field.constant(dist(rng));
    Mat fwd = matrix_lusztig(X, sd, Direction::Forward);
    Mat inv = matrix_lusztig(X, sd, Direction::Inverse);
    Mat cf = sd.PsiInv * X * sd.Psi;
    if (!(fwd == cf)) bad.push_back("forward mismatch at trial " + std::to_string(t));
    if (!(inv == sd.Psi * X * sd.PsiInv)) bad.push_back("inverse mismatch at trial " + std::to_string(t));
    if (diag)
      for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
          if (!(cf(i, j) == (sd.t[j] * inverse(sd.t[i])) * X(i, j)))
            bad.push_back("entry (" + std::to_string(i) + "," + std::to_string(j) + ") != t_j/t_i X_ij");
  }
  rep.status = bad.empty() ? Status::Pass : Status::Fail;
  for (const auto& s : bad) rep.detail += s + "; ";
  return rep;
}

/// Every (i, j): forward/inverse ratio sums against t_j/t_i and t_i/t_j, and
/// vanishing of the n-th parenthetical factor for |i-j| < n <= d + 2.
template <class Field>
VerificationReport verify_scalar_sums(const SpectralData<Field>& sd) {
  VerificationReport rep;
  rep.name = "repn.ssum";
  rep.statement = "1 + sum_n (sigma products) = t_j/t_i (forward), t_i/t_j (inverse); zero beyond |i-j|";
  rep.mode = Field::name();
  rep.params = params_json(sd);
  std::vector<std::string> bad;
  for (size_t i = 0; i <= static_cast<size_t>(sd.d); ++i)
    for (size_t j = 0; j <= static_cast<size_t>(sd.d); ++j) {
      typename Field::Scalar ratio = sd.t[j] * inverse(sd.t[i]);
      if (!(scalar_S_ratio(i, j, sd, Direction::Forward) == ratio))
        bad.push_back("forward (" + std::to_string(i) + "," + std::to_string(j) + ")");
      if (!(scalar_S_ratio(i, j, sd, Direction::Inverse) == inverse(ratio)))
        bad.push_back("inverse (" + std::to_string(i) + "," + std::to_string(j) + ")");
      int gap = static_cast<int>(i > j ? i - j : j - i);
      for (int n = gap + 1; n <= sd.d + 2; ++n)
        if (!is_zero(sigma_product(sd, i, j, n)))
          bad.push_back("term n=" + std::to_string(n) + " at (" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
  rep.status = bad.empty() ? Status::Pass : Status::Fail;
  for (const auto& s : bad) rep.detail += s + "; ";
  return rep;
}

// ---- Rational matrices: eigenvalues, q-DG checks, tridiagonal pairs -------

/// Distinct rational eigenvalues of M, or nullopt if M does not have n of
/// them. Roots are located numerically, then recovered exactly by continued
/// fractions and confirmed on the characteristic polynomial.
std::optional<std::vector<Rational>> rational_eigenvalues(const QMatrix& M);

/// Characteristic polynomial det(xI - M), coefficients lowest degree first.
std::vector<Rational> characteristic_polynomial(const QMatrix& M);

/// A^3 B - [3]_q A^2 B A + [3]_q A B A^2 - B A^3 - (q^2 - q^-2)^2 (BA - AB).
/// Zero exactly when the first q-Dolan/Grady relation holds; swapping the
/// arguments gives the second.
template <class Field, class Elem>
Elem dg_defect(const Field& f, const Elem& A, const Elem& B) {
  typename Field::Scalar q3 = f.q_pow(2) + f.constant(1) + f.q_pow(-2);
  auto g = qdiff(f, 2);
  Elem A2 = A * A;
  Elem AB = A * B, BA = B * A;
  return A2 * AB - q3 * (A2 * BA) + q3 * (AB * A2) - BA * A2 - (g * g) * (BA - AB);
}

/// q-DG relations for (A, B) by the spectral criterion and directly, and the
/// tridiagonal shape of B on the first off-diagonals. When theta is not
/// supplied A's eigenvalues are found exactly (NotDiagonalizable otherwise)
/// and ordered along the path E_i B E_j != 0. With theta_star the second
/// relation is checked the same way.
VerificationReport check_dg_spectral(const QMatrix& A, const QMatrix& B, const NumericQ& f,
                                     std::optional<std::vector<Rational>> theta = std::nullopt,
                                     std::optional<std::vector<Rational>> theta_star = std::nullopt);

struct TDPair {
  QMatrix A, B;
  Rational a, b, q0;
  int d = 0;
  SpectralData<NumericQ> spectral_a, spectral_b;
};

/// Every violated tridiagonal-pair invariant, by name. Empty means valid.
std::vector<std::string> td_pair_violations(const QMatrix& A, const QMatrix& B, const Rational& a, const Rational& b,
                                            const Rational& q0, int d);

/// Validates and assembles; throws InvariantViolation listing every failure.
TDPair make_td_pair(QMatrix A, QMatrix B, const Rational& a, const Rational& b, const Rational& q0, int d);

/// d = 1: A = diag(theta_0, theta_1), B = mean I + halfdiff J.
TDPair td_pair_d1(const Rational& a, const Rational& b, const Rational& q0);

/// {"A": matrix, "B": matrix, "a": str, "b": str, "q": str, "d": int}
TDPair td_pair_from_json(const Json& j);
Json to_json(const TDPair& tp);
/// Throws ParseError for unreadable files.
TDPair import_td_pair(const std::string& path);

/// (A, Psi B Psi^-1), Psi from sd.
TDPair twist_module(const TDPair& tp, const SpectralData<NumericQ>& sd);
/// (A, Psi^-1 B Psi).
TDPair untwist_module(const TDPair& tp, const SpectralData<NumericQ>& sd);

/// Leonard pair in split form: A lower bidiagonal (theta_i, subdiagonal 1),
/// B upper bidiagonal (theta*_i, superdiagonal phi_i) with phi from the
/// parameter-array formulas and free phi_1. Tries phi_1 = 1, -1, 2, -2, ...
/// and returns the first candidate that validates, if any.
std::optional<TDPair> search_td_pair(int d, const Rational& a, const Rational& b, const Rational& q0, int attempts = 12);

/// Element of the free algebra on {A, B} evaluated at matrices.
QMatrix evaluate_in_model(const NcPoly<RationalFunctionQ>& p, const Rational& q0,
                          const std::map<std::string, QMatrix>& images);

}  // namespace qons
