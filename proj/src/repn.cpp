#include "qons/repn.hpp"

#include <cmath>
#include <complex>
#include <fstream>
#include <set>

namespace qons {

namespace {

Rational horner(const std::vector<Rational>& c, const Rational& x) {
  Rational acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::vector<Rational> derivative(const std::vector<Rational>& c) {
  std::vector<Rational> d;
  for (size_t k = 1; k < c.size(); ++k) d.push_back(c[k] * static_cast<long>(k));
  return d;
}

// Nearest multiple of 2^-bits.
Rational round_binary(const Rational& x, unsigned long bits) {
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 2, bits);
  Rational s = x * scale;
  Integer n;
  mpz_fdiv_q(n.get_mpz_t(), s.get_num_mpz_t(), s.get_den_mpz_t());
  Rational r(n, scale);
  r.canonicalize();
  return r;
}

// Convergents of the continued fraction of x, smallest denominators first.
std::vector<Rational> convergents(Rational x, size_t max_terms) {
  std::vector<Rational> out;
  Integer h0 = 1, h1 = 0, k0 = 0, k1 = 1;  // h_{-1}, h_{-2}, k_{-1}, k_{-2}
  for (size_t t = 0; t < max_terms; ++t) {
    Integer a;
    mpz_fdiv_q(a.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    Integer h = a * h0 + h1, k = a * k0 + k1;
    Rational c(h, k);
    c.canonicalize();
    out.push_back(c);
    h1 = h0;
    h0 = h;
    k1 = k0;
    k0 = k;
    Rational frac = x - Rational(a);
    if (sgn(frac) == 0) break;
    x = 1 / frac;
  }
  return out;
}

std::vector<std::complex<long double>> approximate_roots(const std::vector<Rational>& c) {
  size_t n = c.size() - 1;
  std::vector<std::complex<long double>> coeff(c.size());
  for (size_t k = 0; k < c.size(); ++k) coeff[k] = static_cast<long double>(Rational(c[k] / c.back()).get_d());
  std::vector<std::complex<long double>> z(n);
  long double radius = 1;
  for (size_t k = 0; k < n; ++k) radius = std::max(radius, 1 + std::abs(coeff[k]));
  for (size_t k = 0; k < n; ++k) z[k] = std::polar(radius * 0.7L, 0.4L + 2.0L * 3.14159265358979L * k / n);
  for (int it = 0; it < 2000; ++it) {
    long double moved = 0;
    for (size_t k = 0; k < n; ++k) {
      std::complex<long double> val = 0;
      for (size_t m = c.size(); m-- > 0;) val = val * z[k] + coeff[m];
      std::complex<long double> den = 1;
      for (size_t m = 0; m < n; ++m)
        if (m != k) den *= (z[k] - z[m]);
      auto step = val / den;
      z[k] -= step;
      moved = std::max(moved, std::abs(step));
    }
    if (moved < 1e-30L) break;
  }
  return z;
}

}  // namespace

std::vector<Rational> characteristic_polynomial(const QMatrix& M) {
  // Faddeev-LeVerrier over Q.
  size_t n = M.dim();
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  QMatrix Mk(n);
  for (size_t k = 1; k <= n; ++k) {
    Mk = M * Mk;
    for (size_t i = 0; i < n; ++i) Mk(i, i) += c[n - k + 1];
    QMatrix P = M * Mk;
    Rational tr = 0;
    for (size_t i = 0; i < n; ++i) tr += P(i, i);
    c[n - k] = -tr / static_cast<long>(k);
  }
  return c;
}

std::optional<std::vector<Rational>> rational_eigenvalues(const QMatrix& M) {
  auto cp = characteristic_polynomial(M);
  auto dcp = derivative(cp);
  std::set<Rational> found;
  for (auto z : approximate_roots(cp)) {
    if (std::abs(z.imag()) > 1e-6L * (1 + std::abs(z.real()))) return std::nullopt;
    Rational x(static_cast<double>(z.real()));
    // Newton in exact arithmetic, kept to 256 bits after each step.
    for (int it = 0; it < 8; ++it) {
      Rational dv = horner(dcp, x);
      if (sgn(dv) == 0) break;
      x = round_binary(x - horner(cp, x) / dv, 256);
    }
    for (const auto& cand : convergents(x, 200))
      if (sgn(horner(cp, cand)) == 0) {
        found.insert(cand);
        break;
      }
  }
  if (found.size() != M.dim()) return std::nullopt;
  return std::vector<Rational>(found.begin(), found.end());
}

namespace {

std::string pair_name(size_t i, size_t j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

// Checks E_i M E_j is zero for |i-j| > 1 and nonzero for |i-j| = 1.
void tridiagonal_shape(const std::vector<QMatrix>& E, const QMatrix& M, const std::string& what,
                       std::vector<std::string>& bad) {
  for (size_t i = 0; i < E.size(); ++i)
    for (size_t j = 0; j < E.size(); ++j) {
      size_t gap = i > j ? i - j : j - i;
      if (gap == 0) continue;
      bool zero = (E[i] * M * E[j]).is_zero();
      if (gap > 1 && !zero) bad.push_back(what + " nonzero at " + pair_name(i, j));
      if (gap == 1 && zero) bad.push_back(what + " zero at " + pair_name(i, j));
    }
}

// Spectral form of a q-DG relation: E_i M E_j must vanish whenever
// (theta_i - theta_j) p(i, j) is nonzero.
void spectral_criterion(const NumericQ& f, const std::vector<QMatrix>& E, const std::vector<Rational>& theta,
                        const QMatrix& M, const std::string& what, std::vector<std::string>& bad) {
  for (size_t i = 0; i < E.size(); ++i)
    for (size_t j = 0; j < E.size(); ++j) {
      Rational factor = (theta[i] - theta[j]) * p_value(f, theta[i], theta[j]);
      if (sgn(factor) != 0 && !(E[i] * M * E[j]).is_zero()) bad.push_back(what + " spectral criterion fails at " + pair_name(i, j));
    }
}

bool idempotents_valid(const QMatrix& M, const std::vector<QMatrix>& E, const std::vector<Rational>& theta) {
  QMatrix sum(M.dim());
  for (size_t i = 0; i < E.size(); ++i) {
    if (E[i].is_zero() || !(M * E[i] == theta[i] * E[i])) return false;
    sum += E[i];
  }
  return sum == QMatrix::identity(M.dim());
}

// Reorders theta so that the nonzero pattern of E_i B E_j is a path.
std::vector<Rational> order_along_path(const QMatrix& B, const std::vector<Rational>& theta,
                                       const std::vector<QMatrix>& E) {
  size_t n = theta.size();
  std::vector<std::vector<size_t>> adj(n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (!(E[i] * B * E[j]).is_zero() || !(E[j] * B * E[i]).is_zero()) {
        adj[i].push_back(j);
        adj[j].push_back(i);
      }
  size_t start = n;
  for (size_t i = 0; i < n; ++i) {
    if (adj[i].size() > 2) return theta;
    if (adj[i].size() <= 1 && start == n) start = i;
  }
  if (start == n) return theta;
  std::vector<size_t> order{start};
  std::vector<bool> seen(n, false);
  seen[start] = true;
  while (order.size() < n) {
    size_t next = n;
    for (size_t v : adj[order.back()])
      if (!seen[v]) next = v;
    if (next == n) return theta;
    seen[next] = true;
    order.push_back(next);
  }
  std::vector<Rational> out;
  for (size_t k : order) out.push_back(theta[k]);
  return out;
}

size_t generated_algebra_dimension(const QMatrix& A, const QMatrix& B) {
  size_t n = A.dim();
  size_t full = n * n;
  // Echelon basis of flattened matrices, with pivot columns.
  std::vector<std::vector<Rational>> rows;
  std::vector<size_t> pivots;
  auto reduce_insert = [&](const QMatrix& M) {
    std::vector<Rational> v(full);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) v[i * n + j] = M(i, j);
    for (size_t r = 0; r < rows.size(); ++r) {
      const Rational& c = v[pivots[r]];
      if (sgn(c) == 0) continue;
      Rational f = c;
      for (size_t k = 0; k < full; ++k)
        if (sgn(rows[r][k]) != 0) v[k] -= f * rows[r][k];
    }
    size_t p = 0;
    while (p < full && sgn(v[p]) == 0) ++p;
    if (p == full) return false;
    Rational lead = v[p];
    for (auto& x : v) x /= lead;
    // Keep earlier rows reduced at the new pivot.
    for (auto& row : rows) {
      Rational c = row[p];
      if (sgn(c) == 0) continue;
      for (size_t k = 0; k < full; ++k)
        if (sgn(v[k]) != 0) row[k] -= c * v[k];
    }
    rows.push_back(std::move(v));
    pivots.push_back(p);
    return true;
  };
  std::vector<QMatrix> frontier{QMatrix::identity(n)};
  reduce_insert(frontier[0]);
  while (!frontier.empty() && rows.size() < full) {
    std::vector<QMatrix> next;
    for (const auto& M : frontier)
      for (const QMatrix* G : {&A, &B}) {
        QMatrix P = M * *G;
        if (reduce_insert(P)) next.push_back(std::move(P));
      }
    frontier = std::move(next);
  }
  return rows.size();
}

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : "; ") + x;
  return s;
}

}  // namespace

VerificationReport check_dg_spectral(const QMatrix& A, const QMatrix& B, const NumericQ& f,
                                     std::optional<std::vector<Rational>> theta,
                                     std::optional<std::vector<Rational>> theta_star) {
  A.check(B);
  VerificationReport rep;
  rep.name = "repn.dg-spectral";
  rep.statement = "q-Dolan/Grady relations by the spectral criterion and directly; tridiagonal shape";
  rep.mode = NumericQ::name();
  rep.params = {{"dimension", A.dim()}, {"q", to_string(f.q0())}};
  std::vector<std::string> bad;

  auto eigen = [&](const QMatrix& M, std::optional<std::vector<Rational>> th, const char* which) {
    bool supplied = th.has_value();
    if (!th) th = rational_eigenvalues(M);
    if (!th || th->size() != M.dim())
      throw Error(Errc::NotDiagonalizable, std::string(which) + " has no basis of rational eigenvectors with distinct eigenvalues");
    auto E = lagrange_idempotents(M, *th);
    if (!idempotents_valid(M, E, *th))
      throw Error(Errc::NotDiagonalizable, std::string(which) + " is not diagonalizable with the given eigenvalues");
    return std::make_pair(supplied, std::make_pair(*th, E));
  };

  auto [supplied, eig] = eigen(A, theta, "A");
  auto& [th, E] = eig;
  if (!supplied) {
    th = order_along_path(B, th, E);
    E = lagrange_idempotents(A, th);
  }
  spectral_criterion(f, E, th, B, "first relation", bad);
  if (!dg_defect(f, A, B).is_zero()) bad.push_back("first relation fails on direct evaluation");
  tridiagonal_shape(E, B, "E_i B E_j", bad);
  rep.params["second_relation"] = theta_star.has_value();
  if (theta_star) {
    auto [s2, eig2] = eigen(B, theta_star, "B");
    (void)s2;
    auto& [ths, Es] = eig2;
    spectral_criterion(f, Es, ths, A, "second relation", bad);
    if (!dg_defect(f, B, A).is_zero()) bad.push_back("second relation fails on direct evaluation");
    tridiagonal_shape(Es, A, "E*_i A E*_j", bad);
  }
  rep.status = bad.empty() ? Status::Pass : Status::Fail;
  rep.detail = join(bad);
  return rep;
}

std::vector<std::string> td_pair_violations(const QMatrix& A, const QMatrix& B, const Rational& a, const Rational& b,
                                            const Rational& q0, int d) {
  std::vector<std::string> bad;
  if (d < 1) return {"diameter must be >= 1"};
  size_t n = static_cast<size_t>(d + 1);
  if (A.dim() != n || B.dim() != n) return {"matrices must be (d+1)x(d+1)"};
  if (!is_valid_q(q0)) return {"q must not be 0, 1 or -1"};
  NumericQ f(q0);
  std::optional<std::vector<Rational>> th, ths;
  try {
    th = theta_sequence(f, d, a);
  } catch (const Error& e) {
    bad.push_back(std::string("theta array: ") + e.what());
  }
  try {
    ths = theta_sequence(f, d, b);
  } catch (const Error& e) {
    bad.push_back(std::string("theta* array: ") + e.what());
  }
  if (!bad.empty()) return bad;
  auto E = lagrange_idempotents(A, *th);
  auto Es = lagrange_idempotents(B, *ths);
  bool okA = idempotents_valid(A, E, *th), okB = idempotents_valid(B, Es, *ths);
  if (!okA) bad.push_back("A is not diagonalizable with eigenvalues theta_0..theta_d");
  if (!okB) bad.push_back("B is not diagonalizable with eigenvalues theta*_0..theta*_d");
  if (okA) tridiagonal_shape(E, B, "E_i B E_j", bad);
  if (okB) tridiagonal_shape(Es, A, "E*_i A E*_j", bad);
  if (!dg_defect(f, A, B).is_zero()) bad.push_back("first q-Dolan/Grady relation fails");
  if (!dg_defect(f, B, A).is_zero()) bad.push_back("second q-Dolan/Grady relation fails");
  if (generated_algebra_dimension(A, B) != n * n) bad.push_back("irreducibility: generated algebra is not all of End(V)");
  return bad;
}

TDPair make_td_pair(QMatrix A, QMatrix B, const Rational& a, const Rational& b, const Rational& q0, int d) {
  auto bad = td_pair_violations(A, B, a, b, q0, d);
  if (!bad.empty()) throw Error(Errc::InvariantViolation, join(bad));
  NumericQ f(q0);
  auto sa = spectral_data_for(f, A, d, a);
  auto sb = spectral_data_for(f, B, d, b);
  return TDPair{std::move(A), std::move(B), a, b, q0, d, std::move(sa), std::move(sb)};
}

TDPair td_pair_d1(const Rational& a, const Rational& b, const Rational& q0) {
  if (!is_valid_q(q0)) throw Error(Errc::InvalidQ, "q must not be 0, 1 or -1");
  NumericQ f(q0);
  auto th = theta_sequence(f, 1, a);
  auto ths = theta_sequence(f, 1, b);
  QMatrix A = QMatrix::diagonal(th);
  Rational mean = (ths[0] + ths[1]) / 2, half = (ths[0] - ths[1]) / 2;
  QMatrix B = mean * QMatrix::identity(2);
  B(0, 1) = half;
  B(1, 0) = half;
  return make_td_pair(A, B, a, b, q0, 1);
}

TDPair td_pair_from_json(const Json& j) {
  if (!j.is_object()) throw Error(Errc::ParseError, "tridiagonal pair must be a JSON object");
  for (const char* k : {"A", "B", "a", "b", "q", "d"})
    if (!j.contains(k)) throw Error(Errc::ParseError, std::string("missing field /") + k);
  auto rat = [&](const char* k) {
    const Json& v = j.at(k);
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long>());
    throw Error(Errc::ParseError, std::string("/") + k + " must be a rational string");
  };
  if (!j.at("d").is_number_integer()) throw Error(Errc::ParseError, "/d must be an integer");
  QMatrix A = qmatrix_from_json(j.at("A"));
  QMatrix B = qmatrix_from_json(j.at("B"));
  return make_td_pair(std::move(A), std::move(B), rat("a"), rat("b"), rat("q"), j.at("d").get<int>());
}

Json to_json(const TDPair& tp) {
  return Json{{"A", to_json(tp.A)},
              {"B", to_json(tp.B)},
              {"a", to_string(tp.a)},
              {"b", to_string(tp.b)},
              {"q", to_string(tp.q0)},
              {"d", tp.d}};
}

TDPair import_td_pair(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::IoError, "cannot open " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(Errc::ParseError, path + ": " + e.what());
  }
  return td_pair_from_json(j);
}

TDPair twist_module(const TDPair& tp, const SpectralData<NumericQ>& sd) {
  return make_td_pair(tp.A, sd.Psi * tp.B * sd.PsiInv, tp.a, tp.b, tp.q0, tp.d);
}

TDPair untwist_module(const TDPair& tp, const SpectralData<NumericQ>& sd) {
  return make_td_pair(tp.A, sd.PsiInv * tp.B * sd.Psi, tp.a, tp.b, tp.q0, tp.d);
}

std::optional<TDPair> search_td_pair(int d, const Rational& a, const Rational& b, const Rational& q0, int attempts) {
  if (!is_valid_q(q0)) throw Error(Errc::InvalidQ, "q must not be 0, 1 or -1");
  NumericQ f(q0);
  auto th = theta_sequence(f, d, a);
  auto ths = theta_sequence(f, d, b);
  size_t n = static_cast<size_t>(d + 1);
  Rational span = th[0] - th[static_cast<size_t>(d)];
  for (int t = 0; t < attempts; ++t) {
    Rational phi1 = (t % 2 == 0 ? 1 : -1) * (t / 2 + 1);
    Rational varphi1 = phi1 - (ths[1] - ths[0]) * span;
    std::vector<Rational> phi(n), varphi(n);
    bool ok = true;
    Rational partial = 0;
    for (size_t i = 1; i <= static_cast<size_t>(d); ++i) {
      partial += (th[i - 1] - th[static_cast<size_t>(d) - (i - 1)]) / span;
      phi[i] = varphi1 * partial + (ths[i] - ths[0]) * (th[i - 1] - th[static_cast<size_t>(d)]);
      varphi[i] = phi1 * partial + (ths[i] - ths[0]) * (th[static_cast<size_t>(d) - i + 1] - th[0]);
      if (sgn(phi[i]) == 0 || sgn(varphi[i]) == 0) ok = false;
    }
    if (!ok) continue;
    QMatrix A(n), B(n);
    for (size_t i = 0; i < n; ++i) {
      A(i, i) = th[i];
      B(i, i) = ths[i];
      if (i > 0) {
        A(i, i - 1) = 1;
        B(i - 1, i) = phi[i];
      }
    }
    if (td_pair_violations(A, B, a, b, q0, d).empty()) return make_td_pair(A, B, a, b, q0, d);
  }
  return std::nullopt;
}

QMatrix evaluate_in_model(const NcPoly<RationalFunctionQ>& p, const Rational& q0,
                          const std::map<std::string, QMatrix>& images) {
  if (images.empty()) throw Error(Errc::MissingImage, "no matrix images");
  size_t n = images.begin()->second.dim();
  const Alphabet& al = *p.alphabet();
  std::vector<const QMatrix*> by_letter(al.size(), nullptr);
  for (size_t l = 0; l < al.size(); ++l) {
    auto it = images.find(al.name(l));
    if (it != images.end()) {
      images.begin()->second.check(it->second);
      by_letter[l] = &it->second;
    }
  }
  QMatrix acc(n);
  // Words come in deglex order, so shared prefixes are frequent; cache them.
  std::map<Word, QMatrix> prefix;
  auto product = [&](const Word& w) {
    QMatrix m = QMatrix::identity(n);
    Word pre;
    for (auto l : w) {
      if (by_letter[l] == nullptr) throw Error(Errc::MissingImage, "no matrix for generator " + al.name(l));
      pre.push_back(l);
      auto it = prefix.find(pre);
      if (it != prefix.end()) {
        m = it->second;
      } else {
        m = m * *by_letter[l];
        prefix.emplace(pre, m);
      }
    }
    return m;
  };
  for (const auto& [w, c] : p.terms()) acc += eval_at(c, q0) * product(w);
  return acc;
}

}  // namespace qons
