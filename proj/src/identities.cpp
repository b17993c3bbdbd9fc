#include "qons/identities.hpp"

#include "qons/parallel.hpp"

namespace qons {

namespace {

// Parameter tags: "h" any integer; "i"/"j" any integer; "i+"/"j+" positive;
// "i0"/"j0"/"n" nonnegative.
const std::vector<IdentityInfo> kCatalogue = {
    {IdentityId::PLUS, "PLUS", "ad_i + ad_-i = (q^i + q^-i) ad", {"i"}},
    {IdentityId::S_PLUS_SP, "S_PLUS_SP", "S_i + S'_i = (bad)_i ad / (q^i - q^-i)", {"i+"}},
    {IdentityId::ADAD, "ADAD", "ad_i ad_-i / (q^2i - q^-2i)^2 + I = (q^2i+1 - q^-2i-1)/(q^2i - q^-2i) bad_i", {"i+"}},
    {IdentityId::SS, "SS", "S_i S'_i + (bad)_i^2 = (q^2i+1 - q^-2i-1)/(q^2i - q^-2i) (bad)_i (bad)_i+1", {"i+"}},
    {IdentityId::PM_AD,
     "PM_AD",
     "[ad_i ad_-j + ad_-i ad_j]/[(q^2i - q^-2i)(q^2j - q^-2j)] + (q^i-j + q^j-i) I = "
     "[(q^2i+1 - q^-2i-1) bad_i + (q^2j+1 - q^-2j-1) bad_j]/(q^i+j - q^-i-j)",
     {"i+", "j+"}},
    {IdentityId::PM_SS,
     "PM_SS",
     "S_i S'_j + S'_i S_j + (q^i-j + q^j-i)(bad)_i (bad)_j = "
     "[(q^2i+1 - q^-2i-1)(bad)_i+1 (bad)_j + (q^2j+1 - q^-2j-1)(bad)_i (bad)_j+1]/(q^i+j - q^-i-j)",
     {"i+", "j+"}},
    {IdentityId::TTP,
     "TTP",
     "(sum_i<=n S_i)(sum_j<=n S'_j) = I + (bad)_n+1 sum_r<n (q^2n+1 - q^-2n-1)/(q^n+r+1 - q^-n-r-1) (bad)_r+1",
     {"n"}},
    {IdentityId::XA_AY,
     "XA_AY",
     "XA = (q^j ad_i - q^i ad_j)(X)/(q^i-j - q^j-i), AY = (q^-j ad_i - q^-i ad_j)(Y)/(q^i-j - q^j-i)",
     {"i", "j"}},
    {IdentityId::AD_BAD, "AD_BAD", "ad_i (bad)_j expressed by S_j and right/left multiplication by A", {"i", "j+"}},
    {IdentityId::AD_I_SJ, "AD_I_SJ", "ad_i S_j expressed by (bad)_j+1, (bad)_j and multiplication by A", {"i", "j0"}},
    {IdentityId::LEIBNIZ,
     "LEIBNIZ",
     "ad_h(XY) = q^h-i ad_i(X) Y + q^j-h X ad_j(Y) + q^j-i (q^h-i-j - q^i+j-h) XAY",
     {"h", "i", "j"}},
    {IdentityId::ADA_BB, "ADA_BB", "ad_h((bad)_i(X) (bad)_j(Y)) product expansion", {"h", "i+", "j+"}},
    {IdentityId::ADA_SS, "ADA_SS", "ad_h(S_i(X) S_j(Y)) product expansion", {"h", "i0", "j0"}},
    {IdentityId::ADA_SB, "ADA_SB", "ad_h(S_i(X) (bad)_j(Y)) product expansion", {"h", "i0", "j+"}},
    {IdentityId::ADA_BS, "ADA_BS", "ad_h((bad)_i(X) S_j(Y)) product expansion", {"h", "i+", "j0"}},
    {IdentityId::TXY_S, "TXY_S", "sum_i<=n S_i(XY) = sum_r+s<=n S_r(X)S_s(Y) + sum_r+s=n-1 q^r-s (bad)_r+1(X)(bad)_s+1(Y)", {"n"}},
    {IdentityId::TXY_B, "TXY_B", "(bad)_n+1(XY) via S_r(X), (bad)_s+1(Y) and A-sandwiched terms", {"n"}},
    {IdentityId::PRIMEVER_S, "PRIMEVER_S", "sum_i<=n S'_i(XY) = sum_r+s<=n S'_r(X)S'_s(Y) + sum_r+s=n-1 q^s-r (bad)_r+1(X)(bad)_s+1(Y)", {"n"}},
    {IdentityId::PRIMEVER_B, "PRIMEVER_B", "(bad)_n+1(XY) via S'_r(X), (bad)_s+1(Y) and A-sandwiched terms", {"n"}},
    {IdentityId::BADPROD_1, "BADPROD_1", "(bad)_n+1(XY) = sum q^-r S_r(X)(bad)_s+1(Y) + q^-s (bad)_r+1(X)S'_s(Y)", {"n"}},
    {IdentityId::BADPROD_2, "BADPROD_2", "(bad)_n+1(XY) = sum q^r S'_r(X)(bad)_s+1(Y) + q^s (bad)_r+1(X)S_s(Y)", {"n"}},
    {IdentityId::SP1, "SP1", "q^-i S_i(X) - q^i S'_i(X) = ((bad)_i(X)) A", {"i+"}},
    {IdentityId::SP2, "SP2", "q^i S_i(Y) - q^-i S'_i(Y) = A ((bad)_i(Y))", {"i+"}},
};

char param_letter(std::string_view tag) { return tag[0]; }

}  // namespace

const std::vector<IdentityInfo>& identity_catalogue() { return kCatalogue; }

const IdentityInfo& identity_info(IdentityId id) { return kCatalogue.at(static_cast<size_t>(id)); }

std::optional<IdentityId> parse_identity(std::string_view name) {
  for (const auto& info : kCatalogue)
    if (info.name == name) return info.id;
  return std::nullopt;
}

void validate_params(IdentityId id, const std::vector<int>& params) {
  const auto& info = identity_info(id);
  std::string who(info.name);
  if (params.size() != info.params.size())
    throw Error(Errc::InvalidParams, who + " takes " + std::to_string(info.params.size()) + " parameter(s), got " +
                                         std::to_string(params.size()));
  for (size_t k = 0; k < params.size(); ++k) {
    std::string_view tag = info.params[k];
    int v = params[k];
    std::string p(1, param_letter(tag));
    if (tag.size() > 1 && tag[1] == '+' && v < 1) throw Error(Errc::InvalidParams, who + ": " + p + " must be >= 1");
    if (((tag.size() > 1 && tag[1] == '0') || tag == "n") && v < 0)
      throw Error(Errc::InvalidParams, who + ": " + p + " must be >= 0");
  }
  if (id == IdentityId::XA_AY && params[0] == params[1])
    throw Error(Errc::InvalidParams, "XA_AY requires distinct i and j");
}

std::vector<std::pair<IdentityId, std::vector<int>>> identity_suite_params(int max_index) {
  if (max_index < 1) throw Error(Errc::InvalidParams, "max index must be >= 1");
  std::vector<std::pair<IdentityId, std::vector<int>>> out;
  auto range = [&](char c) {
    std::vector<int> r;
    int lo = c == 'h' ? -(max_index - 1) : c == 'n' ? 0 : 1;
    for (int v = lo; v <= max_index; ++v) r.push_back(v);
    return r;
  };
  for (const auto& info : kCatalogue) {
    std::vector<std::vector<int>> tuples{{}};
    for (auto tag : info.params) {
      std::vector<std::vector<int>> next;
      for (const auto& t : tuples)
        for (int v : range(param_letter(tag))) {
          auto u = t;
          u.push_back(v);
          next.push_back(std::move(u));
        }
      tuples = std::move(next);
    }
    for (auto& t : tuples) {
      if (info.id == IdentityId::XA_AY && t[0] == t[1]) continue;
      out.emplace_back(info.id, std::move(t));
    }
  }
  return out;
}

template <class Field>
std::vector<ProductTerm<typename Field::Scalar>> product_terms(const Field& f, IdentityId id, int n) {
  using Scalar = typename Field::Scalar;
  if (n < 0) throw Error(Errc::InvalidParams, "n must be >= 0");
  std::vector<ProductTerm<Scalar>> t;
  const Scalar one = f.constant(1);
  auto S = [](int k) { return MapRef{MapKind::S, k}; };
  auto Sp = [](int k) { return MapRef{MapKind::Sp, k}; };
  auto B = [](int k) { return MapRef{MapKind::Bad, k}; };
  switch (id) {
    case IdentityId::TXY_S:
    case IdentityId::PRIMEVER_S: {
      bool fwd = id == IdentityId::TXY_S;
      for (int r = 0; r <= n; ++r)
        for (int s = 0; r + s <= n; ++s) t.push_back({one, fwd ? S(r) : Sp(r), false, fwd ? S(s) : Sp(s)});
      for (int r = 0; r <= n - 1; ++r) {
        int s = n - 1 - r;
        t.push_back({fwd ? f.q_pow(r - s) : f.q_pow(s - r), B(r + 1), false, B(s + 1)});
      }
      break;
    }
    case IdentityId::TXY_B:
    case IdentityId::PRIMEVER_B: {
      bool fwd = id == IdentityId::TXY_B;
      for (int r = 0; r <= n; ++r) {
        int s = n - r;
        t.push_back({f.q_pow(fwd ? -r : r), fwd ? S(r) : Sp(r), false, B(s + 1)});
      }
      for (int r = 0; r <= n; ++r) {
        int s = n - r;
        t.push_back({f.q_pow(fwd ? s : -s), B(r + 1), false, fwd ? S(s) : Sp(s)});
      }
      for (int r = 0; r <= n - 1; ++r) {
        int s = n - 1 - r;
        t.push_back({fwd ? -one : one, B(r + 1), true, B(s + 1)});
      }
      break;
    }
    case IdentityId::BADPROD_1:
      for (int r = 0; r <= n; ++r) t.push_back({f.q_pow(-r), S(r), false, B(n - r + 1)});
      for (int r = 0; r <= n; ++r) t.push_back({f.q_pow(-(n - r)), B(r + 1), false, Sp(n - r)});
      break;
    case IdentityId::BADPROD_2:
      for (int r = 0; r <= n; ++r) t.push_back({f.q_pow(r), Sp(r), false, B(n - r + 1)});
      for (int r = 0; r <= n; ++r) t.push_back({f.q_pow(n - r), B(r + 1), false, S(n - r)});
      break;
    default:
      throw Error(Errc::InvalidParams, std::string(identity_info(id).name) + " is not a product expansion");
  }
  return t;
}

template std::vector<ProductTerm<RationalFunctionQ>> product_terms(const SymbolicQ&, IdentityId, int);
template std::vector<ProductTerm<Rational>> product_terms(const NumericQ&, IdentityId, int);

template <class Field>
IdentityWorkspace<Field>::IdentityWorkspace(Field f)
    : f_(std::move(f)),
      alphabet_(Alphabet::make({"A", "X", "Y"})),
      A_(Poly::generator(alphabet_, "A")),
      X_(Poly::generator(alphabet_, "X")),
      Y_(Poly::generator(alphabet_, "Y")),
      ex_(f_, A_, X_),
      ey_(f_, A_, Y_),
      exy_(f_, A_, X_ * Y_) {}

template <class Field>
const typename IdentityWorkspace<Field>::Poly& IdentityWorkspace<Field>::map_x(const MapRef& m) {
  switch (m.kind) {
    case MapKind::S: return ex_.S(m.k, Direction::Forward);
    case MapKind::Sp: return ex_.S(m.k, Direction::Inverse);
    case MapKind::Bad: return ex_.badprod(m.k);
  }
  throw Error(Errc::InvalidParams, "bad map kind");
}

template <class Field>
const typename IdentityWorkspace<Field>::Poly& IdentityWorkspace<Field>::map_y(const MapRef& m) {
  switch (m.kind) {
    case MapKind::S: return ey_.S(m.k, Direction::Forward);
    case MapKind::Sp: return ey_.S(m.k, Direction::Inverse);
    case MapKind::Bad: return ey_.badprod(m.k);
  }
  throw Error(Errc::InvalidParams, "bad map kind");
}

template <class Field>
typename IdentityWorkspace<Field>::Poly IdentityWorkspace<Field>::product_lhs(IdentityId id, int n) {
  if (id == IdentityId::TXY_S || id == IdentityId::PRIMEVER_S) {
    Direction d = id == IdentityId::TXY_S ? Direction::Forward : Direction::Inverse;
    Poly acc(alphabet_);
    for (int i = 0; i <= n; ++i) acc += exy_.S(i, d);
    return acc;
  }
  return exy_.badprod(n + 1);
}

template <class Field>
typename IdentityWorkspace<Field>::Poly IdentityWorkspace<Field>::eval_terms(
    const std::vector<ProductTerm<Scalar>>& terms) {
  Poly acc(alphabet_);
  for (const auto& t : terms) {
    Poly left = t.coeff * map_x(t.left);
    acc += t.middle_a ? left * A_ * map_y(t.right) : left * map_y(t.right);
  }
  return acc;
}

template <class Field>
typename IdentityWorkspace<Field>::Poly IdentityWorkspace<Field>::defect(IdentityId id, const std::vector<int>& p) {
  validate_params(id, p);
  const Poly& X = X_;
  const Poly& Y = Y_;
  const Poly& A = A_;
  auto Sx = [&](int k) -> const Poly& { return ex_.S(k, Direction::Forward); };
  auto Spx = [&](int k) -> const Poly& { return ex_.S(k, Direction::Inverse); };
  auto Bx = [&](int k) -> const Poly& { return ex_.badprod(k); };
  auto Sy = [&](int k) -> const Poly& { return ey_.S(k, Direction::Forward); };
  auto Spy = [&](int k) -> const Poly& { return ey_.S(k, Direction::Inverse); };
  auto By = [&](int k) -> const Poly& { return ey_.badprod(k); };
  auto badprod = [&](int k, const Poly& v) { return apply_badprod(f_, k, A, v); };
  auto S = [&](int k, const Poly& v, Direction d) { return apply_S(f_, k, A, v, d); };
  auto inv = [](const Scalar& s) { return inverse(s); };
  const auto F = Direction::Forward;
  const auto R = Direction::Inverse;

  switch (id) {
    case IdentityId::PLUS: {
      int i = p[0];
      return ad(i, X) + ad(-i, X) - (q(i) + q(-i)) * ad(0, X);
    }
    case IdentityId::S_PLUS_SP: {
      int i = p[0];
      return Sx(i) + Spx(i) - inv(qd(i)) * badprod(i, ad(0, X));
    }
    case IdentityId::ADAD: {
      int i = p[0];
      Scalar d = qd(2 * i);
      return inv(d * d) * ad(i, ad(-i, X)) + X - (qd(2 * i + 1) * inv(d)) * apply_bad(f_, i, A, X);
    }
    case IdentityId::SS: {
      int i = p[0];
      return S(i, Spx(i), F) + badprod(i, Bx(i)) - (qd(2 * i + 1) * inv(qd(2 * i))) * badprod(i, Bx(i + 1));
    }
    case IdentityId::PM_AD: {
      int i = p[0], j = p[1];
      Scalar c = inv(qd(2 * i) * qd(2 * j));
      Scalar e = inv(qd(i + j));
      return c * (ad(i, ad(-j, X)) + ad(-i, ad(j, X))) + (q(i - j) + q(j - i)) * X -
             (qd(2 * i + 1) * e) * apply_bad(f_, i, A, X) - (qd(2 * j + 1) * e) * apply_bad(f_, j, A, X);
    }
    case IdentityId::PM_SS: {
      int i = p[0], j = p[1];
      Scalar e = inv(qd(i + j));
      return S(i, Spx(j), F) + S(i, Sx(j), R) + (q(i - j) + q(j - i)) * badprod(i, Bx(j)) -
             (qd(2 * i + 1) * e) * badprod(i + 1, Bx(j)) - (qd(2 * j + 1) * e) * badprod(i, Bx(j + 1));
    }
    case IdentityId::TTP: {
      int n = p[0];
      Poly t(alphabet_);
      for (int j = 0; j <= n; ++j) t += Spx(j);
      Poly lhs(alphabet_);
      for (int i = 0; i <= n; ++i) lhs += S(i, t, F);
      Poly inner(alphabet_);
      for (int r = 0; r <= n - 1; ++r) inner += (qd(2 * n + 1) * inv(qd(n + r + 1))) * Bx(r + 1);
      return lhs - X - badprod(n + 1, inner);
    }
    case IdentityId::XA_AY: {
      int i = p[0], j = p[1];
      Scalar c = inv(qd(i - j));
      Poly dx = X * A - c * (q(j) * ad(i, X) - q(i) * ad(j, X));
      Poly dy = A * Y - c * (q(-j) * ad(i, Y) - q(-i) * ad(j, Y));
      return dx + dy;
    }
    case IdentityId::AD_BAD: {
      int i = p[0], j = p[1];
      Poly dx = ad(i, Bx(j)) - (q(i - j) * qd(2 * j)) * Sx(j) - (q(-j) * qd(i - j)) * (Bx(j) * A);
      Poly dy = ad(i, By(j)) - (q(j - i) * qd(2 * j)) * Sy(j) - (q(j) * qd(i - j)) * (A * By(j));
      return dx + dy;
    }
    case IdentityId::AD_I_SJ: {
      int i = p[0], j = p[1];
      Poly dx = ad(i, Sx(j)) - (q(i + j) * qd(2 * j + 1)) * Bx(j + 1) + (q(i + j) * qd(2 * j)) * Bx(j) -
                (q(j) * qd(i + j)) * (Sx(j) * A);
      Poly dy = ad(i, Sy(j)) - (q(-i - j) * qd(2 * j + 1)) * By(j + 1) + (q(-i - j) * qd(2 * j)) * By(j) -
                (q(-j) * qd(i + j)) * (A * Sy(j));
      return dx + dy;
    }
    case IdentityId::LEIBNIZ: {
      int h = p[0], i = p[1], j = p[2];
      return ad(h, X * Y) - q(h - i) * (ad(i, X) * Y) - q(j - h) * (X * ad(j, Y)) -
             (q(j - i) * qd(h - i - j)) * (X * A * Y);
    }
    case IdentityId::ADA_BB: {
      int h = p[0], i = p[1], j = p[2];
      return ad(h, Bx(i) * By(j)) - (q(h - i) * qd(2 * i)) * (Sx(i) * By(j)) -
             (q(j - h) * qd(2 * j)) * (Bx(i) * Sy(j)) - (q(j - i) * qd(h - i - j)) * (Bx(i) * A * By(j));
    }
    case IdentityId::ADA_SS: {
      int h = p[0], i = p[1], j = p[2];
      return ad(h, Sx(i) * Sy(j)) - (q(h + i) * qd(2 * i + 1)) * (Bx(i + 1) * Sy(j)) +
             (q(h + i) * qd(2 * i)) * (Bx(i) * Sy(j)) - (q(-h - j) * qd(2 * j + 1)) * (Sx(i) * By(j + 1)) +
             (q(-h - j) * qd(2 * j)) * (Sx(i) * By(j)) - (q(i - j) * qd(h + i + j)) * (Sx(i) * A * Sy(j));
    }
    case IdentityId::ADA_SB: {
      int h = p[0], i = p[1], j = p[2];
      return ad(h, Sx(i) * By(j)) - (q(h + i) * qd(2 * i + 1)) * (Bx(i + 1) * By(j)) +
             (q(h + i) * qd(2 * i)) * (Bx(i) * By(j)) - (q(j - h) * qd(2 * j)) * (Sx(i) * Sy(j)) -
             (q(i + j) * qd(h + i - j)) * (Sx(i) * A * By(j));
    }
    case IdentityId::ADA_BS: {
      int h = p[0], i = p[1], j = p[2];
      return ad(h, Bx(i) * Sy(j)) - (q(-h - j) * qd(2 * j + 1)) * (Bx(i) * By(j + 1)) +
             (q(-h - j) * qd(2 * j)) * (Bx(i) * By(j)) - (q(h - i) * qd(2 * i)) * (Sx(i) * Sy(j)) -
             (q(-i - j) * qd(h - i + j)) * (Bx(i) * A * Sy(j));
    }
    case IdentityId::TXY_S:
    case IdentityId::TXY_B:
    case IdentityId::PRIMEVER_S:
    case IdentityId::PRIMEVER_B:
    case IdentityId::BADPROD_1:
    case IdentityId::BADPROD_2: {
      int n = p[0];
      return product_lhs(id, n) - eval_terms(product_terms(f_, id, n));
    }
    case IdentityId::SP1: {
      int i = p[0];
      return q(-i) * Sx(i) - q(i) * Spx(i) - Bx(i) * A;
    }
    case IdentityId::SP2: {
      int i = p[0];
      return q(i) * Sy(i) - q(-i) * Spy(i) - A * By(i);
    }
  }
  throw Error(Errc::InvalidParams, "unknown identity");
}

template class IdentityWorkspace<SymbolicQ>;
template class IdentityWorkspace<NumericQ>;

namespace {

template <class Field>
VerificationReport check_in(IdentityWorkspace<Field>& ws, IdentityId id, const std::vector<int>& params) {
  const auto& info = identity_info(id);
  VerificationReport r;
  r.kind = VerificationReport::Kind::Identity;
  r.name = info.name;
  r.statement = info.statement;
  r.params = params;
  r.mode = Field::name();
  auto d = ws.defect(id, params);
  r.status = d.is_zero() ? Status::Pass : Status::Fail;
  if (!d.is_zero()) r.witness = to_json(d);
  return r;
}

}  // namespace

VerificationReport verify_identity(IdentityId id, const std::vector<int>& params, const CoefficientMode& mode) {
  validate_params(id, params);
  return std::visit(
      [&](const auto& f) {
        IdentityWorkspace ws(f);
        return check_in(ws, id, params);
      },
      mode);
}

std::vector<VerificationReport> run_identity_suite(int max_index, const CoefficientMode& mode, unsigned threads) {
  auto jobs = identity_suite_params(max_index);
  return std::visit(
      [&](const auto& f) {
        using Field = std::decay_t<decltype(f)>;
        return run_queue<VerificationReport>(
            jobs, [&] { return IdentityWorkspace<Field>(f); },
            [](IdentityWorkspace<Field>& ws, const std::pair<IdentityId, std::vector<int>>& job) {
              return check_in(ws, job.first, job.second);
            },
            threads);
      },
      mode);
}

}  // namespace qons
