#pragma once

// The catalogue of free-algebra identities for ad, bad, S and S', checked by
// full expansion with A, X, Y free generators.

#include <map>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "qons/adjoint.hpp"
#include "qons/freealg.hpp"
#include "qons/report.hpp"

namespace qons {

enum class IdentityId {
  PLUS,
  S_PLUS_SP,
  ADAD,
  SS,
  PM_AD,
  PM_SS,
  TTP,
  XA_AY,
  AD_BAD,
  AD_I_SJ,
  LEIBNIZ,
  ADA_BB,
  ADA_SS,
  ADA_SB,
  ADA_BS,
  TXY_S,
  TXY_B,
  PRIMEVER_S,
  PRIMEVER_B,
  BADPROD_1,
  BADPROD_2,
  SP1,
  SP2,
};

struct IdentityInfo {
  IdentityId id;
  std::string_view name;
  std::string_view statement;
  std::vector<std::string_view> params;  // "h" any integer, "i"/"j" per-identity range, "n" >= 0
};

const std::vector<IdentityInfo>& identity_catalogue();
const IdentityInfo& identity_info(IdentityId id);
std::optional<IdentityId> parse_identity(std::string_view name);

/// Throws InvalidParams when the tuple has the wrong length or is out of range.
void validate_params(IdentityId id, const std::vector<int>& params);

/// Parameter tuples of the standard sweep: i, j in 1..m, h in -(m-1)..m, n in 0..m.
std::vector<std::pair<IdentityId, std::vector<int>>> identity_suite_params(int max_index);

// Product expansions: the right-hand sides of the XY-product formulas as
// lists of terms coeff * F(X) [A] G(Y).
enum class MapKind { S, Sp, Bad };

struct MapRef {
  MapKind kind;
  int k;
};

template <class Scalar>
struct ProductTerm {
  Scalar coeff;
  MapRef left;
  bool middle_a;
  MapRef right;
};

/// For TXY_S / PRIMEVER_S the left side is sum_{i<=n} S_i(XY) (resp. S'_i);
/// for TXY_B, PRIMEVER_B, BADPROD_1, BADPROD_2 it is (bad A)_{n+1}(XY).
template <class Field>
std::vector<ProductTerm<typename Field::Scalar>> product_terms(const Field& f, IdentityId id, int n);

/// Whether the map kills every element of A^(bound).
/// S_k, S'_k and (bad A)_k all vanish there once k > bound.
inline bool map_vanishes(const MapRef& m, int bound) { return m.k > bound; }

/// Expands catalogue identities over the alphabet {A, X, Y}, caching the
/// expansions of X, Y and XY across instances. Not thread-safe.
template <class Field>
class IdentityWorkspace {
 public:
  using Scalar = typename Field::Scalar;
  using Poly = NcPoly<Scalar>;

  explicit IdentityWorkspace(Field f);

  const Field& field() const { return f_; }
  const AlphabetPtr& alphabet() const { return alphabet_; }

  /// LHS - RHS of the instance; zero iff the identity holds.
  Poly defect(IdentityId id, const std::vector<int>& params);

 private:
  Poly ad(int r, const Poly& p) const { return apply_ad(f_, r, A_, p); }
  Scalar q(int n) const { return f_.q_pow(n); }
  Scalar qd(int n) const { return qdiff(f_, n); }

  Poly product_lhs(IdentityId id, int n);
  Poly eval_terms(const std::vector<ProductTerm<Scalar>>& terms);
  const Poly& map_x(const MapRef& m);
  const Poly& map_y(const MapRef& m);

  Field f_;
  AlphabetPtr alphabet_;
  Poly A_, X_, Y_;
  AdjointExpansion<Field, Poly> ex_, ey_, exy_;
};

/// Checks one instance in the given coefficient mode.
VerificationReport verify_identity(IdentityId id, const std::vector<int>& params, const CoefficientMode& mode);

/// The whole sweep, evaluated on a work queue; records ordered by id then params.
std::vector<VerificationReport> run_identity_suite(int max_index, const CoefficientMode& mode, unsigned threads = 0);

}  // namespace qons
