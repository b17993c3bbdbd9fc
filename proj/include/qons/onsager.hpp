#pragma once

// The q-Onsager algebra on {A, B} modulo the two q-Dolan/Grady relations, and
// the automorphism L (and L^-1) computed as truncated sums of S_n (S'_n).

#include <string>
#include <vector>

#include "qons/adjoint.hpp"
#include "qons/certificate.hpp"
#include "qons/repn.hpp"
#include "qons/report.hpp"
#include "qons/rewrite.hpp"

namespace qons {

enum class HigherDgMode { Rewrite, Certified };

/// Outcome of testing an element for zero: rewriting first, then matrix
/// models when rewriting leaves a nonzero normal form.
struct ZeroCheck {
  Status status;  // Pass: zero; Fail: nonzero in some model; Inconclusive otherwise
  std::string evidence;  // "rewrite" or "matrix-model"
  SymPoly residue;
  std::vector<TraceStep<RationalFunctionQ>> trace;
};

class OnsagerContext {
 public:
  /// Builds the system and checks both generator certificates (throws
  /// InvariantViolation if (bad A)_2(B) does not reduce to zero).
  OnsagerContext();

  const AlphabetPtr& alphabet() const { return alphabet_; }
  const SymPoly& A() const { return A_; }
  const SymPoly& B() const { return B_; }
  const SymbolicQ& field() const { return f_; }
  const RewriteSystem<RationalFunctionQ>& qdg() const { return qdg_; }
  const StandardnessCertificate& certificate_A() const { return certA_; }
  const StandardnessCertificate& certificate_B() const { return certB_; }

  /// The two relations, each written as LHS - RHS.
  const SymPoly& relation(int k) const { return k == 1 ? dg1_ : dg2_; }

  /// Product-rule certificate for a word: number of B letters.
  StandardnessCertificate certify_word(const Word& w) const;
  int standard_bound(const Word& w) const;
  /// Max over the support; 0 for the zero element.
  int standard_bound(const SymPoly& p) const;

  SymPoly normal_form(const SymPoly& p) const { return qdg_.normal_form(p); }
  ZeroTest<RationalFunctionQ> is_zero_mod(const SymPoly& p, bool trace = false) const {
    return qdg_.is_zero_mod(p, trace);
  }

  /// Truncated sum at N = standard_bound(X), returned as a normal form.
  SymPoly lusztig(const SymPoly& X, Direction dir) const;
  /// Same with an explicit truncation bound, before normalization.
  SymPoly lusztig_raw(const SymPoly& X, Direction dir, int N) const;

  /// The closed form on elements with (bad A)_2(X) = 0. Throws NotCertifiedA1
  /// when a matrix model shows (bad A)_2(X) != 0.
  SymPoly a1_closed_form(const SymPoly& X, Direction dir) const;

  /// Rewriting, then every matrix model at q = 2.
  ZeroCheck zero_check(const SymPoly& p) const;

  /// Tridiagonal-pair models used as fallback (d = 1, 2, 3 where found).
  const std::vector<TDPair>& models() const;

  VerificationReport commutant_fixed_check(const SymPoly& X) const;
  VerificationReport higher_dg_check(int r, HigherDgMode mode) const;
  /// L(w1 w2) = L(w1) L(w2) and L^-1(L(w)) = w for w = w1 and w = w1 w2.
  VerificationReport homomorphism_spotcheck(const Word& w1, const Word& w2) const;

 private:
  SymbolicQ f_;
  AlphabetPtr alphabet_;
  SymPoly A_, B_, dg1_, dg2_;
  RewriteSystem<RationalFunctionQ> qdg_;
  StandardnessCertificate certA_, certB_;
  mutable std::vector<TDPair> models_;
  mutable bool models_ready_ = false;
};

const char* higher_dg_mode_name(HigherDgMode m);

}  // namespace qons
