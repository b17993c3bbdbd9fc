#pragma once

// The current algebra with generators W(-k), W(k+1), G(k+1), Gt(k+1),
// instantiated for k = 0..K, and the action of S, S' built from A = W(0).

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qons/adjoint.hpp"
#include "qons/report.hpp"
#include "qons/rewrite.hpp"

namespace qons {

enum class AqGenerator { Wminus, Wplus, G, Gt };

const char* aq_generator_name(AqGenerator g);
std::optional<AqGenerator> parse_aq_generator(std::string_view s);

/// One relation instance, written as LHS - RHS.
struct AqRelation {
  std::string family;
  int k = 0, l = 0;
  SymPoly poly;
  bool oriented = false;  // turned into a rewrite rule
  Word orientation;       // its lhs when oriented
};

/// A derivation line and the relation family that justifies reaching it from
/// the previous line ("linear" = identical as free-algebra elements).
struct ProofLine {
  std::string justification;
  SymPoly expr;
};

class AqContext {
 public:
  /// Throws InvalidCutoff for K < 1.
  explicit AqContext(int K);

  int K() const { return K_; }
  const AlphabetPtr& alphabet() const { return alphabet_; }
  const SymbolicQ& field() const { return f_; }
  /// -(q^2 - q^-2)^2
  const RationalFunctionQ& rho() const { return rho_; }
  const RewriteSystem<RationalFunctionQ>& system() const { return system_; }
  const std::vector<AqRelation>& relations() const { return relations_; }

  /// IndexOutOfRange outside the instantiated generators.
  SymPoly W(int n) const;
  SymPoly G(int n) const;
  SymPoly Gt(int n) const;
  /// W(-k), W(k+1), G(k+1), Gt(k+1).
  SymPoly generator(AqGenerator g, int k) const;

  /// [W0, [W0, [W0, X]]_q]_{q^-1}
  SymPoly nested_bracket(const SymPoly& X) const;

  /// Rewrite system holding only the oriented rules of one family.
  RewriteSystem<RationalFunctionQ> family_system(const std::string& family) const;

  VerificationReport verify_generator_class(AqGenerator g, int k) const;
  VerificationReport verify_S_images(int k) const;
  /// The derivation of (bad W0)_2(X) = 0 for W(k+1), G(k+1), Gt(k+1).
  std::vector<ProofLine> proof_lines(AqGenerator g, int k) const;
  VerificationReport replay_proof(AqGenerator g, int k) const;

  /// Every check above for k = 0..K-1, in a fixed order.
  std::vector<VerificationReport> verify_all(unsigned threads = 0) const;

 private:
  void check_k(int k) const;
  void add_relation(const std::string& family, int k, int l, SymPoly poly);
  void orient(const std::string& family, int k, int l, SymPoly poly, const SymPoly& lead);
  SymPoly gen(const std::string& name) const;

  int K_;
  SymbolicQ f_;
  AlphabetPtr alphabet_;
  RationalFunctionQ rho_;
  std::vector<AqRelation> relations_;
  RewriteSystem<RationalFunctionQ> system_;
};

}  // namespace qons
