#pragma once

// Certificates that an element X satisfies (bad A)_{n+1}(X) = 0.

#include <optional>
#include <string>
#include <vector>

#include "qons/freealg.hpp"

namespace qons {

struct StandardnessCertificate {
  enum class Evidence { DirectVanish, ProductRule, GeneratorAxiom };

  SymPoly base;  // the element A the maps are built from
  SymPoly element;
  int bound = 0;
  Evidence evidence = Evidence::GeneratorAxiom;
  std::vector<StandardnessCertificate> factors;  // ProductRule only
  std::string note;
};

const char* evidence_name(StandardnessCertificate::Evidence e);

/// Exact check in the free algebra; nullopt if (bad A)_{n+1}(X) != 0 there.
std::optional<StandardnessCertificate> certify_direct(const SymPoly& A, const SymPoly& X, int bound);

/// Declared for a generator of a presentation; the caller has checked it.
StandardnessCertificate generator_certificate(const SymPoly& A, const SymPoly& X, int bound, std::string note);

/// Product rule: X in bound r, Y in bound s gives XY in bound r + s.
/// Throws ContextMismatch for certificates over different A or alphabets.
StandardnessCertificate certify_product(const StandardnessCertificate& x, const StandardnessCertificate& y);

Json to_json(const StandardnessCertificate& c);

}  // namespace qons
