#include "qons/certificate.hpp"

#include "qons/adjoint.hpp"

namespace qons {

const char* evidence_name(StandardnessCertificate::Evidence e) {
  switch (e) {
    case StandardnessCertificate::Evidence::DirectVanish:
      return "DirectVanish";
    case StandardnessCertificate::Evidence::ProductRule:
      return "ProductRule";
    case StandardnessCertificate::Evidence::GeneratorAxiom:
      return "GeneratorAxiom";
  }
  return "?";
}

std::optional<StandardnessCertificate> certify_direct(const SymPoly& A, const SymPoly& X, int bound) {
  if (bound < 0) throw Error(Errc::InvalidParams, "bound must be >= 0");
  if (!same_alphabet(A.alphabet(), X.alphabet())) throw Error(Errc::AlphabetMismatch, "A and X over different alphabets");
  if (!apply_badprod(SymbolicQ{}, bound + 1, A, X).is_zero()) return std::nullopt;
  return StandardnessCertificate{A, X, bound, StandardnessCertificate::Evidence::DirectVanish, {}, "vanishes in the free algebra"};
}

StandardnessCertificate generator_certificate(const SymPoly& A, const SymPoly& X, int bound, std::string note) {
  if (bound < 0) throw Error(Errc::InvalidParams, "bound must be >= 0");
  return StandardnessCertificate{A, X, bound, StandardnessCertificate::Evidence::GeneratorAxiom, {}, std::move(note)};
}

StandardnessCertificate certify_product(const StandardnessCertificate& x, const StandardnessCertificate& y) {
  if (!same_alphabet(x.base.alphabet(), y.base.alphabet()) || !(x.base == y.base))
    throw Error(Errc::ContextMismatch, "certificates refer to different base elements");
  return StandardnessCertificate{x.base, x.element * y.element, x.bound + y.bound,
                                 StandardnessCertificate::Evidence::ProductRule, {x, y}, {}};
}

Json to_json(const StandardnessCertificate& c) {
  Json j{{"element", to_json(c.element)}, {"bound", c.bound}, {"evidence", evidence_name(c.evidence)}};
  if (!c.note.empty()) j["note"] = c.note;
  if (!c.factors.empty()) {
    Json f = Json::array();
    for (const auto& x : c.factors) f.push_back(to_json(x));
    j["factors"] = f;
  }
  return j;
}

}  // namespace qons
