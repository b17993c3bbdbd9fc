#include "qons/freealg.hpp"

#include <algorithm>
#include <set>

namespace qons {

template class NcPoly<RationalFunctionQ>;
template class NcPoly<Rational>;

std::shared_ptr<const Alphabet> Alphabet::make(std::vector<std::string> names) {
  std::vector<std::string> precedence = names;
  return make(std::move(names), precedence);
}

std::shared_ptr<const Alphabet> Alphabet::make(std::vector<std::string> names,
                                               const std::vector<std::string>& precedence) {
  if (names.empty()) throw Error(Errc::InvalidParams, "alphabet must be nonempty");
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty()) throw Error(Errc::InvalidParams, "generator names must be nonempty");
    if (!seen.insert(n).second) throw Error(Errc::InvalidParams, "duplicate generator name " + n);
  }
  if (precedence.size() != names.size() || std::set<std::string>(precedence.begin(), precedence.end()) != seen)
    throw Error(Errc::InvalidParams, "precedence must list every generator exactly once");
  auto a = std::make_shared<Alphabet>();
  a->names_ = std::move(names);
  a->rank_.resize(a->names_.size());
  for (size_t i = 0; i < precedence.size(); ++i) {
    auto pos = std::find(a->names_.begin(), a->names_.end(), precedence[i]) - a->names_.begin();
    a->rank_[static_cast<size_t>(pos)] = static_cast<int>(precedence.size() - i);
  }
  return a;
}

std::optional<std::uint16_t> Alphabet::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::uint16_t>(it - names_.begin());
}

std::uint16_t Alphabet::letter(const std::string& name) const {
  auto idx = index_of(name);
  if (!idx) throw Error(Errc::ParseError, "unknown generator '" + name + "'");
  return *idx;
}

bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b) { return a == b || (a && b && *a == *b); }

bool DegLex::operator()(const Word& x, const Word& y) const {
  if (x.size() != y.size()) return x.size() < y.size();
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i] == y[i]) continue;
    return alphabet->rank(x[i]) < alphabet->rank(y[i]);
  }
  return false;
}

Word concat(const Word& x, const Word& y) {
  Word w;
  w.reserve(x.size() + y.size());
  w.insert(w.end(), x.begin(), x.end());
  w.insert(w.end(), y.begin(), y.end());
  return w;
}

std::string word_to_string(const Alphabet& alphabet, const Word& w) {
  std::string s;
  bool single = std::all_of(alphabet.names().begin(), alphabet.names().end(),
                            [](const std::string& n) { return n.size() == 1; });
  for (size_t i = 0; i < w.size(); ++i) {
    if (!single && i > 0) s += "*";
    s += alphabet.name(w[i]);
  }
  return s;
}

Word parse_word(const Alphabet& alphabet, const std::string& text) {
  Word w;
  for (char c : text) {
    if (c == '1' && text.size() == 1) break;
    w.push_back(alphabet.letter(std::string(1, c)));
  }
  return w;
}

NumPoly specialize(const SymPoly& p, const Rational& q0) {
  NumPoly r(p.alphabet());
  for (const auto& [w, c] : p.terms()) r.add_term(w, eval_at(c, q0));
  return r;
}

namespace {

template <class K>
Json poly_to_json(const NcPoly<K>& p) {
  Json terms = Json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    Json word = Json::array();
    for (auto l : it->first) word.push_back(p.alphabet()->name(l));
    terms.push_back(Json{{"word", word}, {"coeff", to_json(it->second)}});
  }
  return Json{{"alphabet", p.alphabet()->names()}, {"terms", terms}};
}

}  // namespace

Json to_json(const SymPoly& p) { return poly_to_json(p); }
Json to_json(const NumPoly& p) { return poly_to_json(p); }

SymPoly sympoly_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("alphabet") || !j.contains("terms"))
    throw Error(Errc::ParseError, "expression must have \"alphabet\" and \"terms\"");
  const Json& names = j.at("alphabet");
  if (!names.is_array()) throw Error(Errc::ParseError, "/alphabet must be an array of names");
  std::vector<std::string> ns;
  for (const auto& n : names) {
    if (!n.is_string()) throw Error(Errc::ParseError, "/alphabet entries must be strings");
    ns.push_back(n.get<std::string>());
  }
  AlphabetPtr alpha;
  try {
    alpha = Alphabet::make(ns);
  } catch (const Error& e) {
    throw Error(Errc::ParseError, std::string("/alphabet: ") + e.what());
  }
  const Json& terms = j.at("terms");
  if (!terms.is_array()) throw Error(Errc::ParseError, "/terms must be an array");
  SymPoly p(alpha);
  for (size_t t = 0; t < terms.size(); ++t) {
    std::string where = "/terms/" + std::to_string(t);
    const Json& term = terms[t];
    if (!term.is_object() || !term.contains("word") || !term.contains("coeff"))
      throw Error(Errc::ParseError, where + " must have \"word\" and \"coeff\"");
    if (!term.at("word").is_array()) throw Error(Errc::ParseError, where + "/word must be an array");
    Word w;
    for (size_t k = 0; k < term.at("word").size(); ++k) {
      const Json& letter = term.at("word")[k];
      if (!letter.is_string()) throw Error(Errc::ParseError, where + "/word/" + std::to_string(k) + " must be a string");
      auto idx = alpha->index_of(letter.get<std::string>());
      if (!idx)
        throw Error(Errc::ParseError,
                    where + "/word/" + std::to_string(k) + ": unknown generator '" + letter.get<std::string>() + "'");
      w.push_back(*idx);
    }
    try {
      p.add_term(w, rf_from_json(term.at("coeff")));
    } catch (const Error& e) {
      throw Error(Errc::ParseError, where + "/coeff: " + e.what());
    }
  }
  return p;
}

}  // namespace qons
