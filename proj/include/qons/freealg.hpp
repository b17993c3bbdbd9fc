#pragma once

// Noncommutative polynomials over a finite alphabet.

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qons/qcoeff.hpp"

namespace qons {

/// Ordered list of distinct generator names with a precedence rank per letter
/// (larger rank = larger letter in monomial orders).
class Alphabet {
 public:
  /// Precedence defaults to list order, first name greatest.
  static std::shared_ptr<const Alphabet> make(std::vector<std::string> names);
  /// `precedence` lists every name once, greatest first.
  static std::shared_ptr<const Alphabet> make(std::vector<std::string> names,
                                              const std::vector<std::string>& precedence);

  size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(size_t letter) const { return names_.at(letter); }
  int rank(size_t letter) const { return rank_[letter]; }
  std::optional<std::uint16_t> index_of(const std::string& name) const;
  /// Like index_of but throws Errc::ParseError.
  std::uint16_t letter(const std::string& name) const;

  bool operator==(const Alphabet& o) const { return names_ == o.names_ && rank_ == o.rank_; }

 private:
  std::vector<std::string> names_;
  std::vector<int> rank_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b);

/// A monomial: sequence of letter indices. Empty = identity.
using Word = std::vector<std::uint16_t>;

/// Degree-lexicographic comparison by alphabet precedence; a strict weak
/// (in fact total) order compatible with concatenation.
struct DegLex {
  const Alphabet* alphabet = nullptr;
  bool operator()(const Word& x, const Word& y) const;
};

Word concat(const Word& x, const Word& y);
std::string word_to_string(const Alphabet& alphabet, const Word& w);
/// Parses a word written as a run of single-character names, e.g. "AABA".
Word parse_word(const Alphabet& alphabet, const std::string& text);

template <class K>
class NcPoly {
 public:
  using Scalar = K;
  using TermMap = std::map<Word, K, DegLex>;

  explicit NcPoly(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)), terms_(DegLex{alphabet_.get()}) {}

  static NcPoly zero(const AlphabetPtr& a) { return NcPoly(a); }
  static NcPoly constant(const AlphabetPtr& a, const K& c) {
    NcPoly p(a);
    p.add_term(Word{}, c);
    return p;
  }
  static NcPoly one(const AlphabetPtr& a) { return constant(a, K(1)); }
  static NcPoly monomial(const AlphabetPtr& a, Word w, const K& c = K(1)) {
    NcPoly p(a);
    p.add_term(std::move(w), c);
    return p;
  }
  /// Throws Errc::ParseError for an unknown generator.
  static NcPoly generator(const AlphabetPtr& a, const std::string& name) {
    return monomial(a, Word{a->letter(name)});
  }

  const AlphabetPtr& alphabet() const noexcept { return alphabet_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  size_t size() const noexcept { return terms_.size(); }
  K coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? K() : it->second;
  }
  /// Largest degree over the support; -1 for zero.
  int degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first.size()); }

  /// Adds c*w in place, dropping the term if it cancels.
  void add_term(const Word& w, const K& c) {
    if (qons::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (qons::is_zero(it->second)) terms_.erase(it);
    }
  }

  NcPoly& operator+=(const NcPoly& o) {
    check(o);
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
  }
  NcPoly& operator-=(const NcPoly& o) {
    check(o);
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
  }
  NcPoly& operator*=(const K& s) {
    if (qons::is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [w, c] : terms_) c *= s;
    return *this;
  }

  friend NcPoly operator+(NcPoly x, const NcPoly& y) { return x += y; }
  friend NcPoly operator-(NcPoly x, const NcPoly& y) { return x -= y; }
  friend NcPoly operator-(NcPoly x) {
    for (auto& [w, c] : x.terms_) c = -c;
    return x;
  }
  friend NcPoly operator*(const K& s, NcPoly x) { return x *= s; }
  friend NcPoly operator*(NcPoly x, const K& s) { return x *= s; }

  /// Concatenation product. Throws Errc::AlphabetMismatch.
  friend NcPoly operator*(const NcPoly& x, const NcPoly& y) {
    x.check(y);
    NcPoly r(x.alphabet_);
    for (const auto& [wx, cx] : x.terms_)
      for (const auto& [wy, cy] : y.terms_) r.add_term(concat(wx, wy), cx * cy);
    return r;
  }

  friend bool operator==(const NcPoly& x, const NcPoly& y) {
    return same_alphabet(x.alphabet_, y.alphabet_) && x.terms_ == y.terms_;
  }

  void check(const NcPoly& o) const {
    if (!same_alphabet(alphabet_, o.alphabet_))
      throw Error(Errc::AlphabetMismatch, "polynomials over different alphabets");
  }

  std::string to_string() const;

 private:
  AlphabetPtr alphabet_;
  TermMap terms_;
};

template <class K>
bool is_zero(const NcPoly<K>& p) {
  return p.is_zero();
}

template <class K>
NcPoly<K> nc_mul(const NcPoly<K>& p, const NcPoly<K>& r) {
  return p * r;
}

/// Extends letter -> image to the unique algebra map. Images must share one
/// target alphabet; throws Errc::MissingImage for a letter without image.
template <class K>
NcPoly<K> substitute(const NcPoly<K>& p, const std::map<std::string, NcPoly<K>>& images) {
  if (images.empty()) throw Error(Errc::MissingImage, "no images supplied");
  const AlphabetPtr& target = images.begin()->second.alphabet();
  for (const auto& [name, img] : images)
    if (!same_alphabet(img.alphabet(), target))
      throw Error(Errc::AlphabetMismatch, "images over different alphabets");
  const Alphabet& src = *p.alphabet();
  std::vector<const NcPoly<K>*> by_letter(src.size(), nullptr);
  for (size_t l = 0; l < src.size(); ++l) {
    auto it = images.find(src.name(l));
    if (it != images.end()) by_letter[l] = &it->second;
  }
  NcPoly<K> result(target);
  for (const auto& [w, c] : p.terms()) {
    NcPoly<K> acc = NcPoly<K>::constant(target, c);
    for (auto letter : w) {
      if (by_letter[letter] == nullptr) throw Error(Errc::MissingImage, "no image for generator " + src.name(letter));
      acc = acc * *by_letter[letter];
    }
    result += acc;
  }
  return result;
}

template <class K>
std::string NcPoly<K>::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) out += " + ";
    first = false;
    std::string word = it->first.empty() ? "1" : word_to_string(*alphabet_, it->first);
    out += "(" + qons::to_string(it->second) + ")*" + word;
  }
  return out;
}

using SymPoly = NcPoly<RationalFunctionQ>;
using NumPoly = NcPoly<Rational>;

extern template class NcPoly<RationalFunctionQ>;
extern template class NcPoly<Rational>;

/// Evaluates q -> q0 on every coefficient.
NumPoly specialize(const SymPoly& p, const Rational& q0);

/// {"alphabet": [...], "terms": [{"word": [...], "coeff": <RationalFunctionQ>}]}
Json to_json(const SymPoly& p);
Json to_json(const NumPoly& p);
/// Throws Errc::ParseError with the offending location.
SymPoly sympoly_from_json(const Json& j);

}  // namespace qons
