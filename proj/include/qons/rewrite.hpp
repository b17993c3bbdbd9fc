#pragma once

// Oriented rewriting modulo a two-sided ideal. A zero normal form proves
// membership; a nonzero one is inconclusive unless the system is confluent.

#include <algorithm>
#include <string>
#include <vector>

#include "qons/freealg.hpp"

namespace qons {

/// Degree-lexicographic order with the alphabet's precedence.
struct MonomialOrder {
  AlphabetPtr alphabet;

  bool less(const Word& x, const Word& y) const { return DegLex{alphabet.get()}(x, y); }
};

template <class K>
struct RewriteRule {
  Word lhs;
  NcPoly<K> rhs;
  std::string label;
};

/// One rewrite step: before = factorLeft . lhs(rule) . factorRight was
/// replaced, with coefficient coeff, by factorLeft . rhs . factorRight.
template <class K>
struct TraceStep {
  size_t position;
  size_t rule;
  Word before;
  Word factor_left;
  Word factor_right;
  K coeff;
};

template <class K>
struct Reduction {
  NcPoly<K> normal_form;
  std::vector<TraceStep<K>> trace;
};

enum class ZeroVerdict { Zero, NonzeroNormalForm };

template <class K>
struct ZeroTest {
  ZeroVerdict verdict;
  NcPoly<K> residue;
  std::vector<TraceStep<K>> trace;

  bool zero() const { return verdict == ZeroVerdict::Zero; }
};

template <class K>
class RewriteSystem {
 public:
  explicit RewriteSystem(AlphabetPtr alphabet) : order_{alphabet} {}

  const AlphabetPtr& alphabet() const { return order_.alphabet; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<RewriteRule<K>>& rules() const { return rules_; }

  /// Throws OrderViolation unless every rhs monomial is below lhs.
  void add_rule(Word lhs, NcPoly<K> rhs, std::string label = {}) {
    if (!same_alphabet(rhs.alphabet(), alphabet())) throw Error(Errc::AlphabetMismatch, "rule over a foreign alphabet");
    for (const auto& [w, c] : rhs.terms())
      if (!order_.less(w, lhs))
        throw Error(Errc::OrderViolation, "rule " + word_to_string(*alphabet(), lhs) + " -> ... has rhs monomial " +
                                              word_to_string(*alphabet(), w) + " not below its lhs");
    rules_.push_back({std::move(lhs), std::move(rhs), std::move(label)});
  }

  /// Solves relation = 0 for its orientation word: w -> w - relation / c_w.
  /// Throws NotLeadingMonomial when w is absent or not the maximal monomial.
  void add_relation(const NcPoly<K>& relation, const Word& orientation, std::string label = {}) {
    if (!same_alphabet(relation.alphabet(), alphabet()))
      throw Error(Errc::AlphabetMismatch, "relation over a foreign alphabet");
    auto it = relation.terms().find(orientation);
    std::string ws = word_to_string(*alphabet(), orientation);
    if (it == relation.terms().end())
      throw Error(Errc::NotLeadingMonomial, "orientation word " + ws + " does not occur in the relation");
    if (relation.terms().rbegin()->first != orientation)
      throw Error(Errc::NotLeadingMonomial,
                  "orientation word " + ws + " is not the leading monomial (leading is " +
                      word_to_string(*alphabet(), relation.terms().rbegin()->first) + ")");
    NcPoly<K> rhs = NcPoly<K>::monomial(alphabet(), orientation) - inverse(it->second) * relation;
    add_rule(orientation, std::move(rhs), std::move(label));
  }

  /// The ideal element lhs - rhs of a rule.
  NcPoly<K> rule_element(size_t i) const {
    const auto& r = rules_.at(i);
    return NcPoly<K>::monomial(alphabet(), r.lhs) - r.rhs;
  }

  /// Rewrites the largest reducible monomial at its leftmost match (first
  /// rule in declaration order on ties) until nothing is reducible.
  Reduction<K> reduce(const NcPoly<K>& p, bool record_trace = false) const {
    if (!same_alphabet(p.alphabet(), alphabet())) throw Error(Errc::AlphabetMismatch, "polynomial over a foreign alphabet");
    Reduction<K> out{p, {}};
    NcPoly<K>& r = out.normal_form;
    if (r.is_zero()) return out;
    Word cur = r.terms().rbegin()->first;
    bool have = true;
    while (have) {
      auto match = find_match(cur);
      if (match) {
        auto [pos, ri] = *match;
        const auto& rule = rules_[ri];
        K c = r.coefficient(cur);
        Word u(cur.begin(), cur.begin() + static_cast<long>(pos));
        Word v(cur.begin() + static_cast<long>(pos + rule.lhs.size()), cur.end());
        r.add_term(cur, -c);
        for (const auto& [w, k] : rule.rhs.terms()) r.add_term(concat(concat(u, w), v), c * k);
        if (record_trace) out.trace.push_back({pos, ri, cur, std::move(u), std::move(v), c});
      }
      // Everything added is below cur, so continue with the next smaller word.
      auto it = r.terms().lower_bound(cur);
      if (it == r.terms().begin()) {
        have = false;
      } else {
        cur = std::prev(it)->first;
      }
    }
    return out;
  }

  NcPoly<K> normal_form(const NcPoly<K>& p) const { return reduce(p).normal_form; }

  ZeroTest<K> is_zero_mod(const NcPoly<K>& p, bool record_trace = false) const {
    auto red = reduce(p, record_trace);
    ZeroVerdict v = red.normal_form.is_zero() ? ZeroVerdict::Zero : ZeroVerdict::NonzeroNormalForm;
    return {v, std::move(red.normal_form), std::move(red.trace)};
  }

  /// normal form + sum of c * u (lhs - rhs) v over the trace. Equals the input
  /// of the traced reduction exactly.
  NcPoly<K> replay(const NcPoly<K>& normal_form, const std::vector<TraceStep<K>>& trace) const {
    NcPoly<K> acc = normal_form;
    for (const auto& s : trace) {
      NcPoly<K> u = NcPoly<K>::monomial(alphabet(), s.factor_left, s.coeff);
      NcPoly<K> v = NcPoly<K>::monomial(alphabet(), s.factor_right);
      acc += u * rule_element(s.rule) * v;
    }
    return acc;
  }

  /// Adds reduced overlap consequences as derived rules, for overlap words up
  /// to max_degree. Sound (every new rule lies in the ideal); no completeness.
  /// Returns the number of rules added.
  size_t interreduce(int max_degree, int max_rounds = 8) {
    size_t added = 0;
    for (int round = 0; round < max_rounds; ++round) {
      std::vector<NcPoly<K>> fresh;
      size_t n = rules_.size();
      for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
          const Word& x = rules_[i].lhs;
          const Word& y = rules_[j].lhs;
          for (size_t k = 1; k < std::min(x.size(), y.size()); ++k) {
            if (static_cast<int>(x.size() + y.size() - k) > max_degree) continue;
            if (!std::equal(x.end() - static_cast<long>(k), x.end(), y.begin())) continue;
            Word t(y.begin() + static_cast<long>(k), y.end());
            Word s(x.begin(), x.end() - static_cast<long>(k));
            NcPoly<K> lhs_first = rules_[i].rhs * NcPoly<K>::monomial(alphabet(), t);
            NcPoly<K> rhs_first = NcPoly<K>::monomial(alphabet(), s) * rules_[j].rhs;
            NcPoly<K> spoly = normal_form(lhs_first - rhs_first);
            if (!spoly.is_zero()) fresh.push_back(std::move(spoly));
          }
        }
      size_t before = rules_.size();
      for (auto& f : fresh) {
        f = normal_form(f);
        if (f.is_zero()) continue;
        Word lead = f.terms().rbegin()->first;
        add_relation(f, lead, "overlap");
      }
      added += rules_.size() - before;
      if (rules_.size() == before) break;
    }
    return added;
  }

 private:
  std::optional<std::pair<size_t, size_t>> find_match(const Word& w) const {
    for (size_t pos = 0; pos < w.size(); ++pos)
      for (size_t ri = 0; ri < rules_.size(); ++ri) {
        const Word& l = rules_[ri].lhs;
        if (l.empty() || pos + l.size() > w.size()) continue;
        if (std::equal(l.begin(), l.end(), w.begin() + static_cast<long>(pos))) return std::make_pair(pos, ri);
      }
    return std::nullopt;
  }

  MonomialOrder order_;
  std::vector<RewriteRule<K>> rules_;
};

/// Builds a system by orienting each relation at the given word.
template <class K>
RewriteSystem<K> make_system(const AlphabetPtr& alphabet, const std::vector<NcPoly<K>>& relations,
                             const std::vector<Word>& orientations) {
  if (relations.size() != orientations.size())
    throw Error(Errc::InvalidParams, "one orientation word per relation is required");
  RewriteSystem<K> sys(alphabet);
  for (size_t i = 0; i < relations.size(); ++i) sys.add_relation(relations[i], orientations[i]);
  return sys;
}

/// [{"position","rule","before","factorLeft","factorRight","coeff"}, ...]
template <class K>
Json trace_to_json(const Alphabet& alphabet, const std::vector<TraceStep<K>>& trace) {
  auto word = [&](const Word& w) {
    Json a = Json::array();
    for (auto l : w) a.push_back(alphabet.name(l));
    return a;
  };
  Json out = Json::array();
  for (const auto& s : trace)
    out.push_back({{"position", s.position},
                   {"rule", s.rule},
                   {"before", word(s.before)},
                   {"factorLeft", word(s.factor_left)},
                   {"factorRight", word(s.factor_right)},
                   {"coeff", to_json(s.coeff)}});
  return out;
}

}  // namespace qons
