#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <tuple>
#include <vector>

#include "poschur/errors.hpp"
#include "poschur/moves.hpp"
#include "poschur/ncalg.hpp"
#include "poschur/poset.hpp"
#include "poschur/words.hpp"

namespace poschur {

enum class IdealKind { plac, h, pol };

inline std::string kind_name(IdealKind k) {
  switch (k) {
    case IdealKind::plac: return "plac";
    case IdealKind::h: return "h";
    default: return "pol";
  }
}

// The relation subspace of one ideal inside the span of all words of one
// content. Every generator is a difference of two words, so the row space is
// spanned by {e_w - e_rep(w)} where rep is the lexicographically least word
// reachable by generator moves; reduction is exact (integer) and the reduced
// basis is in row-echelon form with pivots at non-representative words.
class ContentSpace {
 public:
  ContentSpace(Poset p, Content beta, IdealKind kind)
      : poset_(std::move(p)), beta_(std::move(beta)), kind_(kind) {
    if (kind_ != IdealKind::pol && !is_31_free(poset_)) {
      throw NotThreeOneFreeError(
          "relation spaces for this ideal kind require a (3+1)-free poset");
    }
    for (int letter : beta_.letters()) {
      if (letter < 1 || letter > poset_.n()) {
        throw ParamError("content letter outside the poset ground set");
      }
    }
    for_each_word_of_content(beta_,
                             [&](const Word& w) { words_.push_back(w); });
    parent_.resize(words_.size());
    for (size_t i = 0; i < words_.size(); ++i) parent_[i] = static_cast<int>(i);
    for (size_t i = 0; i < words_.size(); ++i) {
      for (const Move& m : moves_for(words_[i])) {
        int j = index_of(m.word);
        // Generator moves preserve content, so the partner is in the class.
        if (j >= 0) unite(static_cast<int>(i), j);
      }
    }
    for (size_t i = 0; i < words_.size(); ++i) find(static_cast<int>(i));
    for (size_t i = 0; i < words_.size(); ++i) {
      if (parent_[i] == static_cast<int>(i)) reps_.push_back(static_cast<int>(i));
    }
  }

  const Poset& poset() const { return poset_; }
  const Content& content() const { return beta_; }
  IdealKind kind() const { return kind_; }
  const std::vector<Word>& words() const { return words_; }
  int dim() const { return static_cast<int>(words_.size()); }
  int n_components() const { return static_cast<int>(reps_.size()); }
  int rank() const { return dim() - n_components(); }

  // Index of a word in the lex-ordered list, or -1.
  int index_of(const Word& w) const {
    auto it = std::lower_bound(words_.begin(), words_.end(), w);
    if (it == words_.end() || *it != w) return -1;
    return static_cast<int>(it - words_.begin());
  }
  int rep_index(int i) const { return parent_[static_cast<size_t>(i)]; }
  const Word& rep_word(const Word& w) const {
    int i = index_of(w);
    if (i < 0) throw ContentMismatchError("word has the wrong content");
    return words_[static_cast<size_t>(rep_index(i))];
  }
  const std::vector<int>& rep_indices() const { return reps_; }

  std::vector<std::vector<int>> components() const {
    std::map<int, std::vector<int>> by_rep;
    for (size_t i = 0; i < words_.size(); ++i) {
      by_rep[parent_[i]].push_back(static_cast<int>(i));
    }
    std::vector<std::vector<int>> out;
    out.reserve(by_rep.size());
    for (auto& [rep, members] : by_rep) out.push_back(std::move(members));
    return out;
  }

  // Reduced relation basis: one row per non-representative word w, the
  // difference e_w - e_rep(w).
  std::vector<std::pair<Word, Word>> reduced_basis() const {
    std::vector<std::pair<Word, Word>> rows;
    for (size_t i = 0; i < words_.size(); ++i) {
      if (parent_[i] != static_cast<int>(i)) {
        rows.emplace_back(words_[i],
                          words_[static_cast<size_t>(parent_[i])]);
      }
    }
    return rows;
  }

 private:
  std::vector<Move> moves_for(const Word& w) const {
    switch (kind_) {
      case IdealKind::plac: return knuth_moves(poset_, w);
      case IdealKind::h: return h_moves(poset_, w);
      default: return pol_moves(poset_, w);
    }
  }
  int find(int i) {
    int r = i;
    while (parent_[static_cast<size_t>(r)] != r) r = parent_[static_cast<size_t>(r)];
    while (parent_[static_cast<size_t>(i)] != r) {
      int next = parent_[static_cast<size_t>(i)];
      parent_[static_cast<size_t>(i)] = r;
      i = next;
    }
    return r;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    // Smaller index (lexicographically least word) becomes the root.
    if (a > b) std::swap(a, b);
    parent_[static_cast<size_t>(b)] = a;
  }

  Poset poset_;
  Content beta_;
  IdealKind kind_;
  std::vector<Word> words_;
  std::vector<int> parent_;
  std::vector<int> reps_;
};

inline ContentSpace build(const Poset& p, const Content& beta,
                          IdealKind kind) {
  return ContentSpace(p, beta, kind);
}

// Process-wide memo: relation spaces are rebuilt constantly during sweeps.
inline std::shared_ptr<const ContentSpace> content_space_cached(
    const Poset& p, const Content& beta, IdealKind kind) {
  static std::mutex mu;
  static std::map<std::tuple<Poset, Content, int>,
                  std::shared_ptr<const ContentSpace>>
      cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(p, beta, static_cast<int>(kind));
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto cs = std::make_shared<const ContentSpace>(p, beta, kind);
  cache.emplace(std::move(key), cs);
  return cs;
}

// Membership of an integer word-combination in the relation row space:
// equivalent to its coefficient sum vanishing on every component.
inline bool member(const ContentSpace& cs, const NCElement& v) {
  std::map<int, long long> comp_sum;
  for (const auto& [w, c] : v.terms) {
    if (!c.is_constant()) {
      throw TCoefficientError(
          "membership is defined for t-free coefficients only");
    }
    if (content_of(w) != cs.content()) {
      throw ContentMismatchError("word " + parts_str(w) +
                                 " has the wrong content");
    }
    comp_sum[cs.rep_index(cs.index_of(w))] += c.constant_value();
  }
  for (const auto& [rep, s] : comp_sum) {
    if (s != 0) return false;
  }
  return true;
}

inline bool congruent(const ContentSpace& cs, const NCElement& f,
                      const NCElement& g) {
  return member(cs, f - g);
}

// Splits an inhomogeneous combination by content and tests membership in
// each content's relation space (the ideal decomposes per content).
inline bool member_per_content(const Poset& p, const NCElement& v,
                               IdealKind kind) {
  std::map<Content, NCElement> split;
  for (const auto& [w, c] : v.terms) {
    auto [it, inserted] = split.emplace(content_of(w), NCElement(p));
    it->second.add(w, c);
  }
  for (const auto& [beta, part] : split) {
    if (!member(*content_space_cached(p, beta, kind), part)) return false;
  }
  return true;
}

inline bool congruent_per_content(const Poset& p, const NCElement& f,
                                  const NCElement& g, IdealKind kind) {
  return member_per_content(p, f - g, kind);
}

struct ProbeFinding {
  Content content;
  Word component_rep;
  PolyT pairing;
};

struct ProbeReport {
  bool negative = false;
  std::vector<ProbeFinding> pairings;   // one per component, all contents
  std::vector<ProbeFinding> negatives;  // the offending subset
  std::string verdict() const {
    return negative ? "NEGATIVE" : "INCONCLUSIVE-POSITIVE";
  }
};

// Necessary condition for monomial positivity modulo the ideal: the pairing
// of f with every component indicator must be coefficientwise nonnegative.
// A negative pairing refutes positivity; all-nonnegative is inconclusive.
inline ProbeReport positivity_probe(const Poset& p, const NCElement& f,
                                    IdealKind kind) {
  if (kind == IdealKind::pol) {
    throw ParamError("positivity probe applies to the plac and h ideals");
  }
  std::map<Content, std::map<Word, PolyT>> by_content;
  for (const auto& [w, c] : f.terms) by_content[content_of(w)][w] = c;
  ProbeReport report;
  for (const auto& [beta, terms] : by_content) {
    auto cs = content_space_cached(p, beta, kind);
    std::map<int, PolyT> sums;
    for (int rep : cs->rep_indices()) sums[rep];  // all components reported
    for (const auto& [w, c] : terms) {
      sums[cs->rep_index(cs->index_of(w))] += c;
    }
    for (const auto& [rep, s] : sums) {
      ProbeFinding finding{beta, cs->words()[static_cast<size_t>(rep)], s};
      if (!s.nonneg()) {
        report.negative = true;
        report.negatives.push_back(finding);
      }
      report.pairings.push_back(std::move(finding));
    }
  }
  return report;
}

}  // namespace poschur
