#pragma once

#include <algorithm>
#include <functional>
#include <vector>

#include "poschur/poset.hpp"

namespace poschur {

// Words are sequences of poset elements; lexicographic order on the letter
// vectors is the canonical tie-break everywhere.
using Word = std::vector<int>;

inline Content content_of(const Word& w) { return Content(w); }

// Positions i (1-based, i < len) where w_i is strictly above w_{i+1}.
inline std::vector<int> des_p(const Poset& p, const Word& w) {
  std::vector<int> out;
  for (size_t i = 0; i + 1 < w.size(); ++i) {
    if (p.less(w[i + 1], w[i])) out.push_back(static_cast<int>(i) + 1);
  }
  return out;
}

// Number of pairs i < j with w_i greater than w_j in the total order and
// w_i, w_j incomparable in the poset.
inline int inv_p(const Nuio& nu, const Word& w) {
  int count = 0;
  for (size_t i = 0; i < w.size(); ++i) {
    for (size_t j = i + 1; j < w.size(); ++j) {
      if (nu.tlt(w[j], w[i]) && nu.poset.incdot(w[i], w[j])) ++count;
    }
  }
  return count;
}

struct WordClass {
  bool strictly_decreasing = false;
  bool weakly_increasing = false;
  bool power = false;
  // 1-based positions i such that w_i is below w_j for every j > i (the last
  // position always qualifies vacuously).
  std::vector<int> rl_minima;
};

// Monotonicity flags and right-left minima. A power word is weakly
// increasing with no nontrivial right-left minimum (only the last position).
inline WordClass classify(const Poset& p, const Word& w) {
  WordClass c;
  size_t n = w.size();
  c.strictly_decreasing = true;
  c.weakly_increasing = true;
  for (size_t i = 0; i + 1 < n; ++i) {
    if (!p.less(w[i + 1], w[i])) c.strictly_decreasing = false;
    if (p.less(w[i + 1], w[i])) c.weakly_increasing = false;
  }
  for (size_t i = 0; i < n; ++i) {
    bool min = true;
    for (size_t j = i + 1; j < n && min; ++j) {
      if (!p.less(w[i], w[j])) min = false;
    }
    if (min) c.rl_minima.push_back(static_cast<int>(i) + 1);
  }
  c.power = c.weakly_increasing &&
            (n == 0 || (c.rl_minima.size() == 1 &&
                        c.rl_minima[0] == static_cast<int>(n)));
  return c;
}

// Streams all distinct arrangements of the content in lexicographic order.
inline void for_each_word_of_content(const Content& beta,
                                     const std::function<void(const Word&)>& fn) {
  Word w = beta.letters();  // sorted ascending = lexicographically least
  if (w.empty()) {
    fn(w);
    return;
  }
  do {
    fn(w);
  } while (std::next_permutation(w.begin(), w.end()));
}

inline std::vector<Word> words_of_content(
    const Poset& /*p*/, const Content& beta,
    const std::function<bool(const Word&)>& filter = nullptr) {
  std::vector<Word> out;
  for_each_word_of_content(beta, [&](const Word& w) {
    if (!filter || filter(w)) out.push_back(w);
  });
  return out;
}

}  // namespace poschur
