#pragma once

// A combinatorial R-matrix on pairs of chains.
//
// For chains a (length k) and b (length l) of a (3+1)-free poset, take the
// ladder decomposition of (a, b) and pair unbalanced ladders by parenthesis
// matching: ladders with at least as many elements from a act as "(", those
// with at least as many from b act as ")" (balanced ladders are both and pair
// with themselves), scanned from the smallest ladder upward; leftover "(" and
// ")" are then matched wraparound-style, largest "(" with smallest ")".  The
// involution eta swaps the two sides of every unpaired ladder, producing
// chains (c, d) with |c| = |b| and |d| = |a| such that the concatenated chain
// words satisfy u_a u_b = u_c u_d modulo the plactic-kind ideal.  Summing over
// all chain pairs, this re-proves that e_k and e_l commute in the quotient.

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "ladders.hpp"
#include "ncalg.hpp"
#include "poset.hpp"
#include "quotient.hpp"
#include "words.hpp"

namespace poschur {

struct ChainPair {
  Poset poset;
  Word a;  // first chain, largest element first
  Word b;  // second chain, largest element first

  ChainPair(Poset p, Word a_in, Word b_in)
      : poset(std::move(p)), a(std::move(a_in)), b(std::move(b_in)) {
    require_decreasing_chain(poset, a, "first chain");
    require_decreasing_chain(poset, b, "second chain");
  }
};

// One matched pair of the pairing: ladder `a_ladder` participates with its
// first-chain side, `b_ladder` with its second-chain side (1-based indices
// into the ladder decomposition, 1 = smallest).  A balanced ladder pairs with
// itself.  `wraparound` marks pairs matched across the ends (a_ladder >
// b_ladder).
struct PairRecord {
  int a_ladder = 0;
  int b_ladder = 0;
  bool wraparound = false;

  bool operator==(const PairRecord& o) const {
    return a_ladder == o.a_ladder && b_ladder == o.b_ladder &&
           wraparound == o.wraparound;
  }
};

// A maximal run of ladder indices connected by the pairing's interval system:
// a non-wraparound pair (i, j) spans [i, j]; a wraparound pair (i, j) with
// i > j spans [i, top] and [bottom, j]; an unpaired ladder is a point.
struct Lump {
  int lo = 0;  // smallest ladder index in the lump (1-based)
  int hi = 0;  // largest ladder index in the lump (inclusive)
  std::vector<PairRecord> pairs;  // pairing records touching this lump
  std::vector<int> unpaired;      // unpaired ladder indices inside
};

struct Lumps {
  LadderDecomp decomp;
  std::vector<PairRecord> pairs;  // all matched pairs
  std::vector<int> unpaired;      // unpaired ladder indices, ascending
  bool unpaired_from_a = true;    // unpaired ladders favour the first chain
  std::vector<Lump> lumps;        // ascending: lumps.front() is smallest
};

inline Lumps pair_and_lump(const ChainPair& cp) {
  Lumps out;
  out.decomp = ladder_decomp(cp.poset, cp.a, cp.b);
  const int m = out.decomp.size();

  // Parenthesis scan from the smallest ladder upward.  At index i a "(" (in
  // V^a: left or balanced) is seen before the ")" at i + 1/2 (in V^b: right
  // or balanced), so balanced ladders always pair with themselves.
  std::vector<int> open_stack;
  std::vector<int> closers;
  for (int i = 1; i <= m; ++i) {
    Balance bl = out.decomp.h(i).balance;
    if (bl != Balance::right) open_stack.push_back(i);
    if (bl != Balance::left) {
      if (!open_stack.empty()) {
        out.pairs.push_back(PairRecord{open_stack.back(), i, false});
        open_stack.pop_back();
      } else {
        closers.push_back(i);
      }
    }
  }
  // Wraparound: repeatedly match the largest leftover "(" with the smallest
  // leftover ")".
  size_t next_closer = 0;
  while (!open_stack.empty() && next_closer < closers.size()) {
    out.pairs.push_back(
        PairRecord{open_stack.back(), closers[next_closer], true});
    open_stack.pop_back();
    ++next_closer;
  }
  if (!open_stack.empty()) {
    out.unpaired = open_stack;  // already ascending
    out.unpaired_from_a = true;
  } else {
    out.unpaired.assign(closers.begin() + static_cast<long>(next_closer),
                        closers.end());
    out.unpaired_from_a = false;
  }
  // Every unpaired ladder must be strictly unbalanced, on one common side.
  for (int i : out.unpaired) {
    Balance bl = out.decomp.h(i).balance;
    if (bl != (out.unpaired_from_a ? Balance::left : Balance::right)) {
      throw ParamError("pairing left a balanced ladder unpaired");
    }
  }

  // Lumps: connected components of the interval system over indices 1..m.
  std::vector<int> parent(static_cast<size_t>(m) + 1);
  for (int i = 0; i <= m; ++i) parent[static_cast<size_t>(i)] = i;
  auto find = [&](int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] =
          parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  };
  auto unite_range = [&](int lo, int hi) {
    for (int t = lo; t < hi; ++t) {
      int x = find(t), y = find(t + 1);
      if (x != y) parent[static_cast<size_t>(std::max(x, y))] = std::min(x, y);
    }
  };
  for (const PairRecord& pr : out.pairs) {
    if (!pr.wraparound) {
      unite_range(pr.a_ladder, pr.b_ladder);
    } else {
      unite_range(pr.a_ladder, m);  // [a_ladder, top]
      unite_range(1, pr.b_ladder);  // [bottom, b_ladder]
    }
  }
  std::vector<int> root_to_lump(static_cast<size_t>(m) + 1, -1);
  for (int i = 1; i <= m; ++i) {
    int r = find(i);
    if (root_to_lump[static_cast<size_t>(r)] < 0) {
      root_to_lump[static_cast<size_t>(r)] =
          static_cast<int>(out.lumps.size());
      out.lumps.push_back(Lump{i, i, {}, {}});
    } else {
      out.lumps[static_cast<size_t>(root_to_lump[static_cast<size_t>(r)])].hi =
          i;
    }
  }
  auto lump_of = [&](int i) -> Lump& {
    return out.lumps[static_cast<size_t>(
        root_to_lump[static_cast<size_t>(find(i))])];
  };
  for (const PairRecord& pr : out.pairs) {
    Lump& la = lump_of(pr.a_ladder);
    la.pairs.push_back(pr);
    if (pr.wraparound && &lump_of(pr.b_ladder) != &la) {
      lump_of(pr.b_ladder).pairs.push_back(pr);
    }
  }
  for (int i : out.unpaired) lump_of(i).unpaired.push_back(i);
  return out;
}

// The chain-swapping involution: every unpaired ladder trades its first-chain
// part for its second-chain part.  Parts are emitted largest ladder first, so
// the results are decreasing chains with |c| = |b| and |d| = |a|.
inline ChainPair eta(const ChainPair& cp) {
  Lumps pl = pair_and_lump(cp);
  const int m = pl.decomp.size();
  std::vector<char> switched(static_cast<size_t>(m) + 1, 0);
  for (int i : pl.unpaired) switched[static_cast<size_t>(i)] = 1;
  Word c, d;
  c.reserve(cp.b.size());
  d.reserve(cp.a.size());
  for (int i = m; i >= 1; --i) {
    const Ladder& L = pl.decomp.h(i);
    const auto& to_c = switched[static_cast<size_t>(i)] ? L.from_d : L.from_c;
    const auto& to_d = switched[static_cast<size_t>(i)] ? L.from_c : L.from_d;
    c.insert(c.end(), to_c.begin(), to_c.end());
    d.insert(d.end(), to_d.begin(), to_d.end());
  }
  if (c.size() != cp.b.size() || d.size() != cp.a.size()) {
    throw ParamError("chain swap did not exchange the chain lengths");
  }
  return ChainPair(cp.poset, std::move(c), std::move(d));
}

struct EtaReport {
  bool pass = true;
  long long pairs_checked = 0;
  std::string detail;  // first failure, empty when pass
};

namespace detail {

inline std::string word_list(const Word& w) {
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(w[static_cast<size_t>(i)]);
  }
  return s;
}

inline bool same_ladder_elems(const LadderDecomp& x, const LadderDecomp& y) {
  if (x.size() != y.size()) return false;
  for (int i = 1; i <= x.size(); ++i) {
    if (x.h(i).elems != y.h(i).elems) return false;
  }
  return true;
}

}  // namespace detail

// Exhaustively checks, over all chain pairs (a, b) with |a| = k and |b| = l:
// that eta is an involution, preserves the element multiset and the ladder
// decomposition, exchanges the lengths, and satisfies the word congruence
// u_a u_b = u_c u_d modulo the plactic-kind quotient.
inline EtaReport verify_eta_congruence(const Poset& p, int k, int l) {
  EtaReport rep;
  auto fail = [&](const ChainPair& cp, const std::string& what) {
    rep.pass = false;
    if (rep.detail.empty()) {
      rep.detail = what + " failed for a=(" + detail::word_list(cp.a) +
                   "), b=(" + detail::word_list(cp.b) + ")";
    }
  };
  const auto elems = all_elements(p);
  const auto wk = chains(p, elems, k);
  const auto wl = chains(p, elems, l);
  for (const auto& a : wk) {
    for (const auto& b : wl) {
      ChainPair ab(p, a, b);
      ChainPair cd = eta(ab);
      ++rep.pairs_checked;
      if (cd.a.size() != b.size() || cd.b.size() != a.size()) {
        fail(ab, "length exchange");
        continue;
      }
      ChainPair back = eta(cd);
      if (back.a != a || back.b != b) fail(ab, "involution");
      Word left = a, right = cd.a;
      left.insert(left.end(), b.begin(), b.end());
      right.insert(right.end(), cd.b.begin(), cd.b.end());
      Word ls = left, rs = right;
      std::sort(ls.begin(), ls.end());
      std::sort(rs.begin(), rs.end());
      if (ls != rs) fail(ab, "content preservation");
      if (!detail::same_ladder_elems(ladder_decomp(p, a, b),
                                     ladder_decomp(p, cd.a, cd.b))) {
        fail(ab, "ladder decomposition invariance");
      }
      if (k == l && (cd.a != a || cd.b != b)) fail(ab, "identity on equal lengths");
      auto cs = content_space_cached(p, Content(left), IdealKind::plac);
      if (!congruent(*cs, NCElement::monomial(p, left),
                     NCElement::monomial(p, right))) {
        fail(ab, "word congruence");
      }
    }
  }
  return rep;
}

}  // namespace poschur
