#pragma once

// Ladder decomposition of a pair of chains.
//
// Given two strictly decreasing chains C and D of a poset (each listed
// largest element first), form the bipartite graph on their positions whose
// edges join elements that are incomparable or equal.  Its connected
// components are called ladders.  For a (3+1)-free poset every ladder is a
// path or a 4-cycle, its two sides differ in size by at most one, and the
// ladders are totally ordered by the poset.  Ladders drive the two-column
// tableau criterion and the chain-commutation involution (see rmatrix.hpp).

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "errors.hpp"
#include "poset.hpp"
#include "words.hpp"

namespace poschur {

// Which side of a ladder holds more elements: `left` means the first chain
// contributes strictly more, `right` the second chain.
enum class Balance { balanced, left, right };

inline std::string balance_name(Balance b) {
  switch (b) {
    case Balance::balanced:
      return "balanced";
    case Balance::left:
      return "left";
    default:
      return "right";
  }
}

// One connected component of the incomparable-or-equal graph on two chains.
// Both side lists are strictly decreasing; `elems` merges them into one list,
// largest first, ordering incomparable neighbours by descending label (an
// element shared by the two chains appears twice).
struct Ladder {
  std::vector<int> from_c;
  std::vector<int> from_d;
  std::vector<int> elems;
  Balance balance = Balance::balanced;
};

// Ladders listed smallest first: every element of ladders[i] lies strictly
// below every element of ladders[i+1].
struct LadderDecomp {
  std::vector<Ladder> ladders;

  int size() const { return static_cast<int>(ladders.size()); }
  // 1-based access matching the H_1 (smallest) .. H_m (largest) labelling.
  const Ladder& h(int i) const { return ladders.at(static_cast<size_t>(i) - 1); }
};

inline bool is_decreasing_chain(const Poset& p, const Word& w) {
  for (int a : w) {
    if (a < 1 || a > p.n()) return false;
  }
  for (size_t i = 0; i + 1 < w.size(); ++i) {
    if (!p.less(w[i + 1], w[i])) return false;
  }
  return true;
}

inline void require_decreasing_chain(const Poset& p, const Word& w,
                                     const char* name) {
  if (!is_decreasing_chain(p, w)) {
    throw ParamError(std::string(name) +
                     " is not a strictly decreasing chain of the poset");
  }
}

inline LadderDecomp ladder_decomp(const Poset& p, const Word& c,
                                  const Word& d) {
  require_decreasing_chain(p, c, "first chain");
  require_decreasing_chain(p, d, "second chain");
  const int k = static_cast<int>(c.size());
  const int l = static_cast<int>(d.size());

  // Union-find over chain positions: 0..k-1 are C positions, k..k+l-1 are D
  // positions.  inc() is reflexive, so equal elements are joined as well.
  std::vector<int> parent(static_cast<size_t>(k + l));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] =
          parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  };
  auto unite = [&](int x, int y) {
    x = find(x);
    y = find(y);
    if (x != y) parent[static_cast<size_t>(std::max(x, y))] = std::min(x, y);
  };
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < l; ++j) {
      if (p.inc(c[static_cast<size_t>(i)], d[static_cast<size_t>(j)])) {
        unite(i, k + j);
      }
    }
  }

  LadderDecomp out;
  std::vector<int> root_to_idx(static_cast<size_t>(k + l), -1);
  for (int pos = 0; pos < k + l; ++pos) {
    int r = find(pos);
    if (root_to_idx[static_cast<size_t>(r)] < 0) {
      root_to_idx[static_cast<size_t>(r)] = out.size();
      out.ladders.emplace_back();
    }
    Ladder& L = out.ladders[static_cast<size_t>(root_to_idx[static_cast<size_t>(r)])];
    if (pos < k) {
      L.from_c.push_back(c[static_cast<size_t>(pos)]);
    } else {
      L.from_d.push_back(d[static_cast<size_t>(pos - k)]);
    }
  }
  for (Ladder& L : out.ladders) {
    // Two-pointer merge of the decreasing side lists; the poset order decides
    // where it can, descending label breaks ties between incomparable heads.
    size_t ci = 0, di = 0;
    L.elems.reserve(L.from_c.size() + L.from_d.size());
    while (ci < L.from_c.size() || di < L.from_d.size()) {
      bool take_d;
      if (ci == L.from_c.size()) {
        take_d = true;
      } else if (di == L.from_d.size()) {
        take_d = false;
      } else {
        int x = L.from_c[ci], y = L.from_d[di];
        take_d = p.less(x, y) || (p.inc(x, y) && y > x);
      }
      L.elems.push_back(take_d ? L.from_d[di++] : L.from_c[ci++]);
    }
    if (L.from_c.size() > L.from_d.size()) {
      L.balance = Balance::left;
    } else if (L.from_c.size() < L.from_d.size()) {
      L.balance = Balance::right;
    } else {
      L.balance = Balance::balanced;
    }
  }

  // Distinct ladders must be totally ordered: all cross pairs strictly
  // comparable, in a consistent direction.  Verify before sorting.
  for (size_t s = 0; s < out.ladders.size(); ++s) {
    for (size_t t = s + 1; t < out.ladders.size(); ++t) {
      int dir = 0;
      for (int x : out.ladders[s].elems) {
        for (int y : out.ladders[t].elems) {
          int e = p.less(x, y) ? 1 : (p.less(y, x) ? -1 : 0);
          if (e == 0 || (dir != 0 && e != dir)) {
            throw ParamError("chain pair has no totally ordered ladder decomposition");
          }
          dir = e;
        }
      }
    }
  }
  std::sort(out.ladders.begin(), out.ladders.end(),
            [&](const Ladder& x, const Ladder& y) {
              return p.less(x.elems.front(), y.elems.front());
            });
  return out;
}

// True when the ladder's incomparable-or-equal graph is a single path or a
// 4-cycle and the two sides differ in size by at most one.
inline bool ladder_is_path_or_4cycle(const Poset& p, const Ladder& L) {
  const auto& a = L.from_c;
  const auto& b = L.from_d;
  const int na = static_cast<int>(a.size());
  const int nb = static_cast<int>(b.size());
  if (std::abs(na - nb) > 1) return false;
  int edges = 0;
  std::vector<int> deg(static_cast<size_t>(na + nb), 0);
  for (int i = 0; i < na; ++i) {
    for (int j = 0; j < nb; ++j) {
      if (p.inc(a[static_cast<size_t>(i)], b[static_cast<size_t>(j)])) {
        ++edges;
        ++deg[static_cast<size_t>(i)];
        ++deg[static_cast<size_t>(na + j)];
      }
    }
  }
  const int verts = na + nb;
  if (verts == 1) return true;  // isolated vertex: the one-point path
  std::vector<char> seen(static_cast<size_t>(verts), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w = 0; w < verts; ++w) {
      bool va = v < na, wa = w < na;
      if (va == wa || seen[static_cast<size_t>(w)]) continue;
      int x = va ? a[static_cast<size_t>(v)] : b[static_cast<size_t>(v - na)];
      int y = wa ? a[static_cast<size_t>(w)] : b[static_cast<size_t>(w - na)];
      if (!p.inc(x, y)) continue;
      seen[static_cast<size_t>(w)] = 1;
      ++reached;
      stack.push_back(w);
    }
  }
  if (reached != verts) return false;
  int max_deg = *std::max_element(deg.begin(), deg.end());
  if (edges == verts - 1 && max_deg <= 2) return true;  // connected tree: path
  return verts == 4 && edges == 4 && max_deg == 2;      // 4-cycle
}

}  // namespace poschur
