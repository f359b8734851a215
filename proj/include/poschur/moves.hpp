#pragma once

#include <array>
#include <optional>
#include <vector>

#include "poschur/words.hpp"

namespace poschur {

// The three local three-letter rewrites (on a window u, v, x at positions
// i-1, i, i+1) that generate the plactic-style ideal:
//   (1) (b,a,c) <-> (b,c,a)  when a below b, b weakly-below c, a below c;
//   (2) (c,a,b) <-> (a,c,b)  when a weakly-below b, b below c, a below c;
//   (3) (c,a,b) <-> (b,c,a)  when a,b and b,c incomparable-distinct, a below c.
// A word has at most one partner per position; it has exactly one iff the
// descent set meets {i-1, i} in exactly one position.
namespace detail {

// All windows reachable from (x,y,z) by one rewrite.
inline void window_partners(const Poset& p, int x, int y, int z,
                            std::vector<std::array<int, 3>>& out,
                            bool type3_only = false) {
  out.clear();
  auto push = [&out](int a, int b, int c) {
    std::array<int, 3> w{a, b, c};
    for (const auto& v : out) {
      if (v == w) return;
    }
    out.push_back(w);
  };
  if (!type3_only) {
    // (1) forward: (x,y,z) = (b,a,c).
    if (p.less(y, x) && p.wle(x, z) && p.less(y, z)) push(x, z, y);
    // (1) backward: (x,y,z) = (b,c,a).
    if (p.less(z, x) && p.wle(x, y) && p.less(z, y)) push(x, z, y);
    // (2) forward: (x,y,z) = (c,a,b).
    if (p.wle(y, z) && p.less(z, x) && p.less(y, x)) push(y, x, z);
    // (2) backward: (x,y,z) = (a,c,b).
    if (p.wle(x, z) && p.less(z, y) && p.less(x, y)) push(y, x, z);
  }
  // (3) forward: (x,y,z) = (c,a,b).
  if (p.incdot(y, z) && p.incdot(z, x) && p.less(y, x)) push(z, x, y);
  // (3) backward: (x,y,z) = (b,c,a).
  if (p.incdot(z, x) && p.incdot(x, y) && p.less(z, y)) push(y, z, x);
}

}  // namespace detail

// One labeled neighbor of a word under a local move.
struct Move {
  Word word;
  int position;  // 1-based: window middle for 3-letter moves, left letter for swaps
  char type;     // 'k' = three-letter rewrite, 'c' = comparable adjacent swap
};

// Neighbors under the three-letter rewrites; at most one per position.
inline std::vector<Move> knuth_moves(const Poset& p, const Word& w) {
  std::vector<Move> out;
  std::vector<std::array<int, 3>> windows;
  for (size_t o = 0; o + 3 <= w.size(); ++o) {
    detail::window_partners(p, w[o], w[o + 1], w[o + 2], windows);
    for (const auto& win : windows) {
      Word v = w;
      v[o] = win[0];
      v[o + 1] = win[1];
      v[o + 2] = win[2];
      out.push_back(Move{std::move(v), static_cast<int>(o) + 2, 'k'});
    }
  }
  return out;
}

// Neighbors in the coarser graph: type-(3) rewrites plus adjacent swaps of
// comparable letters.
inline std::vector<Move> h_moves(const Poset& p, const Word& w) {
  std::vector<Move> out;
  for (size_t o = 0; o + 2 <= w.size(); ++o) {
    if (p.comparable(w[o], w[o + 1])) {
      Word v = w;
      std::swap(v[o], v[o + 1]);
      out.push_back(Move{std::move(v), static_cast<int>(o) + 1, 'c'});
    }
  }
  std::vector<std::array<int, 3>> windows;
  for (size_t o = 0; o + 3 <= w.size(); ++o) {
    detail::window_partners(p, w[o], w[o + 1], w[o + 2], windows,
                            /*type3_only=*/true);
    for (const auto& win : windows) {
      Word v = w;
      v[o] = win[0];
      v[o + 1] = win[1];
      v[o + 2] = win[2];
      out.push_back(Move{std::move(v), static_cast<int>(o) + 2, 'k'});
    }
  }
  return out;
}

// Neighbors under all adjacent transpositions (the fully-commutative graph);
// only moves that change the word are reported.
inline std::vector<Move> pol_moves(const Poset& /*p*/, const Word& w) {
  std::vector<Move> out;
  for (size_t o = 0; o + 2 <= w.size(); ++o) {
    if (w[o] == w[o + 1]) continue;
    Word v = w;
    std::swap(v[o], v[o + 1]);
    out.push_back(Move{std::move(v), static_cast<int>(o) + 1, 'c'});
  }
  return out;
}

}  // namespace poschur
