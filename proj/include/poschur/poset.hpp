#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "poschur/errors.hpp"

namespace poschur {

// Finite strict partial order on elements 1..n. `less(a, b)` is the strict
// order relation "a below b". Three derived relations are used throughout:
//   inc(a, b)      incomparable-or-equal (includes a == b),
//   incdot(a, b)   incomparable and distinct,
//   wle(a, b)      "weakly less": less(a, b) or inc(a, b), i.e. !less(b, a).
class Poset {
 public:
  Poset() = default;
  explicit Poset(int n) : n_(n), lt_(static_cast<size_t>(n) * n, 0) {}

  int n() const { return n_; }

  bool less(int a, int b) const { return lt_[idx(a, b)] != 0; }
  bool comparable(int a, int b) const { return less(a, b) || less(b, a); }
  bool inc(int a, int b) const { return !less(a, b) && !less(b, a); }
  bool incdot(int a, int b) const { return a != b && inc(a, b); }
  bool wle(int a, int b) const { return !less(b, a); }

  void set_less(int a, int b) { lt_[idx(a, b)] = 1; }

  // Strict relations as sorted (a, b) pairs with a below b.
  std::vector<std::pair<int, int>> relations() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 1; a <= n_; ++a) {
      for (int b = 1; b <= n_; ++b) {
        if (less(a, b)) out.emplace_back(a, b);
      }
    }
    return out;
  }

  friend bool operator==(const Poset& x, const Poset& y) {
    return x.n_ == y.n_ && x.lt_ == y.lt_;
  }
  friend bool operator<(const Poset& x, const Poset& y) {
    if (x.n_ != y.n_) return x.n_ < y.n_;
    return x.lt_ < y.lt_;
  }

 private:
  size_t idx(int a, int b) const {
    return static_cast<size_t>(a - 1) * n_ + (b - 1);
  }
  int n_ = 0;
  std::vector<char> lt_;
};

// A poset together with a compatible total order ("natural unit interval
// order" witness). `order` lists the elements from smallest to largest;
// `rank(a)` is the position of a in that list (0-based).
struct Nuio {
  Poset poset;
  std::vector<int> order;

  int rank(int a) const { return rank_[static_cast<size_t>(a) - 1]; }
  bool tlt(int a, int b) const { return rank(a) < rank(b); }  // total order <

  Nuio() = default;
  Nuio(Poset p, std::vector<int> ord)
      : poset(std::move(p)), order(std::move(ord)) {
    rank_.assign(order.size(), 0);
    for (size_t i = 0; i < order.size(); ++i) {
      rank_[static_cast<size_t>(order[i]) - 1] = static_cast<int>(i);
    }
  }

 private:
  std::vector<int> rank_;
};

// Multiset of poset elements with positive multiplicities, kept sorted.
class Content {
 public:
  Content() = default;
  explicit Content(const std::vector<int>& letters) {
    std::map<int, int> m;
    for (int x : letters) ++m[x];
    items_.assign(m.begin(), m.end());
  }
  static Content from_pairs(std::vector<std::pair<int, int>> pairs) {
    Content c;
    std::sort(pairs.begin(), pairs.end());
    c.items_ = std::move(pairs);
    return c;
  }

  const std::vector<std::pair<int, int>>& items() const { return items_; }
  int size() const {
    int s = 0;
    for (const auto& [e, m] : items_) s += m;
    return s;
  }
  int multiplicity(int elem) const {
    for (const auto& [e, m] : items_) {
      if (e == elem) return m;
    }
    return 0;
  }
  std::vector<int> letters() const {
    std::vector<int> out;
    for (const auto& [e, m] : items_) out.insert(out.end(), m, e);
    return out;
  }
  std::string str() const {
    std::string s;
    for (int x : letters()) {
      if (!s.empty()) s += ',';
      s += std::to_string(x);
    }
    return s;
  }

  friend bool operator==(const Content& a, const Content& b) {
    return a.items_ == b.items_;
  }
  friend bool operator<(const Content& a, const Content& b) {
    return a.items_ < b.items_;
  }

 private:
  std::vector<std::pair<int, int>> items_;
};

// Transitive closure of the given strict relations; rejects input whose
// closure would violate irreflexivity or antisymmetry.
inline Poset from_relations(int n, const std::vector<std::pair<int, int>>& rel) {
  Poset p(n);
  for (auto [a, b] : rel) {
    if (a < 1 || a > n || b < 1 || b > n) {
      throw ParamError("relation (" + std::to_string(a) + "," +
                       std::to_string(b) + ") out of range 1.." +
                       std::to_string(n));
    }
    p.set_less(a, b);
  }
  // Floyd-Warshall closure.
  for (int k = 1; k <= n; ++k) {
    for (int a = 1; a <= n; ++a) {
      if (!p.less(a, k)) continue;
      for (int b = 1; b <= n; ++b) {
        if (p.less(k, b)) p.set_less(a, b);
      }
    }
  }
  for (int a = 1; a <= n; ++a) {
    if (p.less(a, a)) {
      throw CycleError("element " + std::to_string(a) +
                       " is below itself after closure");
    }
    for (int b = a + 1; b <= n; ++b) {
      if (p.less(a, b) && p.less(b, a)) {
        throw CycleError("elements " + std::to_string(a) + " and " +
                         std::to_string(b) + " are below each other");
      }
    }
  }
  return p;
}

// The poset on {1..n} with a below c exactly when c - a >= k, carrying the
// identity total order (the standard family of natural unit interval orders).
inline Nuio p_k(int k, int n) {
  if (k < 1 || n < 1) throw ParamError("p_k requires k >= 1 and n >= 1");
  Poset p(n);
  for (int a = 1; a <= n; ++a) {
    for (int c = a + k; c <= n; ++c) p.set_less(a, c);
  }
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i + 1;
  return Nuio(std::move(p), std::move(order));
}

// True iff no four elements induce a 3-chain plus an element incomparable to
// all three.
inline bool is_31_free(const Poset& p) {
  int n = p.n();
  for (int a = 1; a <= n; ++a) {
    for (int b = 1; b <= n; ++b) {
      if (!p.less(a, b)) continue;
      for (int c = 1; c <= n; ++c) {
        if (!p.less(b, c)) continue;
        for (int d = 1; d <= n; ++d) {
          if (d == a || d == b || d == c) continue;
          if (p.inc(d, a) && p.inc(d, b) && p.inc(d, c)) return false;
        }
      }
    }
  }
  return true;
}

namespace detail {

// Checks the two compatibility conditions of a total order `ord` (elements
// smallest first) against p:
//  (i)  a below b implies a before b;
//  (ii) for distinct a, b, c with a below c, a/b and b/c incomparable:
//       a before b before c.
inline bool order_is_compatible(const Poset& p, const std::vector<int>& ord) {
  int n = p.n();
  std::vector<int> rank(static_cast<size_t>(n) + 1, 0);
  for (int i = 0; i < n; ++i) rank[static_cast<size_t>(ord[i])] = i;
  for (int a = 1; a <= n; ++a) {
    for (int b = 1; b <= n; ++b) {
      if (p.less(a, b) && rank[a] > rank[b]) return false;
    }
  }
  for (int a = 1; a <= n; ++a) {
    for (int c = 1; c <= n; ++c) {
      if (!p.less(a, c)) continue;
      for (int b = 1; b <= n; ++b) {
        if (b == a || b == c) continue;
        if (p.incdot(a, b) && p.incdot(b, c) &&
            !(rank[a] < rank[b] && rank[b] < rank[c])) {
          return false;
        }
      }
    }
  }
  return true;
}

inline bool nuio_search(const Poset& p, std::vector<int>& ord,
                        std::vector<char>& used) {
  int n = p.n();
  if (static_cast<int>(ord.size()) == n) return order_is_compatible(p, ord);
  for (int x = 1; x <= n; ++x) {
    if (used[x]) continue;
    // Condition (i) pruning: everything below x must already be placed.
    bool ok = true;
    for (int y = 1; y <= n && ok; ++y) {
      if (p.less(y, x) && !used[y]) ok = false;
    }
    if (!ok) continue;
    used[x] = 1;
    ord.push_back(x);
    if (nuio_search(p, ord, used)) return true;
    ord.pop_back();
    used[x] = 0;
  }
  return false;
}

}  // namespace detail

// Searches for a compatible total order; returns the lexicographically
// smallest witness, or nothing.
inline std::optional<Nuio> is_nuio(const Poset& p) {
  std::vector<int> ord;
  std::vector<char> used(static_cast<size_t>(p.n()) + 1, 0);
  if (detail::nuio_search(p, ord, used)) return Nuio(p, ord);
  return std::nullopt;
}

// Result of replacing each element a by multiplicity(a) mutually incomparable
// copies. `base[v-1]` is the original element of copy v; copies of one
// element are numbered consecutively, bases in ascending order.
struct BlowupResult {
  Poset poset;
  std::vector<int> base;
  // Present iff the input carried a total order: copies of one element are
  // consecutive ascending, and copies of distinct elements compare like their
  // bases.
  std::optional<Nuio> nuio;
};

inline BlowupResult blowup_with_map(const Poset& p, const Content& beta,
                                    const Nuio* nuio = nullptr) {
  for (const auto& [e, m] : beta.items()) {
    if (e < 1 || e > p.n()) {
      throw ParamError("content element " + std::to_string(e) +
                       " outside poset");
    }
    (void)m;
  }
  BlowupResult out;
  std::vector<int> base;
  for (const auto& [e, m] : beta.items()) base.insert(base.end(), m, e);
  int N = static_cast<int>(base.size());
  Poset q(N);
  for (int u = 1; u <= N; ++u) {
    for (int v = 1; v <= N; ++v) {
      if (p.less(base[u - 1], base[v - 1])) q.set_less(u, v);
    }
  }
  out.poset = q;
  out.base = base;
  if (nuio != nullptr) {
    std::vector<int> ids(N);
    for (int i = 0; i < N; ++i) ids[i] = i + 1;
    std::stable_sort(ids.begin(), ids.end(), [&](int u, int v) {
      int ru = nuio->rank(base[u - 1]);
      int rv = nuio->rank(base[v - 1]);
      if (ru != rv) return ru < rv;
      return u < v;  // copies of one element ascend by copy index
    });
    out.nuio = Nuio(q, ids);
  }
  return out;
}

inline Poset blowup(const Poset& p, const Content& beta) {
  return blowup_with_map(p, beta).poset;
}

inline Nuio blowup(const Nuio& nu, const Content& beta) {
  return *blowup_with_map(nu.poset, beta, &nu).nuio;
}

// All strictly decreasing chains of length k with elements in `support`,
// written largest first: (a_1, ..., a_k) with each a_{i+1} below a_i.
// Output is in lexicographic order; k = 0 yields the single empty chain.
inline std::vector<std::vector<int>> chains(const Poset& p,
                                            const std::vector<int>& support,
                                            int k) {
  std::vector<std::vector<int>> out;
  if (k < 0) return out;
  std::vector<int> supp = support;
  std::sort(supp.begin(), supp.end());
  supp.erase(std::unique(supp.begin(), supp.end()), supp.end());
  std::vector<int> cur;
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int x : supp) {
      if (!cur.empty() && !p.less(x, cur.back())) continue;
      cur.push_back(x);
      self(self);
      cur.pop_back();
    }
  };
  rec(rec);
  return out;
}

inline std::vector<int> all_elements(const Poset& p) {
  std::vector<int> v(static_cast<size_t>(p.n()));
  for (int i = 0; i < p.n(); ++i) v[static_cast<size_t>(i)] = i + 1;
  return v;
}

inline Poset dual(const Poset& p) {
  Poset q(p.n());
  for (int a = 1; a <= p.n(); ++a) {
    for (int b = 1; b <= p.n(); ++b) {
      if (p.less(a, b)) q.set_less(b, a);
    }
  }
  return q;
}

}  // namespace poschur
