#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "poschur/errors.hpp"
#include "poschur/poly.hpp"
#include "poschur/poset.hpp"
#include "poschur/symfun.hpp"
#include "poschur/words.hpp"

namespace poschur {

// Element of the free algebra on letters u_1..u_n of a poset (with ZZ[t]
// coefficients): a sparse map word -> coefficient. Products concatenate; no
// quotient is applied at this layer.
struct NCElement {
  Poset poset;
  std::map<Word, PolyT> terms;

  NCElement() = default;
  explicit NCElement(Poset p) : poset(std::move(p)) {}

  static NCElement unit(const Poset& p) {
    NCElement x(p);
    x.terms.emplace(Word{}, PolyT(1));
    return x;
  }
  static NCElement monomial(const Poset& p, const Word& w,
                            PolyT c = PolyT(1)) {
    NCElement x(p);
    if (!c.is_zero()) x.terms.emplace(w, std::move(c));
    return x;
  }

  bool is_zero() const { return terms.empty(); }

  void add(const Word& w, const PolyT& c) {
    if (c.is_zero()) return;
    auto it = terms.find(w);
    if (it == terms.end()) {
      terms.emplace(w, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms.erase(it);
    }
  }
  PolyT coeff(const Word& w) const {
    auto it = terms.find(w);
    return it == terms.end() ? PolyT() : it->second;
  }

  NCElement& operator+=(const NCElement& o) {
    require_same_poset(o);
    for (const auto& [w, c] : o.terms) add(w, c);
    return *this;
  }
  NCElement& operator-=(const NCElement& o) {
    require_same_poset(o);
    for (const auto& [w, c] : o.terms) add(w, -c);
    return *this;
  }
  friend NCElement operator+(NCElement a, const NCElement& b) { return a += b; }
  friend NCElement operator-(NCElement a, const NCElement& b) { return a -= b; }
  friend NCElement operator*(const NCElement& a, const NCElement& b) {
    a.require_same_poset(b);
    NCElement out(a.poset);
    for (const auto& [w, c] : a.terms) {
      for (const auto& [v, d] : b.terms) {
        Word wv = w;
        wv.insert(wv.end(), v.begin(), v.end());
        out.add(wv, c * d);
      }
    }
    return out;
  }
  friend NCElement operator*(const PolyT& s, NCElement a) {
    if (s.is_zero()) {
      a.terms.clear();
      return a;
    }
    for (auto& [w, c] : a.terms) c *= s;
    return a;
  }
  friend NCElement operator-(const NCElement& a) { return PolyT(-1) * a; }
  friend bool operator==(const NCElement& a, const NCElement& b) {
    return a.poset == b.poset && a.terms == b.terms;
  }

  void require_same_poset(const NCElement& o) const {
    // An empty-poset element acts as a scalar container; otherwise the two
    // operands must live over the same letters.
    if (!(poset == o.poset)) {
      throw ParamError("operands live over different posets");
    }
  }
};

// Elementary function: sum of u-monomials of strictly decreasing k-chains in
// the support, each listed from its largest element down.
inline NCElement e_p(const Poset& p, int k, const std::vector<int>& support) {
  NCElement out(p);
  if (k == 0) return NCElement::unit(p);
  if (k < 0) return out;
  for (const auto& ch : chains(p, support, k)) out.add(ch, PolyT(1));
  return out;
}

inline NCElement e_p(const Poset& p, int k) {
  return e_p(p, k, all_elements(p));
}

// Complete homogeneous function: sum over words w_1..w_l in which no letter
// is strictly above its successor (repeats allowed).
inline NCElement h_p(const Poset& p, int ell) {
  NCElement out(p);
  if (ell < 0) return out;
  Word w;
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(w.size()) == ell) {
      out.add(w, PolyT(1));
      return;
    }
    for (int z = 1; z <= p.n(); ++z) {
      if (!w.empty() && p.less(z, w.back())) continue;
      w.push_back(z);
      self(self);
      w.pop_back();
    }
  };
  rec(rec);
  return out;
}

// Alternating Newton-type identity: sum_{k=0..m} (-1)^k h_{m-k} e_k == 0.
inline bool newton_check(const Poset& p, int m) {
  if (m < 1) throw ParamError("newton_check requires m >= 1");
  NCElement acc(p);
  for (int k = 0; k <= m; ++k) {
    NCElement term = h_p(p, m - k) * e_p(p, k);
    acc += (k % 2 == 0 ? PolyT(1) : PolyT(-1)) * term;
  }
  return acc.is_zero();
}

namespace detail {

inline int perm_sign(const std::vector<int>& pi) {
  int inv = 0;
  for (size_t i = 0; i < pi.size(); ++i) {
    for (size_t j = i + 1; j < pi.size(); ++j) {
      if (pi[i] > pi[j]) ++inv;
    }
  }
  return inv % 2 == 0 ? 1 : -1;
}

}  // namespace detail

// Column-flagged Schur function: the signed sum over permutations pi of
// products of elementary factors e_{alpha_j + pi(j) - j} on supports Z_j,
// factor j = 1 leftmost.
inline NCElement j_flagged(const Poset& p, const std::vector<int>& alpha,
                           const std::vector<std::vector<int>>& Z) {
  if (alpha.size() != Z.size()) {
    throw ParamError("j_flagged: alpha and Z must have equal length");
  }
  int ell = static_cast<int>(alpha.size());
  NCElement out(p);
  std::vector<int> pi(static_cast<size_t>(ell));
  for (int i = 0; i < ell; ++i) pi[static_cast<size_t>(i)] = i + 1;
  std::sort(pi.begin(), pi.end());
  do {
    PolyT sign(detail::perm_sign(pi));
    NCElement prod = NCElement::unit(p);
    bool zero = false;
    for (int j = 0; j < ell && !zero; ++j) {
      int deg = alpha[static_cast<size_t>(j)] + pi[static_cast<size_t>(j)] -
                (j + 1);
      NCElement f = e_p(p, deg, Z[static_cast<size_t>(j)]);
      if (f.is_zero()) zero = true;
      prod = prod * f;
    }
    if (!zero) out += sign * prod;
  } while (std::next_permutation(pi.begin(), pi.end()));
  return out;
}

// Unflagged Schur function: flags all equal to the whole ground set, column
// lengths given by the conjugate shape.
inline NCElement j_p(const Poset& p, const Partition& lam) {
  Partition conj = transpose(lam);
  std::vector<std::vector<int>> Z(conj.size(), all_elements(p));
  return j_flagged(p, conj, Z);
}

// Monomial function via the inverse Kostka matrix.
inline NCElement m_p(const Poset& p, const Partition& lam) {
  NCElement out(p);
  for (const auto& mu : partitions_of(weight(lam))) {
    long long c = inverse_kostka(lam, mu);
    if (c != 0) out += PolyT(c) * j_p(p, mu);
  }
  return out;
}

// Cylindrical Schur function: the doubly-indexed signed sum over integer
// vectors a with sum 0 and permutations pi, with factor degrees
// a_i(k+m) + conj_i + pi(i) - i. Finite because elementary functions vanish
// outside degrees 0..|P|; the window for each a_i is recomputed per call.
inline NCElement j_cyl(const Poset& p, const Partition& lam, int m) {
  Partition conj = transpose(lam);
  int k = static_cast<int>(conj.size());
  if (k == 0) return NCElement::unit(p);
  if (m < conj.front() - conj.back() || m > conj.front()) {
    throw ParamError("cylindrical offset m must lie in [conj_1 - conj_k, conj_1]");
  }
  int period = k + m;
  int n = p.n();
  // Per-coordinate windows: a_i feasible iff some pi(i) in 1..k puts the
  // factor degree inside [0, n].
  std::vector<int> lo(static_cast<size_t>(k)), hi(static_cast<size_t>(k));
  auto floor_div = [](int a, int b) {
    return a >= 0 ? a / b : -((-a + b - 1) / b);
  };
  auto ceil_div = [](int a, int b) {
    return a >= 0 ? (a + b - 1) / b : -((-a) / b);
  };
  for (int i = 1; i <= k; ++i) {
    int ci = conj[static_cast<size_t>(i - 1)];
    // Need 0 <= a_i*period + ci + pi - i <= n for some pi in [1, k].
    lo[static_cast<size_t>(i - 1)] = ceil_div(0 - ci - k + i, period);
    hi[static_cast<size_t>(i - 1)] = floor_div(n - ci - 1 + i, period);
  }
  NCElement out(p);
  std::vector<int> a(static_cast<size_t>(k), 0);
  std::vector<int> pi(static_cast<size_t>(k));
  auto emit = [&]() {
    for (int i = 0; i < k; ++i) pi[static_cast<size_t>(i)] = i + 1;
    do {
      PolyT sign(detail::perm_sign(pi));
      NCElement prod = NCElement::unit(p);
      bool zero = false;
      for (int j = 0; j < k && !zero; ++j) {
        int deg = a[static_cast<size_t>(j)] * period +
                  conj[static_cast<size_t>(j)] + pi[static_cast<size_t>(j)] -
                  (j + 1);
        if (deg < 0 || deg > n) {
          zero = true;
          break;
        }
        NCElement f = e_p(p, deg);
        if (f.is_zero()) zero = true;
        prod = prod * f;
      }
      if (!zero) out += sign * prod;
    } while (std::next_permutation(pi.begin(), pi.end()));
  };
  auto rec = [&](auto&& self, int i, int partial) -> void {
    if (i == k) {
      if (partial == 0) emit();
      return;
    }
    // Remaining coordinates must be able to cancel the partial sum.
    int rest_lo = 0, rest_hi = 0;
    for (int j = i + 1; j < k; ++j) {
      rest_lo += lo[static_cast<size_t>(j)];
      rest_hi += hi[static_cast<size_t>(j)];
    }
    for (int v = lo[static_cast<size_t>(i)]; v <= hi[static_cast<size_t>(i)];
         ++v) {
      int s = partial + v;
      if (i + 1 == k) {
        if (s == 0) {
          a[static_cast<size_t>(i)] = v;
          emit();
        }
        continue;
      }
      if (-s < rest_lo || -s > rest_hi) continue;
      a[static_cast<size_t>(i)] = v;
      self(self, i + 1, s);
    }
  };
  rec(rec, 0, 0);
  return out;
}

// Sum of all words of one content, weighted by t^{inversions} when asked.
inline NCElement w_beta(const Nuio& nu, const Content& beta, bool with_t) {
  NCElement out(nu.poset);
  for_each_word_of_content(beta, [&](const Word& w) {
    out.add(w, with_t ? PolyT::t_power(inv_p(nu, w)) : PolyT(1));
  });
  return out;
}

inline NCElement w_beta(const Poset& p, const Content& beta, bool with_t) {
  if (!with_t) {
    NCElement out(p);
    for_each_word_of_content(beta,
                             [&](const Word& w) { out.add(w, PolyT(1)); });
    return out;
  }
  std::optional<Nuio> nu = is_nuio(p);
  if (!nu.has_value()) {
    throw NotNuioError("t-weights require a compatible total labeling");
  }
  return w_beta(*nu, beta, with_t);
}

// Natural pairing in which word monomials are self-dual.
inline PolyT pair(const NCElement& f, const NCElement& gamma) {
  f.require_same_poset(gamma);
  PolyT out;
  const auto& small = f.terms.size() <= gamma.terms.size() ? f : gamma;
  const auto& large = f.terms.size() <= gamma.terms.size() ? gamma : f;
  for (const auto& [w, c] : small.terms) {
    auto it = large.terms.find(w);
    if (it != large.terms.end()) out += c * it->second;
  }
  return out;
}

// Quasisymmetric generating function: each word contributes its coefficient
// on the descent-set fundamental function.
inline QSymExpr f_gamma(const NCElement& gamma) {
  QSymExpr q;
  if (gamma.terms.empty()) return q;
  size_t len = gamma.terms.begin()->first.size();
  for (const auto& [w, c] : gamma.terms) {
    if (w.size() != len) {
      throw MixedDegreeError("words of lengths " + std::to_string(len) +
                             " and " + std::to_string(w.size()));
    }
  }
  q.degree = static_cast<int>(len);
  for (const auto& [w, c] : gamma.terms) {
    QSymExpr f = fundamental(static_cast<int>(len), des_p(gamma.poset, w));
    for (const auto& [comp, v] : f.terms) q.add(comp, v * c);
  }
  return q;
}

}  // namespace poschur
