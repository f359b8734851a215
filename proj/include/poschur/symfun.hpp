#pragma once

#include <algorithm>
#include <cassert>
#include <map>
#include <string>
#include <vector>

#include "poschur/errors.hpp"
#include "poschur/poly.hpp"

namespace poschur {

// Partitions are weakly decreasing positive parts; compositions are
// sequences of positive parts.
using Partition = std::vector<int>;
using Composition = std::vector<int>;

inline int weight(const std::vector<int>& parts) {
  int s = 0;
  for (int x : parts) s += x;
  return s;
}

inline bool is_partition(const Partition& lam) {
  for (size_t i = 0; i + 1 < lam.size(); ++i) {
    if (lam[i] < lam[i + 1]) return false;
  }
  return lam.empty() || lam.back() >= 1;
}

inline Partition transpose(const Partition& lam) {
  Partition out;
  if (lam.empty()) return out;
  out.assign(static_cast<size_t>(lam[0]), 0);
  for (int part : lam) {
    for (int j = 0; j < part; ++j) ++out[static_cast<size_t>(j)];
  }
  return out;
}

inline Partition sort_to_partition(const Composition& c) {
  Partition p;
  for (int x : c) {
    if (x > 0) p.push_back(x);
  }
  std::sort(p.begin(), p.end(), std::greater<int>());
  return p;
}

inline std::string parts_str(const std::vector<int>& parts) {
  std::string s = "[";
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts[i]);
  }
  return s + "]";
}

// All partitions of n in the canonical order used for triangular solves:
// lexicographically descending, which refines dominance ((n) first, (1^n)
// last). Asserted against the Kostka matrix at table-build time.
inline const std::vector<Partition>& partitions_of(int n) {
  static std::map<int, std::vector<Partition>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<Partition> out;
  Partition cur;
  auto rec = [&](auto&& self, int remaining, int maxpart) -> void {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    for (int part = std::min(remaining, maxpart); part >= 1; --part) {
      cur.push_back(part);
      self(self, remaining - part, part);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return cache.emplace(n, std::move(out)).first->second;
}

inline std::vector<Composition> compositions_of(int n) {
  std::vector<Composition> out;
  if (n == 0) {
    out.push_back({});
    return out;
  }
  Composition cur;
  auto rec = [&](auto&& self, int remaining) -> void {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    for (int part = 1; part <= remaining; ++part) {
      cur.push_back(part);
      self(self, remaining - part);
      cur.pop_back();
    }
  };
  rec(rec, n);
  return out;
}

// Number of semistandard Young tableaux of shape lambda and content mu
// (rows weakly increase, columns strictly increase), by direct enumeration.
inline long long kostka(const Partition& lam, const Partition& mu) {
  if (weight(lam) != weight(mu)) {
    throw ParamError("kostka: |lambda| != |mu|");
  }
  size_t rows = lam.size();
  std::vector<std::vector<int>> t(rows);
  for (size_t r = 0; r < rows; ++r) t[r].assign(static_cast<size_t>(lam[r]), 0);
  std::vector<int> avail(mu.begin(), mu.end());
  long long count = 0;
  auto rec = [&](auto&& self, size_t r, size_t c) -> void {
    if (r == rows) {
      ++count;
      return;
    }
    size_t nr = r, nc = c + 1;
    if (nc >= t[r].size()) {
      nr = r + 1;
      nc = 0;
    }
    int lo = c > 0 ? t[r][c - 1] : 1;              // row weakly increasing
    if (r > 0) lo = std::max(lo, t[r - 1][c] + 1);  // column strictly increasing
    for (int v = lo; v <= static_cast<int>(avail.size()); ++v) {
      if (avail[static_cast<size_t>(v) - 1] == 0) continue;
      --avail[static_cast<size_t>(v) - 1];
      t[r][c] = v;
      self(self, nr, nc);
      ++avail[static_cast<size_t>(v) - 1];
    }
  };
  if (rows == 0) return mu.empty() ? 1 : 0;
  rec(rec, 0, 0);
  return count;
}

namespace detail {

struct KostkaTables {
  std::vector<Partition> parts;        // canonical order
  std::map<Partition, int> index;
  std::vector<std::vector<long long>> K;     // K[i][j] = kostka(parts[i], parts[j])
  std::vector<std::vector<long long>> Kinv;  // exact integer inverse
};

inline const KostkaTables& kostka_tables(int n) {
  static std::map<int, KostkaTables> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  KostkaTables t;
  t.parts = partitions_of(n);
  size_t m = t.parts.size();
  for (size_t i = 0; i < m; ++i) t.index[t.parts[i]] = static_cast<int>(i);
  t.K.assign(m, std::vector<long long>(m, 0));
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = 0; j < m; ++j) {
      t.K[i][j] = kostka(t.parts[i], t.parts[j]);
    }
  }
  // The canonical order must make K upper-unitriangular.
  for (size_t i = 0; i < m; ++i) {
    assert(t.K[i][i] == 1);
    for (size_t j = 0; j < i; ++j) assert(t.K[i][j] == 0);
  }
  // Exact inverse of an upper-unitriangular integer matrix.
  t.Kinv.assign(m, std::vector<long long>(m, 0));
  for (size_t i = 0; i < m; ++i) t.Kinv[i][i] = 1;
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = i + 1; j < m; ++j) {
      long long s = 0;
      for (size_t k = i; k < j; ++k) s += t.Kinv[i][k] * t.K[k][j];
      t.Kinv[i][j] = -s;
    }
  }
  return cache.emplace(n, std::move(t)).first->second;
}

}  // namespace detail

inline long long inverse_kostka(const Partition& lam, const Partition& mu) {
  const auto& t = detail::kostka_tables(weight(lam));
  return t.Kinv[static_cast<size_t>(t.index.at(lam))]
               [static_cast<size_t>(t.index.at(mu))];
}

// Homogeneous quasisymmetric expression of one degree: coefficients on
// monomial-basis compositions.
struct QSymExpr {
  int degree = 0;
  std::map<Composition, PolyT> terms;

  void add(const Composition& c, const PolyT& v) {
    if (v.is_zero()) return;
    auto it = terms.find(c);
    if (it == terms.end()) {
      terms.emplace(c, v);
    } else {
      it->second += v;
      if (it->second.is_zero()) terms.erase(it);
    }
  }
  QSymExpr& operator+=(const QSymExpr& o) {
    if (degree != o.degree && !o.terms.empty() && !terms.empty()) {
      throw MixedDegreeError("adding quasisymmetric expressions of degrees " +
                             std::to_string(degree) + " and " +
                             std::to_string(o.degree));
    }
    if (terms.empty()) degree = o.degree;
    for (const auto& [c, v] : o.terms) add(c, v);
    return *this;
  }
};

// Homogeneous symmetric expression of one degree in one of the bases
// m (monomial), e (elementary), h (complete homogeneous), s (Schur).
struct SymExpr {
  int degree = 0;
  char basis = 'm';
  std::map<Partition, PolyT> terms;

  PolyT coeff(const Partition& lam) const {
    auto it = terms.find(lam);
    return it == terms.end() ? PolyT() : it->second;
  }
  void add(const Partition& lam, const PolyT& v) {
    if (v.is_zero()) return;
    auto it = terms.find(lam);
    if (it == terms.end()) {
      terms.emplace(lam, v);
    } else {
      it->second += v;
      if (it->second.is_zero()) terms.erase(it);
    }
  }
  friend bool operator==(const SymExpr& a, const SymExpr& b) {
    return a.degree == b.degree && a.basis == b.basis && a.terms == b.terms;
  }
  std::string str() const {
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& [lam, v] : terms) {
      if (!out.empty()) out += " + ";
      if (!(v == PolyT(1))) out += "(" + v.str() + ")";
      out += basis;
      out += parts_str(lam);
    }
    return out;
  }
};

// Descent-set composition: subset S = {s_1 < ... < s_k} of {1..n-1} becomes
// (s_1, s_2-s_1, ..., n-s_k).
inline Composition subset_to_composition(int n, const std::vector<int>& S) {
  Composition c;
  int prev = 0;
  for (int s : S) {
    c.push_back(s - prev);
    prev = s;
  }
  c.push_back(n - prev);
  return c;
}

inline std::vector<int> composition_to_subset(const Composition& c) {
  std::vector<int> S;
  int acc = 0;
  for (size_t i = 0; i + 1 < c.size(); ++i) {
    acc += c[i];
    S.push_back(acc);
  }
  return S;
}

// Gessel's fundamental quasisymmetric function indexed by a descent set,
// expanded in the monomial basis: coefficient 1 on every composition whose
// descent subset contains S.
inline QSymExpr fundamental(int n, const std::vector<int>& S) {
  for (int s : S) {
    if (s < 1 || s >= n) {
      throw ParamError("descent " + std::to_string(s) + " outside 1.." +
                       std::to_string(n - 1));
    }
  }
  QSymExpr q;
  q.degree = n;
  int bits = n > 0 ? n - 1 : 0;
  int smask = 0;
  for (int s : S) smask |= 1 << (s - 1);
  for (int T = 0; T < (1 << bits); ++T) {
    if ((T & smask) != smask) continue;
    std::vector<int> sub;
    for (int i = 0; i < bits; ++i) {
      if (T & (1 << i)) sub.push_back(i + 1);
    }
    q.add(subset_to_composition(n, sub), PolyT(1));
  }
  if (n == 0) q.add({}, PolyT(1));
  return q;
}

// Succeeds iff the coefficient map is constant on rearrangement classes of
// compositions; returns the monomial-basis symmetric expression, else throws
// NotSymmetricError with a witness pair.
inline SymExpr detect_symmetric(const QSymExpr& q) {
  SymExpr f;
  f.degree = q.degree;
  f.basis = 'm';
  for (const auto& lam : partitions_of(q.degree)) {
    // Representative coefficient = coefficient at the sorted composition.
    auto rep_it = q.terms.find(lam);
    PolyT rep = rep_it == q.terms.end() ? PolyT() : rep_it->second;
    f.add(lam, rep);
  }
  for (const auto& comp : compositions_of(q.degree)) {
    Partition lam = sort_to_partition(comp);
    auto it = q.terms.find(comp);
    PolyT v = it == q.terms.end() ? PolyT() : it->second;
    if (!(v == f.coeff(lam))) {
      throw NotSymmetricError(
          "coefficient of " + parts_str(comp) + " (" + v.str() +
              ") differs from coefficient of " + parts_str(lam) + " (" +
              f.coeff(lam).str() + ")",
          comp, lam);
    }
  }
  return f;
}

namespace detail {

// Solve c from a = K^T-style unitriangular systems. Both helpers work on
// coefficient maps in the canonical partition order.

// Given f in the m basis, return its s-expansion: coefficients a with
// c_mu = sum_lambda a_lambda K[lambda][mu].
inline std::map<Partition, PolyT> m_to_s(int n,
                                         const std::map<Partition, PolyT>& c) {
  const auto& t = kostka_tables(n);
  size_t m = t.parts.size();
  std::vector<PolyT> cv(m), av(m);
  for (const auto& [lam, v] : c) cv[static_cast<size_t>(t.index.at(lam))] = v;
  for (size_t mu = 0; mu < m; ++mu) {
    PolyT s = cv[mu];
    for (size_t lam = 0; lam < mu; ++lam) {
      if (t.K[lam][mu] != 0) s -= av[lam] * PolyT(t.K[lam][mu]);
    }
    av[mu] = s;  // K[mu][mu] = 1
  }
  std::map<Partition, PolyT> out;
  for (size_t i = 0; i < m; ++i) {
    if (!av[i].is_zero()) out.emplace(t.parts[i], av[i]);
  }
  return out;
}

// Given s-coefficients a, return h-coefficients c with
// a_lambda = sum_mu K[lambda][mu] c_mu (back substitution, K unitriangular).
inline std::map<Partition, PolyT> s_to_h(int n,
                                         const std::map<Partition, PolyT>& a) {
  const auto& t = kostka_tables(n);
  size_t m = t.parts.size();
  std::vector<PolyT> av(m), cv(m);
  for (const auto& [lam, v] : a) av[static_cast<size_t>(t.index.at(lam))] = v;
  for (size_t mu = m; mu-- > 0;) {
    PolyT s = av[mu];
    for (size_t nu = mu + 1; nu < m; ++nu) {
      if (t.K[mu][nu] != 0) s -= cv[nu] * PolyT(t.K[mu][nu]);
    }
    cv[mu] = s;
  }
  std::map<Partition, PolyT> out;
  for (size_t i = 0; i < m; ++i) {
    if (!cv[i].is_zero()) out.emplace(t.parts[i], cv[i]);
  }
  return out;
}

inline std::map<Partition, PolyT> transpose_keys(
    const std::map<Partition, PolyT>& a) {
  std::map<Partition, PolyT> out;
  for (const auto& [lam, v] : a) out.emplace(transpose(lam), v);
  return out;
}

}  // namespace detail

// Exact base change between m, e, h, s; all conversions route through the
// Schur basis with unitriangular integer solves.
inline SymExpr change_basis(const SymExpr& f, char target) {
  if (target != 'm' && target != 'e' && target != 'h' && target != 's') {
    throw ParamError(std::string("unknown basis '") + target + "'");
  }
  if (f.basis == target) return f;
  int n = f.degree;
  const auto& t = detail::kostka_tables(n);

  // Step 1: express f in the s basis.
  std::map<Partition, PolyT> s_coeffs;
  switch (f.basis) {
    case 's':
      s_coeffs = f.terms;
      break;
    case 'm':
      s_coeffs = detail::m_to_s(n, f.terms);
      break;
    case 'h':
      // h_mu = sum_lambda K[lambda][mu] s_lambda.
      for (const auto& [mu, v] : f.terms) {
        size_t j = static_cast<size_t>(t.index.at(mu));
        for (size_t i = 0; i < t.parts.size(); ++i) {
          if (t.K[i][j] == 0) continue;
          auto [it, inserted] =
              s_coeffs.emplace(t.parts[i], v * PolyT(t.K[i][j]));
          if (!inserted) it->second += v * PolyT(t.K[i][j]);
        }
      }
      break;
    case 'e': {
      // e_mu = sum_lambda K[lambda'][mu] s_lambda: relabel to h and transpose.
      SymExpr g;
      g.degree = n;
      g.basis = 'h';
      g.terms = f.terms;
      SymExpr gs = change_basis(g, 's');
      s_coeffs = detail::transpose_keys(gs.terms);
      break;
    }
    default:
      throw ParamError("unknown source basis");
  }
  for (auto it = s_coeffs.begin(); it != s_coeffs.end();) {
    it = it->second.is_zero() ? s_coeffs.erase(it) : std::next(it);
  }

  SymExpr out;
  out.degree = n;
  out.basis = target;
  // Step 2: from s to the target.
  switch (target) {
    case 's':
      out.terms = s_coeffs;
      break;
    case 'm':
      // s_lambda = sum_mu K[lambda][mu] m_mu.
      for (const auto& [lam, v] : s_coeffs) {
        size_t i = static_cast<size_t>(t.index.at(lam));
        for (size_t j = 0; j < t.parts.size(); ++j) {
          if (t.K[i][j] != 0) out.add(t.parts[j], v * PolyT(t.K[i][j]));
        }
      }
      break;
    case 'h':
      out.terms = detail::s_to_h(n, s_coeffs);
      break;
    case 'e': {
      // f = sum c_mu e_mu iff omega(f) = sum c_mu h_mu.
      out.terms = detail::s_to_h(n, detail::transpose_keys(s_coeffs));
      break;
    }
    default:
      break;
  }
  for (auto it = out.terms.begin(); it != out.terms.end();) {
    it = it->second.is_zero() ? out.terms.erase(it) : std::next(it);
  }
  return out;
}

// The standard involution: transposes partitions in the s basis, exchanges
// the e and h labels, and routes m through s.
inline SymExpr omega(const SymExpr& f) {
  SymExpr out;
  switch (f.basis) {
    case 'e':
    case 'h':
      out = f;
      out.basis = f.basis == 'e' ? 'h' : 'e';
      return out;
    case 's':
      out.degree = f.degree;
      out.basis = 's';
      out.terms = detail::transpose_keys(f.terms);
      return out;
    case 'm': {
      SymExpr s = change_basis(f, 's');
      return change_basis(omega(s), 'm');
    }
    default:
      throw ParamError("unknown basis");
  }
}

struct PositivityReport {
  bool positive = true;
  Partition witness;
  PolyT witness_coeff;
};

// Converts to the requested basis and checks every coefficient of every
// power of t is a nonnegative integer.
inline PositivityReport is_positive(const SymExpr& f, char basis) {
  SymExpr g = change_basis(f, basis);
  PositivityReport r;
  for (const auto& [lam, v] : g.terms) {
    if (!v.nonneg()) {
      r.positive = false;
      r.witness = lam;
      r.witness_coeff = v;
      return r;
    }
  }
  return r;
}

}  // namespace poschur
