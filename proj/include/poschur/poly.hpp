#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace poschur {

// Dense univariate polynomial over the integers in the formal variable t,
// stored as ascending coefficients with trailing zeros trimmed. All counts
// handled by this library are desk-scale (bounded by small multinomials), so
// 64-bit integers are exact.
class PolyT {
 public:
  PolyT() = default;
  PolyT(long long constant) {  // NOLINT: implicit by design (ints are 0-degree)
    if (constant != 0) c_.push_back(constant);
  }
  explicit PolyT(std::vector<long long> coeffs) : c_(std::move(coeffs)) {
    trim();
  }

  static PolyT t_power(int k, long long coeff = 1) {
    PolyT p;
    if (coeff != 0) {
      p.c_.assign(static_cast<size_t>(k) + 1, 0);
      p.c_.back() = coeff;
    }
    return p;
  }

  bool is_zero() const { return c_.empty(); }
  // True iff the polynomial is a constant (degree <= 0).
  bool is_constant() const { return c_.size() <= 1; }
  long long constant_value() const { return c_.empty() ? 0 : c_[0]; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  long long at(int k) const {
    return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : 0;
  }
  const std::vector<long long>& coeffs() const { return c_; }

  bool nonneg() const {
    for (long long v : c_) {
      if (v < 0) return false;
    }
    return true;
  }

  long long eval_at_one() const {
    long long s = 0;
    for (long long v : c_) s += v;
    return s;
  }

  PolyT& operator+=(const PolyT& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), 0);
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  PolyT& operator-=(const PolyT& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), 0);
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend PolyT operator+(PolyT a, const PolyT& b) { return a += b; }
  friend PolyT operator-(PolyT a, const PolyT& b) { return a -= b; }
  friend PolyT operator-(const PolyT& a) {
    PolyT r = a;
    for (auto& v : r.c_) v = -v;
    return r;
  }
  friend PolyT operator*(const PolyT& a, const PolyT& b) {
    if (a.is_zero() || b.is_zero()) return PolyT();
    PolyT r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
    for (size_t i = 0; i < a.c_.size(); ++i) {
      for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.trim();
    return r;
  }
  PolyT& operator*=(const PolyT& o) { return *this = *this * o; }

  friend bool operator==(const PolyT& a, const PolyT& b) { return a.c_ == b.c_; }
  friend bool operator!=(const PolyT& a, const PolyT& b) { return !(a == b); }
  friend bool operator<(const PolyT& a, const PolyT& b) { return a.c_ < b.c_; }

  // Rendering like "1+2t+t^3" (zero renders as "0"); used in reports.
  std::string str() const {
    if (c_.empty()) return "0";
    std::string out;
    for (size_t k = 0; k < c_.size(); ++k) {
      long long v = c_[k];
      if (v == 0) continue;
      if (!out.empty()) out += v > 0 ? "+" : "-";
      else if (v < 0) out += "-";
      long long av = v < 0 ? -v : v;
      if (av != 1 || k == 0) out += std::to_string(av);
      if (k >= 1) out += k == 1 ? "t" : "t^" + std::to_string(k);
    }
    return out.empty() ? "0" : out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<long long> c_;
};

}  // namespace poschur
