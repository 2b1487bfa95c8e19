#pragma once

#include <padic_lattes/rat.hpp>
#include <padic_lattes/upoly.hpp>

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace padic_lattes {

/// Sparse bivariate polynomial over Q; keys are (exponent of the first
/// variable, exponent of the second), zero coefficients are never stored.
class BiPoly {
 public:
  using Key = std::pair<long, long>;

  BiPoly(char v1 = 'u', char v2 = 'z') : v1_(v1), v2_(v2) {}
  BiPoly(Rat constant, char v1 = 'u', char v2 = 'z') : v1_(v1), v2_(v2) {
    if (!constant.is_zero()) c_[{0, 0}] = std::move(constant);
  }
  static BiPoly monomial(Rat coeff, long e1, long e2, char v1 = 'u',
                         char v2 = 'z') {
    BiPoly p(v1, v2);
    if (!coeff.is_zero()) p.c_[{e1, e2}] = std::move(coeff);
    return p;
  }
  static BiPoly first(char v1 = 'u', char v2 = 'z') {
    return monomial(Rat(1), 1, 0, v1, v2);
  }
  static BiPoly second(char v1 = 'u', char v2 = 'z') {
    return monomial(Rat(1), 0, 1, v1, v2);
  }
  /// Lifts a univariate polynomial into the named slot.
  static BiPoly from_upoly(const UPoly& p, int slot, char v1 = 'u',
                           char v2 = 'z') {
    BiPoly r(v1, v2);
    for (long i = 0; i <= p.degree(); ++i) {
      Rat c = p.coeff(static_cast<std::size_t>(i));
      if (!c.is_zero())
        r.c_[slot == 0 ? Key{i, 0} : Key{0, i}] = std::move(c);
    }
    return r;
  }

  bool is_zero() const { return c_.empty(); }
  const std::map<Key, Rat>& terms() const { return c_; }
  long degree_first() const {
    long d = -1;
    for (const auto& [k, v] : c_) d = std::max(d, k.first);
    return d;
  }
  long degree_second() const {
    long d = -1;
    for (const auto& [k, v] : c_) d = std::max(d, k.second);
    return d;
  }

  friend bool operator==(const BiPoly& a, const BiPoly& b) {
    return a.c_ == b.c_;
  }
  friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

  BiPoly operator-() const {
    BiPoly r = *this;
    for (auto& [k, v] : r.c_) v = -v;
    return r;
  }

  friend BiPoly operator+(BiPoly a, const BiPoly& b) {
    for (const auto& [k, v] : b.c_) a.add_term(k, v);
    return a;
  }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) {
    for (const auto& [k, v] : b.c_) a.add_term(k, -v);
    return a;
  }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly r(a.v1_, a.v2_);
    for (const auto& [ka, va] : a.c_)
      for (const auto& [kb, vb] : b.c_)
        r.add_term({ka.first + kb.first, ka.second + kb.second}, va * vb);
    return r;
  }
  friend BiPoly operator*(const Rat& s, const BiPoly& p) {
    if (s.is_zero()) return BiPoly(p.v1_, p.v2_);
    BiPoly r = p;
    for (auto& [k, v] : r.c_) v *= s;
    return r;
  }
  friend BiPoly operator*(const BiPoly& p, const Rat& s) { return s * p; }

  BiPoly& operator+=(const BiPoly& o) { return *this = *this + o; }
  BiPoly& operator-=(const BiPoly& o) { return *this = *this - o; }
  BiPoly& operator*=(const BiPoly& o) { return *this = *this * o; }

  BiPoly pow(unsigned long e) const {
    BiPoly acc(Rat(1), v1_, v2_), base = *this;
    while (e > 0) {
      if (e & 1) acc *= base;
      base *= base;
      e >>= 1;
    }
    return acc;
  }

  /// p(1/x, 1/y) * x^d1 * y^d2 for the given clearing degrees (which must
  /// dominate the degrees of p).
  BiPoly reversed(long d1, long d2) const {
    BiPoly r(v1_, v2_);
    for (const auto& [k, v] : c_) {
      if (k.first > d1 || k.second > d2)
        throw std::domain_error("BiPoly: clearing degree too small");
      r.c_[{d1 - k.first, d2 - k.second}] = v;
    }
    return r;
  }

  /// Specialize the first variable to a rational value.
  UPoly eval_first(const Rat& x, char var) const {
    UPoly out = UPoly::zero(var);
    for (const auto& [k, v] : c_)
      out += UPoly::monomial(v * x.pow(k.first),
                             static_cast<std::size_t>(k.second), var);
    return out;
  }

  Rat eval(const Rat& x, const Rat& y) const {
    Rat out(0);
    for (const auto& [k, v] : c_) out += v * x.pow(k.first) * y.pow(k.second);
    return out;
  }

  std::string str() const {
    if (c_.empty()) return "0";
    std::string out;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      const auto& [k, v] = *it;
      if (!out.empty()) out += v.sign() < 0 ? " - " : " + ";
      else if (v.sign() < 0) out += "-";
      Rat mag = v.abs();
      const bool unit = mag == Rat(1) && (k.first > 0 || k.second > 0);
      if (!unit) out += mag.str();
      bool star = !unit;
      for (int slot = 0; slot < 2; ++slot) {
        long e = slot == 0 ? k.first : k.second;
        if (e == 0) continue;
        if (star) out += "*";
        out += slot == 0 ? v1_ : v2_;
        if (e > 1) out += "^" + std::to_string(e);
        star = true;
      }
    }
    return out;
  }

 private:
  void add_term(const Key& k, const Rat& v) {
    if (v.is_zero()) return;
    auto it = c_.find(k);
    if (it == c_.end()) {
      c_.emplace(k, v);
    } else {
      it->second += v;
      if (it->second.is_zero()) c_.erase(it);
    }
  }

  std::map<Key, Rat> c_;
  char v1_, v2_;
};

/// Equality of rational functions: lhs_num * rhs_den == rhs_num * lhs_den.
inline bool ratfun_equal(const std::pair<BiPoly, BiPoly>& lhs,
                         const std::pair<BiPoly, BiPoly>& rhs) {
  if (lhs.second.is_zero() || rhs.second.is_zero())
    throw std::domain_error("ratfun_equal: zero denominator polynomial");
  return lhs.first * rhs.second == rhs.first * lhs.second;
}

}  // namespace padic_lattes
