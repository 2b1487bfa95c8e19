#pragma once

#include <padic_lattes/rat.hpp>

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace padic_lattes {

/// Dense univariate polynomial with exact rational coefficients.
/// Coefficients are stored by ascending degree and trimmed, so
/// degree() is the index of the last nonzero coefficient (-1 for zero).
/// The variable name is only a printing/parsing tag.
class UPoly {
 public:
  UPoly() : var_('t') {}
  explicit UPoly(Rat constant, char var = 't') : var_(var) {
    if (!constant.is_zero()) c_.push_back(std::move(constant));
  }
  UPoly(std::vector<Rat> coeffs, char var = 't')
      : c_(std::move(coeffs)), var_(var) {
    trim();
  }

  static UPoly zero(char var = 't') { return UPoly(std::vector<Rat>{}, var); }
  static UPoly one(char var = 't') { return UPoly(Rat(1), var); }
  static UPoly variable(char var = 't') {
    return UPoly({Rat(0), Rat(1)}, var);
  }
  static UPoly monomial(Rat coeff, std::size_t k, char var = 't') {
    std::vector<Rat> c(k + 1);
    c[k] = std::move(coeff);
    return UPoly(std::move(c), var);
  }

  char var() const { return var_; }
  void set_var(char v) { var_ = v; }

  bool is_zero() const { return c_.empty(); }
  long degree() const { return static_cast<long>(c_.size()) - 1; }

  Rat coeff(std::size_t k) const {
    return k < c_.size() ? c_[k] : Rat(0);
  }
  const Rat& lead() const {
    if (c_.empty()) throw std::domain_error("UPoly: lead of zero polynomial");
    return c_.back();
  }
  const std::vector<Rat>& coeffs() const { return c_; }

  friend bool operator==(const UPoly& a, const UPoly& b) {
    return a.c_ == b.c_;
  }
  friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

  UPoly operator-() const {
    UPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }

  friend UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return UPoly(std::move(c), a.c_.empty() ? b.var_ : a.var_);
  }
  friend UPoly operator-(const UPoly& a, const UPoly& b) {
    std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
    return UPoly(std::move(c), a.c_.empty() ? b.var_ : a.var_);
  }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero())
      return UPoly::zero(a.c_.empty() ? b.var_ : a.var_);
    std::vector<Rat> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        if (b.c_[j].is_zero()) continue;
        c[i + j] += a.c_[i] * b.c_[j];
      }
    }
    return UPoly(std::move(c), a.var_);
  }
  friend UPoly operator*(const Rat& s, const UPoly& p) {
    if (s.is_zero()) return UPoly::zero(p.var_);
    UPoly r = p;
    for (auto& x : r.c_) x *= s;
    return r;
  }
  friend UPoly operator*(const UPoly& p, const Rat& s) { return s * p; }

  UPoly& operator+=(const UPoly& o) { return *this = *this + o; }
  UPoly& operator-=(const UPoly& o) { return *this = *this - o; }
  UPoly& operator*=(const UPoly& o) { return *this = *this * o; }

  /// Multiply by the k-th power of the variable.
  UPoly shifted_up(std::size_t k) const {
    if (is_zero()) return *this;
    std::vector<Rat> c(c_.size() + k);
    std::copy(c_.begin(), c_.end(), c.begin() + static_cast<long>(k));
    return UPoly(std::move(c), var_);
  }

  UPoly pow(unsigned long e) const {
    UPoly acc = UPoly::one(var_), base = *this;
    while (e > 0) {
      if (e & 1) acc *= base;
      base *= base;
      e >>= 1;
    }
    return acc;
  }

  /// Horner evaluation at any value supporting ring ops and construction
  /// from Rat (Rat itself, NFElem, BiPoly, ...).
  template <class F>
  F eval(const F& x) const {
    F acc{Rat(0)};
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + F{c_[i]};
    return acc;
  }
  Rat eval(const Rat& x) const {
    Rat acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  UPoly derivative() const {
    if (c_.size() <= 1) return UPoly::zero(var_);
    std::vector<Rat> c(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = Rat((long long)i) * c_[i];
    return UPoly(std::move(c), var_);
  }

  /// Exact q(s) = p(s + shift).
  UPoly taylor_shift(const Rat& shift) const {
    if (shift.is_zero() || is_zero()) return *this;
    // Horner in (s + shift): acc = acc*(x + shift) + c_i.
    UPoly acc = UPoly::zero(var_);
    UPoly lin({shift, Rat(1)}, var_);
    for (std::size_t i = c_.size(); i-- > 0;) {
      acc = acc * lin;
      acc += UPoly(c_[i], var_);
    }
    return acc;
  }

  /// Field division with remainder: *this = q*d + r, deg r < deg d.
  std::pair<UPoly, UPoly> divmod(const UPoly& d) const {
    if (d.is_zero()) throw std::domain_error("UPoly: division by zero polynomial");
    if (degree() < d.degree()) return {UPoly::zero(var_), *this};
    std::vector<Rat> rem = c_;
    std::vector<Rat> q(c_.size() - d.c_.size() + 1);
    const Rat inv_lead = d.lead().inverse();
    for (std::size_t i = c_.size(); i-- > d.c_.size() - 1;) {
      if (rem[i].is_zero()) continue;
      const std::size_t shift = i - (d.c_.size() - 1);
      Rat f = rem[i] * inv_lead;
      q[shift] = f;
      for (std::size_t j = 0; j < d.c_.size(); ++j)
        rem[shift + j] -= f * d.c_[j];
    }
    return {UPoly(std::move(q), var_), UPoly(std::move(rem), var_)};
  }

  /// Exact division; throws if the remainder is nonzero.
  UPoly divexact(const UPoly& d) const {
    auto [q, r] = divmod(d);
    if (!r.is_zero()) throw std::domain_error("UPoly: inexact division");
    return q;
  }

  bool divides(const UPoly& p) const { return p.divmod(*this).second.is_zero(); }

  bool is_monic() const { return !c_.empty() && c_.back() == Rat(1); }
  UPoly monic() const {
    if (is_zero()) throw std::domain_error("UPoly: monic of zero polynomial");
    return lead().inverse() * *this;
  }

  /// Multiplicity of the root 0 (index of the first nonzero coefficient).
  long ord0() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (!c_[i].is_zero()) return static_cast<long>(i);
    return -1;
  }

  /// Writes *this as scale * P with P a primitive integer polynomial
  /// whose leading coefficient is positive. Zero maps to (0, []).
  std::pair<Rat, std::vector<BigInt>> primitive_int() const {
    if (is_zero()) return {Rat(0), {}};
    BigInt l = 1;
    for (const auto& x : c_) l = boost::multiprecision::lcm(l, x.den());
    std::vector<BigInt> v(c_.size());
    BigInt content = 0;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      v[i] = x_times_over(c_[i], l);
      content = boost::multiprecision::gcd(content, v[i]);
    }
    if (v.back() < 0) content = -content;
    for (auto& x : v) x /= content;
    return {Rat(content, l), std::move(v)};
  }

  static UPoly from_int_coeffs(const std::vector<BigInt>& v, char var = 't') {
    std::vector<Rat> c;
    c.reserve(v.size());
    for (const auto& x : v) c.emplace_back(x);
    return UPoly(std::move(c), var);
  }

  std::string str() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
      const Rat& a = c_[i];
      if (a.is_zero()) continue;
      const bool first = out.empty();
      Rat mag = a.abs();
      if (first) {
        if (a.sign() < 0) out += "-";
      } else {
        out += a.sign() < 0 ? " - " : " + ";
      }
      const bool unit = mag == Rat(1);
      if (i == 0) {
        out += mag.str();
      } else {
        if (!unit) {
          out += mag.str();
          out += "*";
        }
        out += var_;
        if (i > 1) out += "^" + std::to_string(i);
      }
    }
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const UPoly& p) {
    return os << p.str();
  }

 private:
  static BigInt x_times_over(const Rat& x, const BigInt& l) {
    return x.num() * (l / x.den());
  }

  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<Rat> c_;
  char var_;
};

}  // namespace padic_lattes
