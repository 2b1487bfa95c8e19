#pragma once

#include <padic_lattes/upoly.hpp>
#include <padic_lattes/valuation.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace padic_lattes {

namespace fp {

inline std::uint64_t add(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t s = a + b;
  return s >= p ? s - p : s;
}
inline std::uint64_t sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + p - b;
}
// Requires p < 2^31 so products fit in 64 bits.
inline std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return (a * b) % p;
}
inline std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  while (e) {
    if (e & 1) r = mul(r, a, p);
    a = mul(a, a, p);
    e >>= 1;
  }
  return r;
}
inline std::uint64_t inv(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw std::domain_error("fp: inverse of zero");
  return pow(a % p, p - 2, p);
}
inline std::uint64_t reduce(const BigInt& x, std::uint64_t p) {
  BigInt r = x % BigInt(p);
  if (r < 0) r += p;
  return r.convert_to<std::uint64_t>();
}

}  // namespace fp

/// Dense polynomial over the prime field F_p for a small prime p (< 2^31).
class FpPoly {
 public:
  FpPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs)
      : p_(check_prime(p)), c_(std::move(coeffs)) {
    for (auto& x : c_) x %= p_;
    trim();
  }
  static FpPoly zero(std::uint64_t p) { return FpPoly(p, {}); }
  static FpPoly constant(std::uint64_t p, std::uint64_t v) {
    return FpPoly(p, {v});
  }
  static FpPoly variable(std::uint64_t p) { return FpPoly(p, {0, 1}); }

  /// Reduces a rational-coefficient polynomial; throws if p divides a
  /// coefficient denominator.
  static FpPoly from_upoly(const UPoly& f, std::uint64_t p) {
    check_prime(p);
    std::vector<std::uint64_t> c(f.coeffs().size());
    for (std::size_t i = 0; i < c.size(); ++i) {
      const Rat& x = f.coeff(i);
      std::uint64_t d = fp::reduce(x.den(), p);
      if (d == 0)
        throw std::domain_error("FpPoly: denominator not invertible mod p");
      c[i] = fp::mul(fp::reduce(x.num(), p), fp::inv(d, p), p);
    }
    return FpPoly(p, std::move(c));
  }

  std::uint64_t prime() const { return p_; }
  bool is_zero() const { return c_.empty(); }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  std::uint64_t coeff(std::size_t k) const { return k < c_.size() ? c_[k] : 0; }
  std::uint64_t lead() const {
    if (c_.empty()) throw std::domain_error("FpPoly: lead of zero");
    return c_.back();
  }
  const std::vector<std::uint64_t>& coeffs() const { return c_; }

  friend bool operator==(const FpPoly& a, const FpPoly& b) {
    return a.p_ == b.p_ && a.c_ == b.c_;
  }
  friend bool operator!=(const FpPoly& a, const FpPoly& b) { return !(a == b); }

  FpPoly operator-() const {
    FpPoly r = *this;
    for (auto& x : r.c_) x = x == 0 ? 0 : p_ - x;
    return r;
  }

  friend FpPoly operator+(const FpPoly& a, const FpPoly& b) {
    a.check_same(b);
    std::vector<std::uint64_t> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i)
      c[i] = fp::add(c[i], b.c_[i], a.p_);
    return FpPoly(a.p_, std::move(c));
  }
  friend FpPoly operator-(const FpPoly& a, const FpPoly& b) {
    a.check_same(b);
    std::vector<std::uint64_t> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i)
      c[i] = fp::sub(c[i], b.c_[i], a.p_);
    return FpPoly(a.p_, std::move(c));
  }
  friend FpPoly operator*(const FpPoly& a, const FpPoly& b) {
    a.check_same(b);
    if (a.is_zero() || b.is_zero()) return FpPoly::zero(a.p_);
    std::vector<std::uint64_t> c(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        c[i + j] = (c[i + j] + a.c_[i] * b.c_[j]) % a.p_;
    }
    return FpPoly(a.p_, std::move(c));
  }
  FpPoly scaled(std::uint64_t s) const {
    FpPoly r = *this;
    for (auto& x : r.c_) x = fp::mul(x, s, p_);
    r.trim();
    return r;
  }
  FpPoly shifted_up(std::size_t k) const {
    if (is_zero()) return *this;
    std::vector<std::uint64_t> c(c_.size() + k, 0);
    std::copy(c_.begin(), c_.end(), c.begin() + static_cast<long>(k));
    return FpPoly(p_, std::move(c));
  }

  FpPoly pow(unsigned long e) const {
    FpPoly acc = FpPoly::constant(p_, 1), base = *this;
    while (e > 0) {
      if (e & 1) acc = acc * base;
      base = base * base;
      e >>= 1;
    }
    return acc;
  }

  std::pair<FpPoly, FpPoly> divmod(const FpPoly& d) const {
    check_same(d);
    if (d.is_zero()) throw std::domain_error("FpPoly: division by zero");
    if (degree() < d.degree()) return {FpPoly::zero(p_), *this};
    std::vector<std::uint64_t> rem = c_;
    std::vector<std::uint64_t> q(c_.size() - d.c_.size() + 1, 0);
    const std::uint64_t il = fp::inv(d.lead(), p_);
    for (std::size_t i = c_.size(); i-- > d.c_.size() - 1;) {
      if (rem[i] == 0) continue;
      const std::size_t shift = i - (d.c_.size() - 1);
      std::uint64_t f = fp::mul(rem[i], il, p_);
      q[shift] = f;
      for (std::size_t j = 0; j < d.c_.size(); ++j)
        rem[shift + j] = fp::sub(rem[shift + j], fp::mul(f, d.c_[j], p_), p_);
    }
    return {FpPoly(p_, std::move(q)), FpPoly(p_, std::move(rem))};
  }

  FpPoly monic() const {
    if (is_zero()) throw std::domain_error("FpPoly: monic of zero");
    return scaled(fp::inv(lead(), p_));
  }

  std::uint64_t eval(std::uint64_t x) const {
    std::uint64_t acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;)
      acc = (acc * x + c_[i]) % p_;
    return acc;
  }

  std::string str(char var = 't') const {
    UPoly u = to_upoly(var);
    return u.str();
  }
  UPoly to_upoly(char var = 't') const {
    std::vector<Rat> c;
    c.reserve(c_.size());
    for (auto x : c_) c.emplace_back(BigInt(x));
    return UPoly(std::move(c), var);
  }

 private:
  static std::uint64_t check_prime(std::uint64_t p) {
    if (p >= (1ull << 31) || !is_prime(BigInt(p)))
      throw std::domain_error("FpPoly: modulus must be a prime < 2^31");
    return p;
  }
  void check_same(const FpPoly& o) const {
    if (p_ != o.p_) throw std::domain_error("FpPoly: mixed moduli");
  }
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::uint64_t p_;
  std::vector<std::uint64_t> c_;
};

/// Monic gcd in F_p[t] by the Euclidean algorithm.
inline FpPoly fp_gcd(FpPoly a, FpPoly b) {
  if (a.is_zero() && b.is_zero())
    throw std::domain_error("fp_gcd: both inputs zero");
  while (!b.is_zero()) {
    FpPoly r = a.divmod(b).second;
    a = b;
    b = r;
  }
  return a.monic();
}

}  // namespace padic_lattes
