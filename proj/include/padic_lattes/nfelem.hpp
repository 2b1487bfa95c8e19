#pragma once

#include <padic_lattes/upoly.hpp>

#include <stdexcept>
#include <string>
#include <utility>

namespace padic_lattes {

/// Element of Q[x]/(m) for a monic integer-coefficient modulus m that the
/// caller guarantees irreducible (x^2 + x + 1 is the one this project
/// needs). Division by a zero divisor of a reducible modulus throws.
class NFElem {
 public:
  NFElem(UPoly representative, UPoly modulus)
      : rep_(std::move(representative)), mod_(std::move(modulus)) {
    check_modulus(mod_);
    rep_ = rep_.divmod(mod_).second;
  }
  NFElem(Rat value, UPoly modulus)
      : NFElem(UPoly(std::move(value), modulus.var()), std::move(modulus)) {}

  /// The class of x itself.
  static NFElem generator(const UPoly& modulus) {
    return NFElem(UPoly::variable(modulus.var()), modulus);
  }

  const UPoly& rep() const { return rep_; }
  const UPoly& modulus() const { return mod_; }
  bool is_zero() const { return rep_.is_zero(); }
  bool is_rational() const { return rep_.degree() <= 0; }
  Rat rational_value() const {
    if (!is_rational()) throw std::domain_error("NFElem: not rational");
    return rep_.coeff(0);
  }

  friend bool operator==(const NFElem& a, const NFElem& b) {
    a.check_same(b);
    return a.rep_ == b.rep_;
  }
  friend bool operator!=(const NFElem& a, const NFElem& b) { return !(a == b); }

  NFElem operator-() const { return NFElem(-rep_, mod_); }
  friend NFElem operator+(const NFElem& a, const NFElem& b) {
    a.check_same(b);
    return NFElem(a.rep_ + b.rep_, a.mod_);
  }
  friend NFElem operator-(const NFElem& a, const NFElem& b) {
    a.check_same(b);
    return NFElem(a.rep_ - b.rep_, a.mod_);
  }
  friend NFElem operator*(const NFElem& a, const NFElem& b) {
    a.check_same(b);
    return NFElem(a.rep_ * b.rep_, a.mod_);
  }
  friend NFElem operator/(const NFElem& a, const NFElem& b) {
    return a * b.inverse();
  }

  NFElem& operator+=(const NFElem& o) { return *this = *this + o; }
  NFElem& operator-=(const NFElem& o) { return *this = *this - o; }
  NFElem& operator*=(const NFElem& o) { return *this = *this * o; }

  /// Extended Euclid against the modulus.
  NFElem inverse() const {
    if (rep_.is_zero()) throw std::domain_error("NFElem: inverse of zero");
    UPoly r0 = mod_, r1 = rep_;
    UPoly s0 = UPoly::zero(mod_.var()), s1 = UPoly::one(mod_.var());
    while (!r1.is_zero()) {
      auto [q, r] = r0.divmod(r1);
      UPoly s = s0 - q * s1;
      r0 = std::move(r1);
      r1 = std::move(r);
      s0 = std::move(s1);
      s1 = std::move(s);
    }
    if (r0.degree() != 0)
      throw std::domain_error("NFElem: zero divisor (modulus not irreducible)");
    return NFElem(r0.coeff(0).inverse() * s0, mod_);
  }

  NFElem pow(unsigned long e) const {
    NFElem acc(Rat(1), mod_), base = *this;
    while (e > 0) {
      if (e & 1) acc *= base;
      base *= base;
      e >>= 1;
    }
    return acc;
  }

  std::string str() const { return rep_.str(); }

 private:
  static void check_modulus(const UPoly& m) {
    if (m.degree() < 1 || !m.is_monic())
      throw std::domain_error("NFElem: modulus must be monic of degree >= 1");
    for (long i = 0; i <= m.degree(); ++i)
      if (!m.coeff(static_cast<std::size_t>(i)).is_integer())
        throw std::domain_error("NFElem: modulus must have integer coefficients");
  }
  void check_same(const NFElem& o) const {
    if (mod_ != o.mod_) throw std::domain_error("NFElem: mixed moduli");
  }

  UPoly rep_;
  UPoly mod_;
};

/// Horner evaluation of a rational-coefficient polynomial at a field element.
inline NFElem eval_nf(const UPoly& p, const NFElem& x) {
  NFElem acc(Rat(0), x.modulus());
  for (long i = p.degree(); i >= 0; --i)
    acc = acc * x + NFElem(p.coeff(static_cast<std::size_t>(i)), x.modulus());
  return acc;
}

}  // namespace padic_lattes
