#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/functional/hash.hpp>

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace padic_lattes {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number. Always stored in lowest terms with a positive
/// denominator; zero is 0/1.
class Rat {
 public:
  Rat() : num_(0), den_(1) {}
  Rat(long long n) : num_(n), den_(1) {}
  Rat(BigInt n) : num_(std::move(n)), den_(1) {}
  Rat(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw std::domain_error("Rat: zero denominator");
    normalize();
  }

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ == 0 ? 0 : (num_ > 0 ? 1 : -1); }

  Rat operator-() const {
    Rat r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  Rat& operator+=(const Rat& o) {
    if (den_ == 1 && o.den_ == 1) {
      num_ += o.num_;
      return *this;
    }
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
  }
  Rat& operator-=(const Rat& o) {
    if (den_ == 1 && o.den_ == 1) {
      num_ -= o.num_;
      return *this;
    }
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
  }
  Rat& operator*=(const Rat& o) {
    if (den_ == 1 && o.den_ == 1) {
      num_ *= o.num_;
      return *this;
    }
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
  }
  Rat& operator/=(const Rat& o) {
    if (o.num_ == 0) throw std::domain_error("Rat: division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
  }

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
  friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
  friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

  Rat inverse() const {
    if (num_ == 0) throw std::domain_error("Rat: inverse of zero");
    Rat r;
    if (num_ > 0) {
      r.num_ = den_;
      r.den_ = num_;
    } else {
      r.num_ = -den_;
      r.den_ = -num_;
    }
    return r;
  }

  /// x^e for integer e; 0^0 = 1, negative e inverts.
  Rat pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Rat base = *this, acc = Rat(1);
    while (e > 0) {
      if (e & 1) acc *= base;
      base *= base;
      e >>= 1;
    }
    return acc;
  }

  Rat abs() const { return num_ < 0 ? -*this : *this; }

  std::string str() const {
    std::string s = num_.str();
    if (den_ != 1) s += "/" + den_.str();
    return s;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r) {
    return os << r.str();
  }

 private:
  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    if (num_ == 0) {
      den_ = 1;
      return;
    }
    if (den_ == 1) return;
    BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
    if (g != 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  BigInt num_;
  BigInt den_;
};

}  // namespace padic_lattes

namespace std {
template <>
struct hash<padic_lattes::Rat> {
  std::size_t operator()(const padic_lattes::Rat& r) const {
    std::size_t seed = boost::hash<padic_lattes::BigInt>{}(r.num());
    boost::hash_combine(seed, boost::hash<padic_lattes::BigInt>{}(r.den()));
    return seed;
  }
};
}  // namespace std
