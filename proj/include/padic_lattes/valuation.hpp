#pragma once

#include <padic_lattes/rat.hpp>

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace padic_lattes {

namespace primes_detail {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

// Deterministic Miller-Rabin for 64-bit inputs.
inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

}  // namespace primes_detail

inline bool is_prime(const BigInt& p) {
  if (p < 2) return false;
  if (p <= BigInt(std::numeric_limits<std::uint64_t>::max()))
    return primes_detail::is_prime_u64(p.convert_to<std::uint64_t>());
  if (p % 2 == 0) return false;
  for (BigInt d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

/// Exact p-adic valuation, normalized so v(p) = 1 and |x| = p^(-v(x)).
/// v(0) is the distinguished value +infinity.
class Val {
 public:
  static Val infinite(BigInt prime) { return Val(std::move(prime)); }
  Val(Rat value, BigInt prime)
      : value_(std::move(value)), prime_(std::move(prime)), infinite_(false) {}

  bool is_infinite() const { return infinite_; }
  const Rat& value() const {
    if (infinite_) throw std::domain_error("Val: value of +infinity");
    return value_;
  }
  const BigInt& prime() const { return prime_; }

  friend bool operator==(const Val& a, const Val& b) {
    if (a.infinite_ != b.infinite_) return false;
    if (a.infinite_) return a.prime_ == b.prime_;
    return a.value_ == b.value_ && a.prime_ == b.prime_;
  }

  std::string str() const { return infinite_ ? "+inf" : value_.str(); }

 private:
  explicit Val(BigInt prime) : prime_(std::move(prime)), infinite_(true) {}

  Rat value_;
  BigInt prime_;
  bool infinite_;
};

/// Multiplicity of p in a nonzero integer.
inline long int_val(BigInt n, const BigInt& p) {
  if (n == 0) throw std::domain_error("int_val: zero");
  if (n < 0) n = -n;
  long v = 0;
  if (p == 2) {
    v = static_cast<long>(boost::multiprecision::lsb(n));
    return v;
  }
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

inline Val val_of(const Rat& x, const BigInt& p) {
  if (!is_prime(p)) throw std::domain_error("val_of: p is not prime");
  if (x.is_zero()) return Val::infinite(p);
  long v = int_val(x.num(), p) - int_val(x.den(), p);
  return Val(Rat(v), p);
}

}  // namespace padic_lattes
