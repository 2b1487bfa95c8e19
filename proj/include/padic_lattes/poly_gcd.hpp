#pragma once

#include <padic_lattes/fppoly.hpp>
#include <padic_lattes/upoly.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace padic_lattes {

namespace gcd_detail {

inline long ideg(const std::vector<BigInt>& v) {
  return static_cast<long>(v.size()) - 1;
}

inline void itrim(std::vector<BigInt>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

inline BigInt icontent(const std::vector<BigInt>& v) {
  BigInt g = 0;
  for (const auto& x : v) g = boost::multiprecision::gcd(g, x);
  return g;
}

inline void make_primitive(std::vector<BigInt>& v) {
  if (v.empty()) return;
  BigInt g = icontent(v);
  if (v.back() < 0) g = -g;
  for (auto& x : v) x /= g;
}

/// Pseudo-remainder of a by b: lc(b)^(deg a - deg b + 1) * a mod b.
inline std::vector<BigInt> prem(std::vector<BigInt> a,
                                const std::vector<BigInt>& b) {
  const long db = ideg(b);
  const BigInt& lb = b.back();
  long e = ideg(a) - db + 1;  // lb-multiplications still owed
  while (!a.empty() && ideg(a) >= db) {
    const long da = ideg(a);
    BigInt la = a.back();
    for (auto& x : a) x *= lb;
    const long off = da - db;
    for (long j = 0; j <= db; ++j) a[off + j] -= la * b[j];
    itrim(a);
    --e;
  }
  if (e > 0 && !a.empty()) {
    BigInt f = 1;
    for (long i = 0; i < e; ++i) f *= lb;
    for (auto& x : a) x *= f;
  }
  return a;
}

/// Exact division in Z[t]; returns nothing if d does not divide a.
inline std::optional<std::vector<BigInt>> int_divexact(
    std::vector<BigInt> a, const std::vector<BigInt>& d) {
  const long dd = ideg(d);
  if (dd < 0) throw std::domain_error("int_divexact: zero divisor");
  itrim(a);
  if (a.empty()) return std::vector<BigInt>{};
  if (ideg(a) < dd) return std::nullopt;
  std::vector<BigInt> q(a.size() - d.size() + 1);
  const BigInt& ld = d.back();
  for (long i = ideg(a); i >= dd;) {
    if (a[i] == 0) {
      --i;
      continue;
    }
    if (a[i] % ld != 0) return std::nullopt;
    BigInt f = a[i] / ld;
    const long off = i - dd;
    q[off] = f;
    for (long j = 0; j <= dd; ++j) a[off + j] -= f * d[j];
    --i;
  }
  itrim(a);
  if (!a.empty()) return std::nullopt;
  return q;
}

inline FpPoly reduce_mod(const std::vector<BigInt>& v, std::uint64_t p) {
  std::vector<std::uint64_t> c(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) c[i] = fp::reduce(v[i], p);
  return FpPoly(p, std::move(c));
}

inline std::uint64_t next_prime_below(std::uint64_t n) {
  if (n % 2 == 0) --n;
  while (!is_prime(BigInt(n))) n -= 2;
  return n;
}

}  // namespace gcd_detail

/// Subresultant polynomial remainder sequence over Z. Exact but slow on
/// large coprime inputs; kept as the unconditional fallback and as an
/// independent oracle for the modular route.
inline UPoly poly_gcd_subresultant(const UPoly& p, const UPoly& q) {
  using namespace gcd_detail;
  if (p.is_zero() && q.is_zero())
    throw std::domain_error("poly_gcd: both inputs zero");
  const char var = p.is_zero() ? q.var() : p.var();
  if (p.is_zero()) return q.monic();
  if (q.is_zero()) return p.monic();

  auto [sp, A] = p.primitive_int();
  auto [sq, B] = q.primitive_int();
  (void)sp;
  (void)sq;
  if (ideg(A) < ideg(B)) std::swap(A, B);
  if (ideg(B) == 0) return UPoly::one(var);

  BigInt g = 1, h = 1;
  while (true) {
    const long delta = ideg(A) - ideg(B);
    std::vector<BigInt> R = prem(A, B);
    if (R.empty()) {
      make_primitive(B);
      return UPoly::from_int_coeffs(B, var).monic();
    }
    if (ideg(R) == 0) return UPoly::one(var);
    BigInt div = g;
    for (long i = 0; i < delta; ++i) div *= h;
    for (auto& x : R) x /= div;
    A = std::move(B);
    B = std::move(R);
    g = A.back();
    // h = g^delta * h^(1-delta)
    if (delta == 0) {
      // h unchanged
    } else {
      BigInt gh = 1;
      for (long i = 0; i < delta; ++i) gh *= g;
      for (long i = 0; i < delta - 1; ++i) gh /= h;
      h = gh;
    }
  }
}

/// Monic gcd over Q. Rational inputs are cleared to primitive integer
/// polynomials; the answer is found from gcd images modulo word-size
/// primes and then certified exactly: a coprime image proves gcd = 1,
/// and a reconstructed candidate is accepted only after exact division
/// into both inputs (its degree being bounded above by the image degree).
inline UPoly poly_gcd(const UPoly& p, const UPoly& q) {
  using namespace gcd_detail;
  if (p.is_zero() && q.is_zero())
    throw std::domain_error("poly_gcd: both inputs zero");
  const char var = p.is_zero() ? q.var() : p.var();
  if (p.is_zero()) return q.monic();
  if (q.is_zero()) return p.monic();

  auto [sp, P] = p.primitive_int();
  auto [sq, Q] = q.primitive_int();
  (void)sp;
  (void)sq;
  if (ideg(P) == 0 || ideg(Q) == 0) return UPoly::one(var);

  const BigInt gamma = boost::multiprecision::gcd(P.back(), Q.back());

  long best_deg = -1;
  std::vector<BigInt> crt;  // coefficients mod M, in [0, M)
  BigInt M = 1;

  std::uint64_t prime = (1ull << 31) - 1;
  for (int tries = 0; tries < 64; ++tries, prime = next_prime_below(prime - 2)) {
    if (P.back() % prime == 0 || Q.back() % prime == 0) continue;
    FpPoly gp = fp_gcd(reduce_mod(P, prime), reduce_mod(Q, prime));
    if (gp.degree() == 0) return UPoly::one(var);
    if (best_deg != -1 && gp.degree() > best_deg) continue;  // unlucky prime
    FpPoly h = gp.scaled(fp::reduce(gamma, prime));
    if (best_deg == -1 || gp.degree() < best_deg) {
      best_deg = gp.degree();
      crt.assign(best_deg + 1, BigInt(0));
      for (long i = 0; i <= best_deg; ++i) crt[i] = BigInt(h.coeff(i));
      M = prime;
    } else {
      const std::uint64_t minv = fp::inv(fp::reduce(M, prime), prime);
      for (long i = 0; i <= best_deg; ++i) {
        std::uint64_t ri = fp::reduce(crt[i], prime);
        std::uint64_t d = fp::mul(fp::sub(fp::reduce(BigInt(h.coeff(i)), prime),
                                          ri, prime),
                                  minv, prime);
        crt[i] += M * d;
      }
      M *= prime;
    }
    // Symmetric lift and exact verification.
    std::vector<BigInt> cand = crt;
    for (auto& x : cand)
      if (2 * x > M) x -= M;
    itrim(cand);
    if (cand.empty() || ideg(cand) != best_deg) continue;
    make_primitive(cand);
    if (int_divexact(P, cand) && int_divexact(Q, cand))
      return UPoly::from_int_coeffs(cand, var).monic();
  }
  return poly_gcd_subresultant(p, q);
}

}  // namespace padic_lattes
