#pragma once

#include <padic_lattes/upoly.hpp>

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

namespace padic_lattes {

struct RootFinding {
  std::vector<std::pair<Rat, long>> roots;  // (root, multiplicity), sorted
  /// False when a coefficient resisted trial-division factoring, in which
  /// case roots may be missing (never wrong).
  bool complete = true;
};

namespace roots_detail {

inline std::optional<std::map<BigInt, long>> factor_trial(
    BigInt n, unsigned long bound = 1000000) {
  std::map<BigInt, long> f;
  if (n < 0) n = -n;
  if (n == 0) return std::nullopt;
  for (BigInt d = 2; d * d <= n && d <= bound; d == 2 ? d = 3 : d += 2) {
    while (n % d == 0) {
      ++f[d];
      n /= d;
    }
  }
  if (n > 1) {
    if (n > bound * BigInt(bound)) return std::nullopt;  // n prime? only if small enough to trust
    ++f[n];
  }
  return f;
}

inline std::vector<BigInt> divisors(const std::map<BigInt, long>& f,
                                    std::size_t cap = 200000) {
  std::vector<BigInt> out{1};
  for (const auto& [p, e] : f) {
    const std::size_t base = out.size();
    BigInt pk = 1;
    for (long k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) {
        out.push_back(out[i] * pk);
        if (out.size() > cap) return {};
      }
    }
  }
  return out;
}

}  // namespace roots_detail

/// Rational roots with multiplicity, by the rational-root theorem over a
/// primitive integer model. No factorization into irreducibles is
/// attempted beyond trial division of the two end coefficients.
inline RootFinding rational_roots(const UPoly& input) {
  RootFinding out;
  if (input.is_zero()) {
    out.complete = false;
    return out;
  }
  UPoly p = input;
  const long o = p.ord0();
  if (o > 0) {
    out.roots.emplace_back(Rat(0), o);
    p = p.divexact(UPoly::variable(p.var()).pow(static_cast<unsigned long>(o)));
  }
  if (p.degree() == 0) return out;

  auto [scale, ic] = p.primitive_int();
  (void)scale;
  UPoly q = UPoly::from_int_coeffs(ic, p.var());

  auto record_root = [&](const Rat& r) {
    UPoly lin({-r, Rat(1)}, q.var());
    long mult = 0;
    while (true) {
      auto [quo, rem] = q.divmod(lin);
      if (!rem.is_zero()) break;
      q = quo;
      ++mult;
    }
    if (mult > 0) out.roots.emplace_back(r, mult);
  };

  if (q.degree() == 1) {
    record_root(-q.coeff(0) / q.coeff(1));
  } else if (q.degree() == 2) {
    const Rat a = q.coeff(2), b = q.coeff(1), c = q.coeff(0);
    const Rat disc = b * b - Rat(4) * a * c;
    if (disc >= Rat(0) && disc.is_integer()) {
      const BigInt s = boost::multiprecision::sqrt(disc.num());
      if (s * s == disc.num()) {
        record_root((-b + Rat(s)) / (Rat(2) * a));
        record_root((-b - Rat(s)) / (Rat(2) * a));
      }
    }
  } else if (q.degree() >= 3) {
    const auto f0 = roots_detail::factor_trial(q.coeff(0).num());
    const auto fl = roots_detail::factor_trial(q.lead().num());
    if (!f0 || !fl) {
      out.complete = false;
    } else {
      auto us = roots_detail::divisors(*f0);
      auto ws = roots_detail::divisors(*fl);
      if (us.empty() || ws.empty()) {
        out.complete = false;
      } else {
        for (const auto& u : us)
          for (const auto& w : ws) {
            if (boost::multiprecision::gcd(u, w) != 1) continue;
            for (int sign : {1, -1}) {
              const Rat cand(sign * u, w);
              if (q.eval(cand).is_zero()) record_root(cand);
            }
          }
      }
    }
  }
  std::sort(out.roots.begin(), out.roots.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

}  // namespace padic_lattes
