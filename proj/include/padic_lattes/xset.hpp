#pragma once

#include <padic_lattes/rat.hpp>
#include <padic_lattes/valuation.hpp>

#include <optional>
#include <string>
#include <vector>

namespace padic_lattes {

/// Witness that 2^q lies in the set X of absolute-value ratios that can
/// occur for parameters torsion over two seeds at once. family names the
/// generator; r, s the exponents (s meaningful for the two-parameter
/// families only, where r != s is required).
struct XWitness {
  std::string family;
  long r = 0;
  long s = 0;
};

struct XDecision {
  bool member = false;
  std::optional<XWitness> witness;
  long search_bound = 0;
};

/// Decides whether 2^q lies in
///   X = {1, 2^(1/4^r), 2^(1/(3*4^r)), 2^((1/3)(1/4^r - 1/4^s)),
///        2^(2/(3*4^r)), 2^((2/3)(1/4^r - 1/4^s)),
///        4^(1/(3*4^r)) * 2^(1/(3*4^s)) : r, s in N, r != s}.
/// Bounded search is complete: every nonzero generator exponent with
/// parameter M = max(r, s) has reduced denominator at least 4^M / 3, so
/// M is bounded by half the bit length of den(q) plus a small margin.
inline XDecision x_membership(const Rat& q) {
  XDecision d;
  const long bits =
      q.den() == 1 ? 0 : static_cast<long>(boost::multiprecision::msb(q.den()));
  d.search_bound = std::max<long>(6, bits / 2 + 2);

  if (q.is_zero()) {
    d.member = true;
    d.witness = XWitness{"1", 0, 0};
    return d;
  }

  auto pow4 = [](long r) { return Rat(BigInt(1) << (2 * r)); };
  auto check = [&](const Rat& value, const char* family, long r,
                   long s) -> bool {
    if (value == q) {
      d.member = true;
      d.witness = XWitness{family, r, s};
      return true;
    }
    return false;
  };

  for (long r = 0; r <= d.search_bound; ++r) {
    const Rat inv4r = pow4(r).inverse();
    if (check(inv4r, "2^{1/4^r}", r, 0)) return d;
    if (check(inv4r / Rat(3), "2^{1/(3*4^r)}", r, 0)) return d;
    if (check(Rat(2) * inv4r / Rat(3), "2^{2/(3*4^r)}", r, 0)) return d;
    for (long s = 0; s <= d.search_bound; ++s) {
      if (s == r) continue;
      const Rat inv4s = pow4(s).inverse();
      const Rat diff = (inv4r - inv4s) / Rat(3);
      if (check(diff, "2^{(1/3)(1/4^r-1/4^s)}", r, s)) return d;
      if (check(Rat(2) * diff, "2^{(2/3)(1/4^r-1/4^s)}", r, s)) return d;
      if (check(Rat(2) * inv4r / Rat(3) + inv4s / Rat(3),
                "4^{1/(3*4^r)}*2^{1/(3*4^s)}", r, s))
        return d;
    }
  }
  return d;
}

/// Outcome of the impossible-intersection test for seeds whose ratio has
/// valuation v_ratio in (1/e)Z.
struct EmptinessResult {
  bool certified = false;
  std::string reason;  // certificate kind, or the refusal reason
  XDecision forward, backward;
};

/// Certifies T(alpha) n T(beta) empty from gcd(6, e) = 1, a nonzero
/// ratio valuation, and the cube ratio not being -8 or -1/8. The
/// certificate re-checks both ratio directions against X; the |q| = 1
/// case is excluded by the cube-ratio clause instead.
inline EmptinessResult emptiness_certificate(const Rat& v_ratio, long e,
                                             bool cube_ratio_is_special) {
  if (e <= 0) throw std::domain_error("emptiness_certificate: e must be positive");
  EmptinessResult res;
  if (!(v_ratio * Rat(BigInt(e))).is_integer()) {
    res.reason = "refusal: v_ratio not in (1/e)Z";
    return res;
  }
  if (e % 2 == 0 || e % 3 == 0) {
    res.reason = "refusal: ramification index shares a factor with 6";
    return res;
  }
  if (v_ratio.is_zero()) {
    res.reason = "refusal: equal absolute values";
    return res;
  }
  if (cube_ratio_is_special) {
    res.reason = "refusal: exception case (alpha/beta)^3 in {-8, -1/8}";
    return res;
  }
  const Rat q = -v_ratio;  // log2 |alpha/beta|
  res.forward = x_membership(q);
  res.backward = x_membership(-q);
  if (q.abs() == Rat(1)) {
    // |ratio| = 2 or 1/2 occurs only when the cube ratio is -1/8 or -8,
    // which the caller has excluded.
    res.certified = true;
    res.reason = "certificate: ratio 2 excluded by the cube-ratio clause";
    return res;
  }
  if (!res.forward.member && !res.backward.member) {
    res.certified = true;
    res.reason = "certificate: neither ratio direction lies in X";
    return res;
  }
  res.reason = "refusal: ratio lies in X";
  return res;
}

}  // namespace padic_lattes
