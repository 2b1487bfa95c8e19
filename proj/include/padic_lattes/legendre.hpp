#pragma once

#include <padic_lattes/bipoly.hpp>
#include <padic_lattes/config.hpp>
#include <padic_lattes/newton_polygon.hpp>
#include <padic_lattes/orbit.hpp>
#include <padic_lattes/poly_gcd.hpp>
#include <padic_lattes/rational_roots.hpp>
#include <padic_lattes/report.hpp>

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace padic_lattes::legendre {

/// The Lattes map of the duplication on y^2 = x(x-1)(x-lambda):
/// f_lambda(z) = (z^2 - lambda)^2 / (4 z (z - 1)(z - lambda)).
inline RatMap family_map(const Rat& lambda) {
  if (lambda.is_zero() || lambda == Rat(1))
    throw std::domain_error("legendre: lambda must avoid {0, 1}");
  UPoly z = UPoly::variable('z');
  UPoly num = (z * z - UPoly(lambda, 'z')).pow(2);
  UPoly den = Rat(4) * (z * (z - UPoly(Rat(1), 'z')) * (z - UPoly(lambda, 'z')));
  return RatMap(std::move(num), std::move(den));
}

/// lambda-coefficient pair with f_t^n(a) = A_n(t)/B_n(t):
///   A_0 = a, B_0 = 1,
///   A' = (A^2 - t B^2)^2, B' = 4 A B (A - B)(A - t B),
/// both divided by their gcd at every step (only powers of t and t-1 can
/// ever cancel). The removed product is logged in `cancelled`.
struct LegendreTorsionPair {
  Rat a;
  long n = 0;
  UPoly A, B;
  UPoly cancelled = UPoly::one('t');
};

namespace detail {
inline std::pair<UPoly, UPoly> step(const UPoly& A, const UPoly& B) {
  const UPoly t = UPoly::variable('t');
  UPoly rawA = (A * A - t * (B * B)).pow(2);
  UPoly rawB = Rat(4) * (A * B * (A - B) * (A - t * B));
  return {std::move(rawA), std::move(rawB)};
}
}  // namespace detail

inline const LegendreTorsionPair& legendre_torsion_pair(const Rat& a, long n) {
  if (a.is_zero() || a == Rat(1))
    throw std::domain_error("legendre_torsion_pair: seed in {0, 1} is persistently preperiodic");
  if (n < 0) throw std::domain_error("legendre_torsion_pair: n must be >= 0");
  check_cap(n, effective_caps().legendre, "legendre torsion pair");

  static std::mutex mu;
  static std::map<std::pair<std::string, long>, std::unique_ptr<LegendreTorsionPair>> cache;
  const std::pair<std::string, long> key{a.str(), n};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;
  }

  auto tp = std::make_unique<LegendreTorsionPair>();
  tp->a = a;
  tp->n = n;
  tp->A = UPoly(a, 't');
  tp->B = UPoly::one('t');
  for (long i = 0; i < n; ++i) {
    auto [rawA, rawB] = detail::step(tp->A, tp->B);
    UPoly g = poly_gcd(rawA, rawB);
    if (g.degree() > 0) {
      rawA = rawA.divexact(g);
      rawB = rawB.divexact(g);
      tp->cancelled *= g;
    }
    tp->A = std::move(rawA);
    tp->B = std::move(rawB);
  }
  if (n > 0 && poly_gcd(tp->A, tp->B).degree() != 0)
    throw std::logic_error("legendre_torsion_pair: pair not coprime");

  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.emplace(key, std::move(tp));
  (void)inserted;
  return *it->second;
}

/// A_n B_m - A_m B_n, with factors shared with lower levels divided out.
inline UPoly periodicity_poly(const Rat& a, long n, long m) {
  if (!(n > m && m >= 0)) throw std::domain_error("legendre periodicity: need n > m >= 0");
  const auto& tn = legendre_torsion_pair(a, n);
  const auto& tm = legendre_torsion_pair(a, m);
  UPoly p = tn.A * tm.B - tm.A * tn.B;
  if (p.is_zero()) throw std::domain_error("legendre periodicity: zero polynomial");
  for (long k = 0; k <= n; ++k) {
    const auto& tk = legendre_torsion_pair(a, k);
    for (const UPoly* q : {&tk.A, &tk.B}) {
      while (true) {
        UPoly g = poly_gcd(p, *q);
        if (g.degree() == 0) break;
        p = p.divexact(g);
      }
    }
  }
  return p;
}

/// Stoll-bound escape certificate: the orbit enters the doubling regime
/// |f^{n+1}(alpha)| = 4 |f^n(alpha)| and can never return, so alpha is
/// not torsion for this lambda (lambda = alpha itself excluded).
inline std::optional<EscapeCertificate> stoll_escape_check(const Rat& alpha,
                                                           const Rat& lambda) {
  if (alpha.is_zero() || alpha == Rat(1) || alpha == lambda) return std::nullopt;
  const Rat va = val_of(alpha, 2).value();
  const Rat vl = val_of(lambda, 2).value();
  if (va >= Rat(0) && vl < Rat(0))
    return EscapeCertificate{"legendre-lambda-outside-unit-disc"};
  if (va >= Rat(0) && vl >= Rat(0)) {
    const Rat diff = alpha * alpha - lambda;
    if (diff.is_zero()) return std::nullopt;
    if (val_of(diff, 2).value() <= Rat(0))
      return EscapeCertificate{"legendre-unit-square-defect"};
    return std::nullopt;
  }
  if (va < Rat(0) && vl >= Rat(0))
    return EscapeCertificate{"legendre-seed-outside-unit-disc"};
  return std::nullopt;
}

inline EscapePredicate make_orbit_predicate(const Rat& lambda) {
  return [lambda](const ProjPoint& w) -> std::optional<EscapeCertificate> {
    if (w.is_infinity() || w.affine().is_zero() || w.affine() == Rat(1))
      return std::nullopt;
    return stoll_escape_check(w.affine(), lambda);
  };
}

/// Spectrum evidence for "lambda in T(2) \ {2} forces |lambda| = 1/4":
/// every level-<=n torsion polynomial for the seed, after removing the
/// roots at the seed itself and at the degenerate parameters 0 and 1,
/// must have all of its root valuations equal to `expected`.
struct T2ClaimReport {
  Rat seed;
  long n = 0;
  Rat expected_valuation;
  std::vector<std::pair<std::string, RootValuationSpectrum>> spectra;
  std::vector<Rat> rational_roots_seen;
  bool pass = true;
};

namespace detail {
/// Removes every (t - r)^k factor, returning k.
inline long strip_root(UPoly& p, const Rat& r) {
  const UPoly lin({-r, Rat(1)}, p.var());
  long count = 0;
  while (true) {
    auto [q, rem] = p.divmod(lin);
    if (!rem.is_zero()) break;
    p = q;
    ++count;
  }
  return count;
}
}  // namespace detail

inline T2ClaimReport t2_claim_verify(const Rat& seed, long n,
                                     const Rat& expected_valuation) {
  T2ClaimReport rep;
  rep.seed = seed;
  rep.n = n;
  rep.expected_valuation = expected_valuation;

  std::vector<std::pair<std::string, UPoly>> polys;
  for (long k = 1; k <= n; ++k) {
    const auto& tk = legendre_torsion_pair(seed, k);
    polys.emplace_back("A_" + std::to_string(k), tk.A);
    polys.emplace_back("B_" + std::to_string(k), tk.B);
  }
  for (long k = 1; k <= std::min<long>(n, 3); ++k)
    for (long m = 0; m < k; ++m)
      polys.emplace_back("P_" + std::to_string(k) + "_" + std::to_string(m),
                         periodicity_poly(seed, k, m));

  for (auto& [name, poly] : polys) {
    UPoly p = poly;
    detail::strip_root(p, seed);   // the seed is torsion for lambda = seed
    detail::strip_root(p, Rat(1)); // degenerate parameter
    if (p.degree() < 1) continue;
    RootValuationSpectrum sp = root_valuations(p, 2);
    for (const auto& [v, mult] : sp.entries)
      if (v != expected_valuation) rep.pass = false;
    // zero roots (degenerate parameter 0) are excluded via ord0
    rep.spectra.emplace_back(name, std::move(sp));
    auto rf = rational_roots(p);
    for (const auto& [root, mult] : rf.roots)
      if (!root.is_zero()) rep.rational_roots_seen.push_back(root);
  }
  std::sort(rep.rational_roots_seen.begin(), rep.rational_roots_seen.end());
  rep.rational_roots_seen.erase(std::unique(rep.rational_roots_seen.begin(),
                                            rep.rational_roots_seen.end()),
                                rep.rational_roots_seen.end());
  return rep;
}

inline T2ClaimReport t2_claim_verify(long n) {
  if (n < 2) throw std::domain_error("t2_claim_verify: n must be >= 2");
  return t2_claim_verify(Rat(2), n, Rat(2));
}

/// f^n_{1/lambda}(1/x) = (1/lambda) f^n_lambda(x), as an exact identity of
/// rational functions in (x, lambda), by symbolic iteration.
inline bool reciprocal_identity_check(long n) {
  if (n < 1 || n > 3)
    throw std::domain_error("reciprocal_identity_check: n must be in {1,2,3}");
  const char vx = 'z', vl = 't';
  const BiPoly x = BiPoly::first(vx, vl);
  const BiPoly lam = BiPoly::second(vx, vl);
  BiPoly P = x, Q = BiPoly(Rat(1), vx, vl);
  for (long i = 0; i < n; ++i) {
    BiPoly P2 = P * P, Q2 = Q * Q;
    BiPoly newP = (P2 - lam * Q2).pow(2);
    BiPoly newQ = Rat(4) * (P * Q * (P - Q) * (P - lam * Q));
    P = std::move(newP);
    Q = std::move(newQ);
  }
  const long dx = std::max(P.degree_first(), Q.degree_first());
  const long dl = std::max(P.degree_second(), Q.degree_second());
  // LHS = P(1/x, 1/l) / Q(1/x, 1/l), cleared by x^dx l^dl on both sides.
  const BiPoly Prev = P.reversed(dx, dl);
  const BiPoly Qrev = Q.reversed(dx, dl);
  // RHS = (1/l) P/Q = P / (l Q).
  return ratfun_equal({Prev, Qrev}, {P, lam * Q});
}

}  // namespace padic_lattes::legendre
