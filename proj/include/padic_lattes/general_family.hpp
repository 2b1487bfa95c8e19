#pragma once

#include <padic_lattes/bipoly.hpp>
#include <padic_lattes/config.hpp>
#include <padic_lattes/newton_polygon.hpp>
#include <padic_lattes/nf_dynamics.hpp>
#include <padic_lattes/orbit.hpp>
#include <padic_lattes/poly_gcd.hpp>
#include <padic_lattes/report.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace padic_lattes::general {

struct GenFamilyParams {
  long d = 2;
  BigInt p = 3;
};

inline void check_params(const GenFamilyParams& params) {
  if (params.d < 2) throw std::domain_error("general family: d must be >= 2");
  if (!is_prime(params.p)) throw std::domain_error("general family: p must be prime");
}

/// f_lambda(z) = (z^d + lambda) / (p z).
inline RatMap family_map(const GenFamilyParams& params, const Rat& lambda) {
  check_params(params);
  UPoly z = UPoly::variable('z');
  return RatMap(z.pow(static_cast<unsigned long>(params.d)) + UPoly(lambda, 'z'),
                Rat(params.p) * z);
}

/// Residue of a point of P^1(Q) under reduction mod p: the residue class
/// for v_p >= 0, infinity otherwise.
struct ResiduePoint {
  bool infinite = false;
  BigInt residue = 0;

  friend bool operator==(const ResiduePoint& a, const ResiduePoint& b) {
    if (a.infinite != b.infinite) return false;
    return a.infinite || a.residue == b.residue;
  }
  std::string str() const { return infinite ? "inf" : residue.str(); }
};

inline ResiduePoint rho_reduce(const ProjPoint& x, const BigInt& p) {
  if (!is_prime(p)) throw std::domain_error("rho_reduce: p must be prime");
  if (x.is_infinity()) return {true, 0};
  const Rat& r = x.affine();
  if (r.is_zero()) return {false, 0};
  if (val_of(r, p).value() < Rat(0)) return {true, 0};
  BigInt den_inv = 1;
  {
    // p is prime and does not divide the denominator here
    BigInt d = r.den() % p, acc = 1, base = d, e = p - 2;
    while (e > 0) {
      if (e % 2 == 1) acc = acc * base % p;
      base = base * base % p;
      e /= 2;
    }
    den_inv = acc;
  }
  BigInt res = (r.num() % p) * den_inv % p;
  if (res < 0) res += p;
  return {false, res};
}

inline ResiduePoint rho_reduce(const Rat& x, const BigInt& p) {
  return rho_reduce(ProjPoint(x), p);
}

/// Torsion pair with f_t^n(a) = A_n/B_n:
///   A_0 = a, B_0 = 1, A' = A^d + t B^d, B' = p A B^(d-1),
/// gcd-cancelled (only powers of t can cancel) with the removed factor
/// logged.
struct GenTorsionPair {
  GenFamilyParams params;
  Rat a;
  long n = 0;
  UPoly A, B;
  UPoly cancelled = UPoly::one('t');
};

inline GenTorsionPair gen_torsion_pair(const GenFamilyParams& params, const Rat& a,
                                       long n) {
  check_params(params);
  if (a.is_zero())
    throw std::domain_error("gen_torsion_pair: 0 is persistently preperiodic");
  if (n < 0) throw std::domain_error("gen_torsion_pair: n must be >= 0");
  check_cap(n, effective_caps().general, "general torsion pair");
  GenTorsionPair tp;
  tp.params = params;
  tp.a = a;
  tp.n = n;
  tp.A = UPoly(a, 't');
  tp.B = UPoly::one('t');
  const UPoly t = UPoly::variable('t');
  for (long i = 0; i < n; ++i) {
    UPoly rawA = tp.A.pow(static_cast<unsigned long>(params.d)) +
                 t * tp.B.pow(static_cast<unsigned long>(params.d));
    UPoly rawB = Rat(params.p) * tp.A *
                 tp.B.pow(static_cast<unsigned long>(params.d - 1));
    UPoly g = poly_gcd(rawA, rawB);
    if (g.degree() > 0) {
      rawA = rawA.divexact(g);
      rawB = rawB.divexact(g);
      tp.cancelled *= g;
    }
    tp.A = std::move(rawA);
    tp.B = std::move(rawB);
  }
  return tp;
}

inline UPoly periodicity_poly(const GenFamilyParams& params, const Rat& a, long n,
                              long m) {
  if (!(n > m && m >= 0))
    throw std::domain_error("general periodicity: need n > m >= 0");
  GenTorsionPair tn = gen_torsion_pair(params, a, n);
  GenTorsionPair tm = gen_torsion_pair(params, a, m);
  UPoly p = tn.A * tm.B - tm.A * tn.B;
  if (p.is_zero()) throw std::domain_error("general periodicity: zero polynomial");
  for (long k = 0; k <= n; ++k) {
    GenTorsionPair tk = gen_torsion_pair(params, a, k);
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

/// Verifies |alpha^d + lambda|_p < 1 for all torsion parameters at levels
/// up to n, through the shifted variable s = lambda + a^d: Newton polygons
/// of the shifted torsion and periodicity polynomials must only carry
/// root valuations >= 1 (the exact root s = 0 counts as +infinity).
struct ShiftedSpectrumReport {
  GenFamilyParams params;
  Rat a;
  long n = 0;
  std::vector<std::pair<std::string, RootValuationSpectrum>> spectra;
  bool pass = true;
};

inline ShiftedSpectrumReport shifted_spectrum_check(const GenFamilyParams& params,
                                                    const Rat& a, long n) {
  check_params(params);
  if (a.is_zero()) throw std::domain_error("shifted_spectrum_check: a must be nonzero");
  if (val_of(a, params.p).value() < Rat(0))
    throw std::domain_error("shifted_spectrum_check: requires |a|_p <= 1");
  ShiftedSpectrumReport rep;
  rep.params = params;
  rep.a = a;
  rep.n = n;

  const Rat shift = -a.pow(params.d);  // lambda = s - a^d
  std::vector<std::pair<std::string, UPoly>> polys;
  for (long k = 1; k <= n; ++k) {
    GenTorsionPair tk = gen_torsion_pair(params, a, k);
    polys.emplace_back("A_" + std::to_string(k), tk.A);
    for (long m = 0; m < k; ++m)
      polys.emplace_back("P_" + std::to_string(k) + "_" + std::to_string(m),
                         periodicity_poly(params, a, k, m));
  }
  for (const auto& [name, poly] : polys) {
    UPoly shifted = poly.taylor_shift(shift);
    if (shifted.degree() < 1) continue;
    RootValuationSpectrum sp = root_valuations(shifted, params.p);
    for (const auto& [v, mult] : sp.entries)
      if (v < Rat(1)) rep.pass = false;
    rep.spectra.emplace_back(name, std::move(sp));
  }
  return rep;
}

/// Escape certificate from the growth regime
/// |f^{n+1}(alpha)|_p = p |f^n(alpha)|_p^{d-1}.
inline std::optional<EscapeCertificate> gen_escape_check(const GenFamilyParams& params,
                                                         const Rat& alpha,
                                                         const Rat& lambda) {
  check_params(params);
  if (alpha.is_zero()) return std::nullopt;
  const Rat va = val_of(alpha, params.p).value();
  const Rat vl = lambda.is_zero() ? Rat(0) : val_of(lambda, params.p).value();
  if (va >= Rat(0) && !lambda.is_zero() && vl < Rat(0))
    return EscapeCertificate{"general-lambda-outside-unit-disc"};
  if (va >= Rat(0) && (lambda.is_zero() || vl >= Rat(0))) {
    const Rat shifted = alpha.pow(params.d) + lambda;
    if (shifted.is_zero()) return std::nullopt;
    if (val_of(shifted, params.p).value() <= Rat(0))
      return EscapeCertificate{"general-unit-shift-defect"};
    return std::nullopt;
  }
  if (va < Rat(0) && (lambda.is_zero() || vl >= Rat(0)))
    return EscapeCertificate{"general-seed-outside-unit-disc"};
  return std::nullopt;
}

inline EscapePredicate make_orbit_predicate(const GenFamilyParams& params,
                                            const Rat& lambda) {
  return [params, lambda](const ProjPoint& w) -> std::optional<EscapeCertificate> {
    if (w.is_infinity() || w.affine().is_zero()) return std::nullopt;
    return gen_escape_check(params, w.affine(), lambda);
  };
}

/// Cross-gcd disjointness for seeds with distinct residues rho(a^d),
/// plus the residue-level incompatibility of the two shifted constraints.
struct DisjointnessReport {
  GenFamilyParams params;
  Rat a, b;
  long n = 0;
  bool refused = false;
  std::string refusal_reason;
  UPoly gcd_AA, gcd_AB, gcd_BA, gcd_BB;
  ResiduePoint rho_a, rho_b;
  bool residues_incompatible = false;
  bool pass = false;
};

inline DisjointnessReport disjointness_check(const GenFamilyParams& params,
                                             const Rat& a, const Rat& b, long n) {
  check_params(params);
  if (a.is_zero() || b.is_zero())
    throw std::domain_error("disjointness_check: seeds must be nonzero");
  DisjointnessReport rep;
  rep.params = params;
  rep.a = a;
  rep.b = b;
  rep.n = n;
  rep.rho_a = rho_reduce(a.pow(params.d), params.p);
  rep.rho_b = rho_reduce(b.pow(params.d), params.p);
  if (rep.rho_a == rep.rho_b) {
    rep.refused = true;
    rep.refusal_reason = "rho(a^d) == rho(b^d) == " + rep.rho_a.str();
    return rep;
  }
  GenTorsionPair ta = gen_torsion_pair(params, a, n);
  GenTorsionPair tb = gen_torsion_pair(params, b, n);
  rep.gcd_AA = poly_gcd(ta.A, tb.A);
  rep.gcd_AB = poly_gcd(ta.A, tb.B);
  rep.gcd_BA = poly_gcd(ta.B, tb.A);
  rep.gcd_BB = poly_gcd(ta.B, tb.B);
  // Residue-level argument: |a^d + lambda| < 1 and |b^d + lambda| < 1
  // would force rho(-a^d) = rho(lambda) = rho(-b^d) when both sides have
  // nonnegative valuation, against rho(a^d) != rho(b^d); a seed with
  // negative valuation instead certifies escape for every integral lambda.
  rep.residues_incompatible = !(rep.rho_a == rep.rho_b);
  rep.pass = rep.residues_incompatible && rep.gcd_AA.degree() == 0 &&
             rep.gcd_AB.degree() == 0 && rep.gcd_BA.degree() == 0 &&
             rep.gcd_BB.degree() == 0;
  return rep;
}

/// The two conjugation identities of the closing remark, plus the noted
/// (not machine-checked) non-isotriviality for d >= 3.
inline std::vector<CheckRecord> conjugation_examples() {
  std::vector<CheckRecord> out;
  const char* fam = "general";

  // (i) (d, p) = (2, 2): conjugating (z^2+1)/(2z) by L(z) = 2z - 1 gives
  // z^2/(2z-1), a map with 2-adic good reduction.
  {
    UPoly z = UPoly::variable('z');
    RatMap g(z * z + UPoly::one('z'), Rat(2) * z);
    RatMap L(Rat(2) * z - UPoly::one('z'), UPoly::one('z'));
    RatMap conj = mobius_conjugate(g, L);
    RatMap want(z * z, Rat(2) * z - UPoly::one('z'));
    out.push_back({fam, "conjugation-L-good-reduction", Json{{"d", 2}, {"p", 2}},
                   want.str(), conj.str(), conj == want});
  }
  // (ii) isotriviality for d = 2: f_{c^2}(c z) = c (z^2 + 1)/(p z), as an
  // exact identity in (c, z), for each small prime p.
  for (long p : {2L, 3L, 5L}) {
    const BiPoly c = BiPoly::first('u', 'z');
    const BiPoly z = BiPoly::second('u', 'z');
    const BiPoly cz = c * z;
    const BiPoly numL = cz * cz + c * c;
    const BiPoly denL = Rat(BigInt(p)) * cz;
    const BiPoly numR = c * (z * z + BiPoly(Rat(1), 'u', 'z'));
    const BiPoly denR = Rat(BigInt(p)) * z;
    const bool ok = ratfun_equal({numL, denL}, {numR, denR});
    out.push_back({fam, "isotriviality-d2", Json{{"d", 2}, {"p", p}}, true, ok, ok});
  }
  // (iii) d >= 3 non-isotriviality is an analytic statement over C;
  // recorded as out of computational scope.
  out.push_back({fam, "non-isotriviality-d-ge-3", Json{{"d", ">=3"}},
                 "noted (not machine-checked)", "noted (not machine-checked)",
                 true});
  return out;
}

/// For d = 2 the finite fixed points are +/- sqrt(lambda/(p-1)) with
/// multiplier (2-p)/p; checked over Q when lambda/(p-1) is a rational
/// square and generically in Q[x]/(x^2 - c) otherwise.
inline std::vector<CheckRecord> fixed_point_multiplier_checks() {
  std::vector<CheckRecord> out;
  const char* fam = "general";
  // Rational-square instance: p = 3, lambda = 2 gives fixed points +/- 1.
  {
    GenFamilyParams params{2, 3};
    RatMap f = family_map(params, Rat(2));
    const Rat m = multiplier_at(f, ProjPoint(Rat(1)));
    const Rat want = Rat(2 - 3) / Rat(3);
    out.push_back({fam, "fixed-multiplier-rational", Json{{"d", 2}, {"p", 3}, {"lambda", "2"}},
                   want.str(), m.str(), m == want});
  }
  // Formal-square-root instance: p = 5, lambda = 8, fixed points +/- sqrt(2).
  {
    GenFamilyParams params{2, 5};
    RatMap f = family_map(params, Rat(8));
    const UPoly modulus({Rat(-2), Rat(0), Rat(1)}, 'x');  // x^2 - 2
    const NFElem root2 = NFElem::generator(modulus);
    const NFElem m = multiplier_at_nf(f, root2);
    const NFElem want(Rat(2 - 5) / Rat(5), modulus);
    out.push_back({fam, "fixed-multiplier-formal-sqrt",
                   Json{{"d", 2}, {"p", 5}, {"lambda", "8"}, {"modulus", "x^2 - 2"}},
                   want.str(), m.str(), m == want});
  }
  return out;
}

}  // namespace padic_lattes::general
