#pragma once

#include <padic_lattes/bipoly.hpp>
#include <padic_lattes/config.hpp>
#include <padic_lattes/fppoly.hpp>
#include <padic_lattes/newton_polygon.hpp>
#include <padic_lattes/nf_dynamics.hpp>
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

namespace padic_lattes::weierstrass {

/// The Lattes map of the duplication on y^2 = x^3 + lambda:
/// f_lambda(z) = (z^4 - 8*lambda*z) / (4*(z^3 + lambda)).
inline RatMap family_map(const Rat& lambda) {
  if (lambda.is_zero()) throw std::domain_error("weierstrass: lambda must be nonzero");
  UPoly z = UPoly::variable('z');
  return RatMap(z.pow(4) - Rat(8) * lambda * z,
                Rat(4) * z.pow(3) + Rat(4) * lambda * UPoly::one('z'));
}

/// Good-reduction conjugate g(z) = (z^4 - 2z)/(4z^3 + 1).
inline RatMap map_g() {
  UPoly z = UPoly::variable('z');
  return RatMap(z.pow(4) - Rat(2) * z, Rat(4) * z.pow(3) + UPoly::one('z'));
}

/// phi(z) = 1/g(1/z) = (z^4 + 4z)/(1 - 2z^3).
inline RatMap map_phi() { return map_g().reciprocal_conjugate(); }

/// The torsion-parameter pair A_n(a, t), B_n(a, t):
///   A_0 = a, B_0 = 1,
///   A_{n+1} = A_n^4 - 8 t A_n B_n^3,
///   B_{n+1} = 4 B_n A_n^3 + 4 t B_n^4,
/// so that f_t^n(a) = A_n / B_n. Construction checks gcd(A, B) = 1,
/// deg A = deg B = (4^n - 1)/3 and t not dividing either.
struct TorsionPair {
  Rat a;
  long n = 0;
  UPoly A, B;
};

inline long expected_degree(long n) {
  return (((BigInt(1) << (2 * n)) - 1) / 3).convert_to<long>();
}

namespace detail {

/// Integer-scaled recursion: with a = u/v, run the recursion on the
/// integer pair (u, v); both entries pick up the common factor v^(4^n),
/// which divides out at the end. Keeps every coefficient an integer on
/// the way, which the Rat fast paths turn into pure bigint arithmetic.
inline std::pair<UPoly, UPoly> torsion_raw(const Rat& a, long n) {
  UPoly A(Rat(a.num()), 't'), B(Rat(a.den()), 't');
  const UPoly t = UPoly::variable('t');
  for (long i = 0; i < n; ++i) {
    UPoly A3 = A * A * A;
    UPoly B3 = B * B * B;
    UPoly An = A3 * A - Rat(8) * (t * (A * B3));
    UPoly Bn = Rat(4) * (B * A3) + Rat(4) * (t * (B3 * B));
    A = std::move(An);
    B = std::move(Bn);
  }
  if (a.den() != 1) {
    const Rat scale = Rat(BigInt(1), boost::multiprecision::pow(
                                         a.den(), (BigInt(1) << (2 * n)).convert_to<unsigned>()));
    A = scale * A;
    B = scale * B;
  }
  return {A, B};
}

}  // namespace detail

inline const TorsionPair& torsion_pair(const Rat& a, long n) {
  if (a.is_zero()) throw std::domain_error("torsion_pair: a must be nonzero");
  if (n < 0) throw std::domain_error("torsion_pair: n must be >= 0");
  check_cap(n, effective_caps().weierstrass, "weierstrass torsion_pair");

  static std::mutex mu;
  static std::map<std::pair<std::string, long>, std::unique_ptr<TorsionPair>> cache;
  const std::pair<std::string, long> key{a.str(), n};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;
  }

  auto tp = std::make_unique<TorsionPair>();
  tp->a = a;
  tp->n = n;
  std::tie(tp->A, tp->B) = detail::torsion_raw(a, n);
  const long d = expected_degree(n);
  if (tp->A.degree() != d || tp->B.degree() != d)
    throw std::logic_error("torsion_pair: degree law violated");
  if (tp->A.ord0() != 0 || tp->B.ord0() != 0)
    throw std::logic_error("torsion_pair: t divides A_n or B_n");
  if (n > 0 && poly_gcd(tp->A, tp->B).degree() != 0)
    throw std::logic_error("torsion_pair: A_n, B_n not coprime");

  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.emplace(key, std::move(tp));
  (void)inserted;
  return *it->second;
}

/// Encodes f_t^n(a) = f_t^m(a) as A_n B_m - A_m B_n, with every factor
/// shared with some A_k or B_k (k <= n) divided out; the surviving roots
/// are parameters with a periodic orbit that never collapses onto 0 or
/// infinity.
inline UPoly periodicity_poly(const Rat& a, long n, long m) {
  if (!(n > m && m >= 0)) throw std::domain_error("periodicity_poly: need n > m >= 0");
  if (a.is_zero()) throw std::domain_error("periodicity_poly: a must be nonzero");
  const TorsionPair& tn = torsion_pair(a, n);
  const TorsionPair& tm = torsion_pair(a, m);
  UPoly p = tn.A * tm.B - tm.A * tn.B;
  if (p.is_zero()) throw std::domain_error("periodicity_poly: zero polynomial");
  for (long k = 0; k <= n; ++k) {
    const TorsionPair& tk = torsion_pair(a, k);
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

/// Trichotomy of parameter valuations for a seed of valuation v(alpha):
///   Generic           v(lambda) = 3v(a) - 2            (orbit avoids 0, inf)
///   HitsInfinity(m)   v(lambda) = 3v(a) - 2 + 2/4^m    (m = 0: lambda = -a^3)
///   HitsZero(m)       v(lambda) = 3v(a) - 2 - 1/4^m    (m = 0: lambda = a^3/8)
///   Impossible        anything else certifies lambda not in T(alpha).
struct TrichotomyClass {
  enum class Variant { Generic, HitsInfinity, HitsZero, Impossible };
  Variant variant = Variant::Impossible;
  long m = 0;

  bool operator==(const TrichotomyClass&) const = default;
  std::string str() const {
    switch (variant) {
      case Variant::Generic: return "Generic";
      case Variant::HitsInfinity: return "HitsInfinity(" + std::to_string(m) + ")";
      case Variant::HitsZero: return "HitsZero(" + std::to_string(m) + ")";
      default: return "Impossible";
    }
  }
};

namespace detail {
// q == 4^m for some m >= 0?
inline std::optional<long> log4_exact(const Rat& q) {
  if (!q.is_integer() || q.num() <= 0) return std::nullopt;
  const BigInt& v = q.num();
  if (v == 1) return 0;
  const unsigned long b = boost::multiprecision::lsb(v);
  if ((BigInt(1) << b) != v || b % 2 != 0) return std::nullopt;
  return static_cast<long>(b / 2);
}
}  // namespace detail

inline TrichotomyClass trichotomy_classify(const Val& v_alpha, const Val& v_lambda) {
  if (v_alpha.is_infinite() || v_lambda.is_infinite())
    throw std::domain_error("trichotomy_classify: valuations must be finite");
  const Rat delta = v_lambda.value() - Rat(3) * v_alpha.value() + Rat(2);
  TrichotomyClass out;
  if (delta.is_zero()) {
    out.variant = TrichotomyClass::Variant::Generic;
    return out;
  }
  if (delta > Rat(0)) {
    if (auto m = detail::log4_exact(Rat(2) / delta)) {
      out.variant = TrichotomyClass::Variant::HitsInfinity;
      out.m = *m;
    }
    return out;
  }
  if (auto m = detail::log4_exact(-delta.inverse())) {
    out.variant = TrichotomyClass::Variant::HitsZero;
    out.m = *m;
  }
  return out;
}

/// For the m = 0 classes the theorem pins lambda exactly; checks it when
/// both values are available.
inline bool trichotomy_exact_check(const Rat& alpha, const Rat& lambda,
                                   const TrichotomyClass& cls) {
  if (cls.variant == TrichotomyClass::Variant::HitsInfinity && cls.m == 0)
    return lambda == -alpha.pow(3);
  if (cls.variant == TrichotomyClass::Variant::HitsZero && cls.m == 0)
    return lambda == alpha.pow(3) / Rat(8);
  return true;
}

/// Predicted root-valuation spectra of A_n and B_n at p = 2:
///   B_n: {(3v(a), 1)} u {(3v(a) - 2 + 2/4^m, 4^m) : 1 <= m <= n-1}
///   A_n: {(3v(a) - 3, 1)} u {(3v(a) - 2 - 1/4^m, 4^m) : 1 <= m <= n-1}.
inline RootValuationSpectrum predicted_spectrum(const Rat& a, long n, bool b_side) {
  RootValuationSpectrum sp;
  sp.prime = 2;
  const Rat va = val_of(a, 2).value();
  const Rat base = Rat(3) * va;
  if (b_side)
    sp.entries.emplace_back(base, 1);
  else
    sp.entries.emplace_back(base - Rat(3), 1);
  for (long m = 1; m <= n - 1; ++m) {
    const Rat q = Rat(BigInt(1), BigInt(1) << (2 * m));
    const long mult = static_cast<long>(1L << (2 * m));
    if (b_side)
      sp.entries.emplace_back(base - Rat(2) + Rat(2) * q, mult);
    else
      sp.entries.emplace_back(base - Rat(2) - q, mult);
  }
  std::sort(sp.entries.begin(), sp.entries.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  return sp;
}

struct SpectrumReport {
  Rat a;
  long n = 0;
  RootValuationSpectrum expected_A, actual_A, expected_B, actual_B;
  bool pass_A = false, pass_B = false;
  bool pass() const { return pass_A && pass_B; }
};

inline SpectrumReport verify_spectrum(const Rat& a, long n) {
  if (n < 1) throw std::domain_error("verify_spectrum: n must be >= 1");
  const TorsionPair& tp = torsion_pair(a, n);
  SpectrumReport rep;
  rep.a = a;
  rep.n = n;
  rep.expected_A = predicted_spectrum(a, n, false);
  rep.expected_B = predicted_spectrum(a, n, true);
  rep.actual_A = root_valuations(tp.A, 2);
  rep.actual_B = root_valuations(tp.B, 2);
  rep.pass_A = rep.expected_A == rep.actual_A;
  rep.pass_B = rep.expected_B == rep.actual_B;
  return rep;
}

/// Closed forms of the reductions:
///   p | a, p != 2:  B_n == (4t)^((4^n-1)/3),  A_n/a == (-2)^n (4t)^((4^n-1)/3)
///   p = 3, a = 1:   A_n == B_n == (1+t)^((4^n-1)/3)
///   p = 3, a = -1:  A_n == (1-t)^k, B_n == -(1-t)^k.
struct ModpReport {
  BigInt a;
  std::uint64_t p = 0;
  long n = 0;
  std::string branch;
  bool pass = false;
  std::string detail;
};

inline ModpReport modp_closed_form_check(const BigInt& a, std::uint64_t p, long n) {
  ModpReport rep;
  rep.a = a;
  rep.p = p;
  rep.n = n;
  const unsigned long k =
      (((BigInt(1) << (2 * n)) - 1) / 3).convert_to<unsigned long>();
  if (p != 2 && a != 0 && a % BigInt(p) == 0) {
    rep.branch = "p-divides-a";
    const TorsionPair& tp = torsion_pair(Rat(a), n);
    const UPoly a_n = Rat(BigInt(1), a) * tp.A;  // A_n / a, integral by the recursion
    FpPoly Ab = FpPoly::from_upoly(a_n, p);
    FpPoly Bb = FpPoly::from_upoly(tp.B, p);
    FpPoly fourt = FpPoly(p, {0, 4}).pow(k);
    std::uint64_t c = fp::reduce(BigInt(-2), p);
    FpPoly expected_a = fourt.scaled(fp::pow(c, static_cast<std::uint64_t>(n), p));
    rep.pass = (Bb == fourt) && (Ab == expected_a);
    rep.detail = "B_n == (4t)^" + std::to_string(k) + " and A_n/a == (-2)^n (4t)^" +
                 std::to_string(k) + " mod " + std::to_string(p);
    return rep;
  }
  if (p == 3 && (a == 1 || a == -1)) {
    rep.branch = a == 1 ? "mod-3 seed 1" : "mod-3 seed -1";
    FpPoly A = FpPoly::constant(3, fp::reduce(a, 3)), B = FpPoly::constant(3, 1);
    const FpPoly t = FpPoly::variable(3);
    for (long i = 0; i < n; ++i) {
      FpPoly A3 = A * A * A;
      FpPoly B3 = B * B * B;
      FpPoly An = A3 * A - (t * (A * B3)).scaled(8 % 3);
      FpPoly Bn = (B * A3).scaled(4 % 3) + (t * (B3 * B)).scaled(4 % 3);
      A = An;
      B = Bn;
    }
    const FpPoly onepm = FpPoly(3, {1, a == 1 ? 1ull : 2ull}).pow(k);  // (1 +/- t)^k
    if (a == 1) {
      rep.pass = (A == onepm) && (B == onepm);
      rep.detail = "A_n == B_n == (1+t)^" + std::to_string(k) + " mod 3";
    } else {
      rep.pass = (A == onepm) && (B == -onepm);
      rep.detail = "A_n == (1-t)^" + std::to_string(k) + ", B_n == -(1-t)^" +
                   std::to_string(k) + " mod 3";
    }
    return rep;
  }
  throw std::domain_error("modp_closed_form_check: unsupported branch");
}

/// Coprimality of the reduced cross pairs, the way the coprimality lemmas
/// prove it: gcds of the reductions are 1 and the reductions keep the full
/// degree. For p | a the A-side uses A_n/a.
inline bool modp_cross_coprime(const BigInt& a, const BigInt& b, std::uint64_t p,
                               long n) {
  const TorsionPair& ta = torsion_pair(Rat(a), n);
  const TorsionPair& tb = torsion_pair(Rat(b), n);
  UPoly Aa = ta.A;
  if (a % BigInt(p) == 0) Aa = Rat(BigInt(1), a) * Aa;
  const FpPoly Ar = FpPoly::from_upoly(Aa, p);
  const FpPoly Br = FpPoly::from_upoly(ta.B, p);
  const FpPoly Ar2 = FpPoly::from_upoly(tb.A, p);
  const FpPoly Br2 = FpPoly::from_upoly(tb.B, p);
  const long d = expected_degree(n);
  if (Ar.degree() != d || Br.degree() != d || Ar2.degree() != d ||
      Br2.degree() != d)
    return false;
  return fp_gcd(Ar, Ar2).degree() == 0 && fp_gcd(Br, Br2).degree() == 0;
}

/// Non-preperiodicity certificate for the good-reduction model g. A
/// rational point in the open unit disc would need v2 = 1/(3*4^m) to be
/// preperiodic, which no rational satisfies; same through phi outside the
/// closed unit disc, and through the shifted coordinate w + 1 on the disc
/// around the fixed point -1.
inline std::optional<EscapeCertificate> g_escape_predicate(const ProjPoint& w) {
  if (w.is_infinity()) return std::nullopt;
  const Rat& x = w.affine();
  if (x.is_zero() || x == Rat(-1)) return std::nullopt;
  const Val v = val_of(x, 2);
  if (v.value() >= Rat(1))
    return EscapeCertificate{"g-inner-disc: v2(w) >= 1 is not 1/(3*4^m)"};
  if (v.value() <= Rat(-1))
    return EscapeCertificate{"g-outer-disc: v2(1/w) >= 1 is not 2/(3*4^m)"};
  const Val vshift = val_of(x + Rat(1), 2);
  if (!vshift.is_infinite() && vshift.value() >= Rat(1))
    return EscapeCertificate{"g-disc-at-minus-one: v2(w+1) >= 1 is not 1/(3*4^m)"};
  return std::nullopt;
}

/// Pair-level certificate that lambda lies outside T(alpha), from the
/// trichotomy: an impossible valuation pattern, or an m = 0 valuation
/// match whose exact equality fails.
inline std::optional<EscapeCertificate> escape_check(const Rat& alpha,
                                                     const Rat& lambda) {
  if (alpha.is_zero() || lambda.is_zero()) return std::nullopt;
  const TrichotomyClass cls = trichotomy_classify(val_of(alpha, 2), val_of(lambda, 2));
  if (cls.variant == TrichotomyClass::Variant::Impossible)
    return EscapeCertificate{"weierstrass-valuation-trichotomy"};
  if (!trichotomy_exact_check(alpha, lambda, cls)) {
    if (cls.variant == TrichotomyClass::Variant::HitsInfinity)
      return EscapeCertificate{"weierstrass-m0-infinity-mismatch"};
    return EscapeCertificate{"weierstrass-m0-zero-mismatch"};
  }
  return std::nullopt;
}

/// Escape predicate for orbits of f_lambda; applies the pair certificate
/// to every orbit point (lambda is torsion for the seed iff it is torsion
/// for every forward image while the orbit avoids 0 and infinity).
inline EscapePredicate make_orbit_predicate(const Rat& lambda) {
  return [lambda](const ProjPoint& w) -> std::optional<EscapeCertificate> {
    if (w.is_infinity() || w.affine().is_zero()) return std::nullopt;
    return escape_check(w.affine(), lambda);
  };
}

/// Cross-gcds of the level-n torsion pairs of two seeds, with every
/// rational common parameter extracted and re-verified by exact orbits.
struct IntersectionReport {
  Rat a, b;
  long n = 0;
  UPoly gcd_AA, gcd_BB, gcd_AB, gcd_BA;
  std::vector<Rat> common_parameters;
  bool all_roots_verified = true;

  bool all_trivial() const {
    return gcd_AA.degree() == 0 && gcd_BB.degree() == 0 &&
           gcd_AB.degree() == 0 && gcd_BA.degree() == 0;
  }
};

inline IntersectionReport intersection_report(const Rat& a, const Rat& b, long n) {
  if (a.is_zero() || b.is_zero() || a == b)
    throw std::domain_error("intersection_report: need distinct nonzero seeds");
  if (n < 1) throw std::domain_error("intersection_report: n must be >= 1");
  const TorsionPair& ta = torsion_pair(a, n);
  const TorsionPair& tb = torsion_pair(b, n);
  IntersectionReport rep;
  rep.a = a;
  rep.b = b;
  rep.n = n;
  rep.gcd_AA = poly_gcd(ta.A, tb.A);
  rep.gcd_BB = poly_gcd(ta.B, tb.B);
  rep.gcd_AB = poly_gcd(ta.A, tb.B);
  rep.gcd_BA = poly_gcd(ta.B, tb.A);

  auto verify_root = [&](const Rat& lambda) {
    if (lambda.is_zero()) return;  // not a parameter of the family
    for (const Rat& seed : {a, b}) {
      OrbitRecord rec = orbit(family_map(lambda), ProjPoint(seed), n + 2);
      bool ok = rec.kind == OrbitRecord::Kind::HitFixed &&
                rec.hit_step <= n + 1;
      // exact evaluation: lambda must kill A_n or B_n for this seed
      const TorsionPair& tp = seed == a ? ta : tb;
      ok = ok && (tp.A.eval(lambda).is_zero() || tp.B.eval(lambda).is_zero());
      if (!ok) rep.all_roots_verified = false;
    }
    rep.common_parameters.push_back(lambda);
  };
  for (const UPoly* g : {&rep.gcd_AA, &rep.gcd_BB, &rep.gcd_AB, &rep.gcd_BA}) {
    if (g->degree() <= 0) continue;
    for (const auto& [root, mult] : rational_roots(*g).roots) verify_root(root);
  }
  std::sort(rep.common_parameters.begin(), rep.common_parameters.end());
  rep.common_parameters.erase(
      std::unique(rep.common_parameters.begin(), rep.common_parameters.end()),
      rep.common_parameters.end());
  return rep;
}

/// The identity batch backing the local-analysis checks: isotriviality,
/// the conjugation onto g, the series data at 0, infinity and -1, and the
/// four multipliers (including -xi through Q[x]/(x^2+x+1)).
inline std::vector<CheckRecord> identity_suite() {
  std::vector<CheckRecord> out;
  const char* fam = "weierstrass";

  auto push = [&](const std::string& check, Json inputs, Json expected,
                  Json actual, bool pass) {
    out.push_back({fam, check, std::move(inputs), std::move(expected),
                   std::move(actual), pass});
  };

  // Isotriviality f_{tau u^3}(u z) = u f_tau(z). The cleared two-sided
  // identity has t-degree at most 2, so equality at four specializations
  // of tau proves it as a three-variable identity.
  {
    const BiPoly u = BiPoly::first('u', 'z');
    const BiPoly z = BiPoly::second('u', 'z');
    bool all = true;
    for (const Rat& tau :
         {Rat(0), Rat(1), Rat(2), Rat(-1), Rat(BigInt(1), BigInt(2))}) {
      const BiPoly uz = u * z;
      const BiPoly lam = tau * u.pow(3);
      const BiPoly numL = uz.pow(4) - Rat(8) * (lam * uz);
      const BiPoly denL = Rat(4) * (uz.pow(3) + lam);
      const BiPoly numR = u * (z.pow(4) - Rat(8) * tau * z);
      const BiPoly denR = Rat(4) * (z.pow(3) + BiPoly(tau, 'u', 'z'));
      all = all && ratfun_equal({numL, denL}, {numR, denR});
    }
    push("isotriviality-identity", Json{{"tau-samples", 5}}, true, all, all);
  }

  // Conjugation onto g: f_{u^3/4}(u z) = u g(z), exactly in (u, z).
  {
    const BiPoly u = BiPoly::first('u', 'z');
    const BiPoly z = BiPoly::second('u', 'z');
    const BiPoly uz = u * z;
    const BiPoly lam = Rat(BigInt(1), BigInt(4)) * u.pow(3);
    const BiPoly numL = uz.pow(4) - Rat(8) * (lam * uz);
    const BiPoly denL = Rat(4) * (uz.pow(3) + lam);
    const BiPoly numR = u * (z.pow(4) - Rat(2) * z);
    const BiPoly denR = Rat(4) * z.pow(3) + BiPoly(Rat(1), 'u', 'z');
    const bool ok = ratfun_equal({numL, denL}, {numR, denR});
    push("conjugation-to-g", Json::object(), true, ok, ok);
  }

  auto series_json = [](const std::vector<Rat>& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(x.str());
    return a;
  };

  // g(z) = -2z + 9z^4 - 36z^7 + ... at 0.
  {
    const auto s = series_expand(map_g(), Rat(0), 7);
    const std::vector<Rat> want{Rat(0), Rat(-2), Rat(0), Rat(0),
                                Rat(9), Rat(0),  Rat(0), Rat(-36)};
    push("g-series-at-0", Json{{"order", 7}}, series_json(want), series_json(s),
         s == want);
  }
  // phi(z) = 4z + 9z^4 + ... at 0.
  {
    const auto s = series_expand(map_phi(), Rat(0), 4);
    const std::vector<Rat> want{Rat(0), Rat(4), Rat(0), Rat(0), Rat(9)};
    push("phi-series-at-0", Json{{"order", 4}}, series_json(want), series_json(s),
         s == want);
  }
  // Local coefficients of g(z) + 1 at -1.
  {
    auto s = series_expand(map_g(), Rat(-1), 4);
    s[0] += Rat(1);
    const std::vector<Rat> want{Rat(0), Rat(-2), Rat(-6), Rat(-16), Rat(-43)};
    push("g-local-at-minus-one", Json{{"order", 4}}, series_json(want),
         series_json(s), s == want);
  }

  // Multipliers -2, 4, -2 at 0, infinity, -1.
  {
    const RatMap g = map_g();
    const Rat m0 = multiplier_at(g, ProjPoint(Rat(0)));
    const Rat mi = multiplier_at(g, ProjPoint::infinity());
    const Rat m1 = multiplier_at(g, ProjPoint(Rat(-1)));
    push("g-multiplier-at-0", Json::object(), "-2", m0.str(), m0 == Rat(-2));
    push("g-multiplier-at-inf", Json::object(), "4", mi.str(), mi == Rat(4));
    push("g-multiplier-at-minus-one", Json::object(), "-2", m1.str(),
         m1 == Rat(-2));
  }
  // Multiplier at -xi for xi a primitive cube root of unity.
  {
    const UPoly modulus({Rat(1), Rat(1), Rat(1)}, 'x');  // x^2 + x + 1
    const NFElem xi = NFElem::generator(modulus);
    const NFElem mult = multiplier_at_nf(map_g(), -xi);
    const bool ok = mult == NFElem(Rat(-2), modulus);
    push("g-multiplier-at-minus-xi", Json{{"modulus", "x^2 + x + 1"}}, "-2",
         mult.str(), ok);
  }
  return out;
}

}  // namespace padic_lattes::weierstrass
