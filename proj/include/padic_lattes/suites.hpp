#pragma once

#include <padic_lattes/general_family.hpp>
#include <padic_lattes/legendre.hpp>
#include <padic_lattes/parse.hpp>
#include <padic_lattes/report.hpp>
#include <padic_lattes/weierstrass.hpp>
#include <padic_lattes/xset.hpp>

#include <chrono>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace padic_lattes::suites {

struct SuiteConfig {
  std::set<std::string> families = {"weierstrass", "legendre", "general"};
  std::optional<long> level_cap;  // clamped to module defaults unless forced
  bool force_cap_override = false;
  unsigned long certificate_samples = 200;
};

inline LevelCaps caps_for(const SuiteConfig& cfg) {
  LevelCaps defaults;  // module defaults are also the suite ceilings
  LevelCaps caps = effective_caps(cfg.level_cap);
  if (!cfg.force_cap_override && !level_cap_env()) {
    caps.weierstrass = std::min(caps.weierstrass, defaults.weierstrass);
    caps.legendre = std::min(caps.legendre, defaults.legendre);
    caps.general = std::min(caps.general, defaults.general);
  }
  return caps;
}

namespace detail {

inline Json rat_json(const Rat& r) { return r.str(); }

inline Json spectrum_json(const RootValuationSpectrum& sp) {
  return sp.to_json();
}

}  // namespace detail

/// Lemma-coprime grid: gcd(A_n, B_n) = 1 and deg = (4^n - 1)/3.
inline std::vector<CheckRecord> suite_coprimality(const SuiteConfig& cfg) {
  std::vector<CheckRecord> out;
  if (!cfg.families.count("weierstrass")) return out;
  const long cap = std::min<long>(5, caps_for(cfg).weierstrass);
  const std::vector<Rat> seeds{Rat(1), Rat(-1), Rat(2), Rat(-2), Rat(3),
                               Rat(BigInt(1), BigInt(3))};
  for (const Rat& a : seeds) {
    for (long n = 1; n <= cap; ++n) {
      const auto& tp = weierstrass::torsion_pair(a, n);
      const UPoly g = poly_gcd(tp.A, tp.B);
      const long want_deg = weierstrass::expected_degree(n);
      CheckRecord rec;
      rec.family = "weierstrass";
      rec.check = "coprimality-degree";
      rec.inputs = Json{{"a", a.str()}, {"n", n}};
      rec.expected = Json{{"gcd", "1"}, {"deg_A", want_deg}, {"deg_B", want_deg}};
      rec.actual = Json{{"gcd", g.str()},
                        {"deg_A", tp.A.degree()},
                        {"deg_B", tp.B.degree()}};
      rec.pass = g.degree() == 0 && tp.A.degree() == want_deg &&
                 tp.B.degree() == want_deg;
      out.push_back(std::move(rec));
    }
  }
  return out;
}

/// Trichotomy spectra via Newton polygons.
inline std::vector<CheckRecord> suite_trichotomy(const SuiteConfig& cfg) {
  std::vector<CheckRecord> out;
  if (!cfg.families.count("weierstrass")) return out;
  const long cap = std::min<long>(4, caps_for(cfg).weierstrass);
  const std::vector<Rat> seeds{Rat(1), Rat(2), Rat(BigInt(1), BigInt(3))};
  for (const Rat& a : seeds) {
    for (long n = 1; n <= cap; ++n) {
      const auto rep = weierstrass::verify_spectrum(a, n);
      CheckRecord rec;
      rec.family = "weierstrass";
      rec.check = "trichotomy-spectrum";
      rec.inputs = Json{{"a", a.str()}, {"n", n}};
      rec.expected = Json{{"A", detail::spectrum_json(rep.expected_A)},
                          {"B", detail::spectrum_json(rep.expected_B)}};
      rec.actual = Json{{"A", detail::spectrum_json(rep.actual_A)},
                        {"B", detail::spectrum_json(rep.actual_B)}};
      rec.pass = rep.pass();
      out.push_back(std::move(rec));
    }
  }
  return out;
}

/// Case-(1) law: periodic-without-collapse parameters all sit at
/// v(lambda) = 3 v(a) - 2.
inline std::vector<CheckRecord> suite_periodicity(const SuiteConfig& cfg) {
  std::vector<CheckRecord> out;
  if (!cfg.families.count("weierstrass")) return out;
  const long cap = std::min<long>(3, caps_for(cfg).weierstrass);
  for (const Rat& a : {Rat(1), Rat(2)}) {
    const Rat want = Rat(3) * val_of(a, 2).value() - Rat(2);
    for (long n = 1; n <= cap; ++n) {
      for (long m = 0; m < n; ++m) {
        const UPoly p = weierstrass::periodicity_poly(a, n, m);
        const RootValuationSpectrum sp = root_valuations(p, 2);
        bool pass = sp.zero_root_multiplicity == 0;
        for (const auto& [v, mult] : sp.entries)
          if (v != want) pass = false;
        CheckRecord rec;
        rec.family = "weierstrass";
        rec.check = "periodicity-valuation";
        rec.inputs = Json{{"a", a.str()}, {"n", n}, {"m", m}};
        rec.expected = Json{{"valuation", want.str()}};
        rec.actual = detail::spectrum_json(sp);
        rec.pass = pass;
        out.push_back(std::move(rec));
      }
    }
  }
  // The worked case: periodicity_poly(1, 1, 0) has the single root -1/4,
  // and f_{-1/4} fixes the seed 1.
  {
    const UPoly p = weierstrass::periodicity_poly(Rat(1), 1, 0);
    const auto roots = rational_roots(p);
    bool found = false;
    for (const auto& [r, m] : roots.roots) found = found || r == Rat(BigInt(-1), BigInt(4));
    OrbitRecord rec0 = orbit(weierstrass::family_map(Rat(BigInt(-1), BigInt(4))),
                             ProjPoint(Rat(1)), 4);
    const bool fixed = rec0.kind == OrbitRecord::Kind::PreperiodicTail &&
                       rec0.tail_length == 0 && rec0.period == 1;
    CheckRecord rec;
    rec.family = "weierstrass";
    rec.check = "periodicity-root-minus-quarter";
    rec.inputs = Json{{"a", "1"}, {"n", 1}, {"m", 0}};
    rec.expected = Json{{"root", "-1/4"}, {"orbit", "PreperiodicTail(0,1)"}};
    rec.actual = Json{{"root_found", found}, {"orbit", rec0.status_str()}};
    rec.pass = found && fixed;
    out.push_back(std::move(rec));
  }
  return out;
}

/// Mod-p closed forms and the cross-pair coprimality they imply.
inline std::vector<CheckRecord> suite_modp(const SuiteConfig& cfg) {
  std::vector<CheckRecord> out;
  if (!cfg.families.count("weierstrass")) return out;
  const long cap = std::min<long>(5, caps_for(cfg).weierstrass);
  auto add_closed_form = [&](const BigInt& a, std::uint64_t p) {
    for (long n = 1; n <= cap; ++n) {
      const auto rep = weierstrass::modp_closed_form_check(a, p, n);
      CheckRecord rec;
      rec.family = "weierstrass";
      rec.check = "modp-closed-form";
      rec.inputs = Json{{"a", a.str()}, {"p", p}, {"n", n}};
      rec.expected = rep.detail;
      rec.actual = rep.pass ? rep.detail : "mismatch";
      rec.pass = rep.pass;
      out.push_back(std::move(rec));
    }
  };
  add_closed_form(7, 7);
  add_closed_form(3, 3);
  add_closed_form(1, 3);
  add_closed_form(-1, 3);
  for (long n = 1; n <= cap; ++n) {
    const bool ok = weierstrass::modp_cross_coprime(3, 1, 3, n);
    CheckRecord rec;
    rec.family = "weierstrass";
    rec.check = "modp-cross-coprime";
    rec.inputs = Json{{"a", "3"}, {"b", "1"}, {"p", 3}, {"n", n}};
    rec.expected = true;
    rec.actual = ok;
    rec.pass = ok;
    out.push_back(std::move(rec));
  }
  return out;
}

/// Impossible intersections and the one exceptional pair.
inline std::vector<CheckRecord> suite_intersections(const SuiteConfig& cfg) {
  std::vector<CheckRecord> out;
  if (!cfg.families.count("weierstrass")) return out;
  const long cap = std::min<long>(4, caps_for(cfg).weierstrass);
  const std::vector<std::pair<Rat, Rat>> empty_pairs{
      {Rat(1), Rat(3)}, {Rat(1), Rat(-1)}, {Rat(2), Rat(3)}, {Rat(1), Rat(5)}};
  for (const auto& [a, b] : empty_pairs) {
    for (long n = 1; n <= cap; ++n) {
      const auto rep = weierstrass::intersection_report(a, b, n);
      CheckRecord rec;
      rec.family = "weierstrass";
      rec.check = "intersection-empty";
      rec.inputs = Json{{"a", a.str()}, {"b", b.str()}, {"n", n}};
      rec.expected = Json{{"gcds", "1,1,1,1"}, {"common_parameters", Json::array()}};
      rec.actual = Json{{"gcd_AA", rep.gcd_AA.str()},
                        {"gcd_BB", rep.gcd_BB.str()},
                        {"gcd_AB", rep.gcd_AB.str()},
                        {"gcd_BA", rep.gcd_BA.str()}};
      rec.pass = rep.all_trivial() && rep.common_parameters.empty();
      out.push_back(std::move(rec));
    }
  }
  for (long n = 1; n <= cap; ++n) {
    const auto rep = weierstrass::intersection_report(Rat(1), Rat(-2), n);
    const UPoly t_plus_1({Rat(1), Rat(1)}, 't');
    const bool gcds_ok = rep.gcd_AA.degree() == 0 && rep.gcd_BB.degree() == 0 &&
                         rep.gcd_AB.degree() == 0 && rep.gcd_BA == t_plus_1;
    const bool params_ok = rep.common_parameters.size() == 1 &&
                           rep.common_parameters[0] == Rat(-1) &&
                           rep.all_roots_verified;
    // f_{-1}(1) = inf and f_{-1}(-2) = 0, re-checked directly.
    const RatMap f = weierstrass::family_map(Rat(-1));
    const bool orbit_ok = f.eval(ProjPoint(Rat(1))) == ProjPoint::infinity() &&
                          f.eval(ProjPoint(Rat(-2))) == ProjPoint(Rat(0));
    CheckRecord rec;
    rec.family = "weierstrass";
    rec.check = "intersection-exceptional-pair";
    rec.inputs = Json{{"a", "1"}, {"b", "-2"}, {"n", n}};
    rec.expected = Json{{"gcd_BA", "t + 1"}, {"common_parameter", "-1"}};
    rec.actual = Json{{"gcd_BA", rep.gcd_BA.str()},
                      {"common_parameters", [&] {
                         Json arr = Json::array();
                         for (const auto& r : rep.common_parameters)
                           arr.push_back(r.str());
                         return arr;
                       }()}};
    rec.pass = gcds_ok && params_ok && orbit_ok;
    out.push_back(std::move(rec));
  }
  return out;
}

/// Claim lainT(2) and its reciprocal mirror.
inline std::vector<CheckRecord> suite_legendre(const SuiteConfig& cfg) {
  std::vector<CheckRecord> out;
  if (!cfg.families.count("legendre")) return out;
  const long cap = std::min<long>(3, caps_for(cfg).legendre);
  {
    const auto rep = legendre::t2_claim_verify(Rat(2), cap, Rat(2));
    bool roots_ok = false, roots43 = false;
    for (const auto& r : rep.rational_roots_seen) {
      roots_ok = roots_ok || r == Rat(4);
      roots43 = roots43 || r == Rat(BigInt(4), BigInt(3));
    }
    CheckRecord rec;
    rec.family = "legendre";
    rec.check = "t2-claim";
    rec.inputs = Json{{"seed", "2"}, {"n", cap}};
    rec.expected = Json{{"valuation", "2"}, {"roots_include", "4, 4/3"}};
    Json seen = Json::array();
    for (const auto& r : rep.rational_roots_seen) seen.push_back(r.str());
    rec.actual = Json{{"all_valuations_equal", rep.pass}, {"rational_roots", seen}};
    rec.pass = rep.pass && roots_ok && roots43;
    out.push_back(std::move(rec));
  }
  {
    const auto rep = legendre::t2_claim_verify(Rat(BigInt(1), BigInt(2)),
                                               std::min<long>(2, cap), Rat(-2));
    CheckRecord rec;
    rec.family = "legendre";
    rec.check = "t2-claim-reciprocal-mirror";
    rec.inputs = Json{{"seed", "1/2"}, {"n", std::min<long>(2, cap)}};
    rec.expected = Json{{"valuation", "-2"}};
    rec.actual = Json{{"all_valuations_equal", rep.pass}};
    rec.pass = rep.pass;
    out.push_back(std::move(rec));
  }
  return out;
}

/// Exact rational-function identities and the local-analysis constants.
inline std::vector<CheckRecord> suite_identities(const SuiteConfig& cfg) {
  std::vector<CheckRecord> out;
  if (cfg.families.count("weierstrass")) {
    auto recs = weierstrass::identity_suite();
    out.insert(out.end(), recs.begin(), recs.end());
  }
  if (cfg.families.count("legendre")) {
    for (long n = 1; n <= 2; ++n) {
      const bool ok = legendre::reciprocal_identity_check(n);
      CheckRecord rec;
      rec.family = "legendre";
      rec.check = "reciprocal-identity";
      rec.inputs = Json{{"n", n}};
      rec.expected = true;
      rec.actual = ok;
      rec.pass = ok;
      out.push_back(std::move(rec));
    }
    // Numeric spot check: f_{1/4}(1/2) = (1/4) f_4(2) = 0.
    {
      const Rat quarter(BigInt(1), BigInt(4));
      const ProjPoint lhs =
          legendre::family_map(quarter).eval(ProjPoint(Rat(BigInt(1), BigInt(2))));
      const ProjPoint rhs = legendre::family_map(Rat(4)).eval(ProjPoint(Rat(2)));
      const bool ok = lhs == ProjPoint(Rat(0)) && rhs == ProjPoint(Rat(0));
      CheckRecord rec;
      rec.family = "legendre";
      rec.check = "reciprocal-spot-check";
      rec.inputs = Json{{"x", "2"}, {"lambda", "4"}};
      rec.expected = "both sides 0";
      rec.actual = lhs.str() + " vs " + rhs.str();
      rec.pass = ok;
      out.push_back(std::move(rec));
    }
  }
  if (cfg.families.count("general")) {
    auto recs = general::conjugation_examples();
    out.insert(out.end(), recs.begin(), recs.end());
  }
  return out;
}

/// Section-5 family: shifted spectra, disjointness, fixed-point
/// multiplier identities.
inline std::vector<CheckRecord> suite_general(const SuiteConfig& cfg) {
  std::vector<CheckRecord> out;
  if (!cfg.families.count("general")) return out;
  const long cap = std::min<long>(3, caps_for(cfg).general);
  struct Case {
    long d;
    long p;
    Rat a;
  };
  for (const Case& c : {Case{2, 3, Rat(1)}, Case{3, 2, Rat(1)}, Case{2, 5, Rat(2)}}) {
    const general::GenFamilyParams params{c.d, BigInt(c.p)};
    const auto rep = general::shifted_spectrum_check(params, c.a, cap);
    CheckRecord rec;
    rec.family = "general";
    rec.check = "shifted-spectrum";
    rec.inputs = Json{{"d", c.d}, {"p", c.p}, {"a", c.a.str()}, {"n", cap}};
    rec.expected = Json{{"min_valuation", ">= 1"}};
    Json spectra = Json::object();
    for (const auto& [name, sp] : rep.spectra) spectra[name] = sp.to_json();
    rec.actual = spectra;
    rec.pass = rep.pass;
    out.push_back(std::move(rec));
  }
  {
    const general::GenFamilyParams params{2, 5};
    const auto rep = general::disjointness_check(params, Rat(1), Rat(2), 2);
    CheckRecord rec;
    rec.family = "general";
    rec.check = "disjointness";
    rec.inputs = Json{{"d", 2}, {"p", 5}, {"a", "1"}, {"b", "2"}, {"n", 2}};
    rec.expected = Json{{"refused", false}, {"gcds", "1,1,1,1"}};
    rec.actual = Json{{"refused", rep.refused},
                      {"gcd_AA", rep.gcd_AA.str()},
                      {"gcd_AB", rep.gcd_AB.str()},
                      {"gcd_BA", rep.gcd_BA.str()},
                      {"gcd_BB", rep.gcd_BB.str()}};
    rec.pass = !rep.refused && rep.pass;
    out.push_back(std::move(rec));
  }
  {
    const general::GenFamilyParams params{2, 3};
    const auto rep = general::disjointness_check(params, Rat(1), Rat(2), 2);
    CheckRecord rec;
    rec.family = "general";
    rec.check = "disjointness-refusal";
    rec.inputs = Json{{"d", 2}, {"p", 3}, {"a", "1"}, {"b", "2"}, {"n", 2}};
    rec.expected = Json{{"refused", true}};
    rec.actual = Json{{"refused", rep.refused}, {"reason", rep.refusal_reason}};
    rec.pass = rep.refused;
    out.push_back(std::move(rec));
  }
  {
    auto recs = general::fixed_point_multiplier_checks();
    out.insert(out.end(), recs.begin(), recs.end());
  }
  return out;
}

/// Property-based certificate soundness over deterministic random pairs.
inline std::vector<CheckRecord> suite_certificates(const SuiteConfig& cfg) {
  std::vector<CheckRecord> out;
  std::mt19937_64 rng(0x70ad1c5ULL);
  std::uniform_int_distribution<long> numd(-9, 9);
  std::uniform_int_distribution<long> dend(1, 9);
  auto rand_rat = [&]() {
    long n = 0;
    while (n == 0) n = numd(rng);
    return Rat(BigInt(n), BigInt(dend(rng)));
  };

  if (cfg.families.count("weierstrass")) {
    unsigned long certified = 0, preperiodic = 0, violations = 0;
    for (unsigned long i = 0; i < cfg.certificate_samples; ++i) {
      const Rat seed = rand_rat(), lambda = rand_rat();
      const auto cert = weierstrass::escape_check(seed, lambda);
      if (cert) {
        ++certified;
        for (long k = 1; k <= 3; ++k) {
          const auto& tp = weierstrass::torsion_pair(seed, k);
          if (tp.A.eval(lambda).is_zero() || tp.B.eval(lambda).is_zero())
            ++violations;
          for (long m = 0; m < k; ++m)
            if (weierstrass::periodicity_poly(seed, k, m).eval(lambda).is_zero())
              ++violations;
        }
      }
      // preperiodic orbits stay small; escaping ones hit the bit cap and
      // come back Unresolved, which claims nothing
      OrbitRecord rec = orbit(weierstrass::family_map(lambda), ProjPoint(seed), 8,
                              weierstrass::make_orbit_predicate(lambda), {}, 4096);
      if (rec.is_preperiodic()) {
        ++preperiodic;
        const auto cls = weierstrass::trichotomy_classify(val_of(seed, 2),
                                                          val_of(lambda, 2));
        if (cls.variant == weierstrass::TrichotomyClass::Variant::Impossible)
          ++violations;
      }
    }
    CheckRecord rec;
    rec.family = "weierstrass";
    rec.check = "certificate-soundness";
    rec.inputs = Json{{"samples", cfg.certificate_samples}, {"rng_seed", "0x70ad1c5"}};
    rec.expected = Json{{"violations", 0}};
    rec.actual = Json{{"certified", certified},
                      {"preperiodic", preperiodic},
                      {"violations", violations}};
    rec.pass = violations == 0;
    out.push_back(std::move(rec));
  }

  if (cfg.families.count("legendre")) {
    unsigned long certified = 0, violations = 0;
    for (unsigned long i = 0; i < cfg.certificate_samples; ++i) {
      Rat seed = rand_rat(), lambda = rand_rat();
      if (seed == Rat(1) || lambda == Rat(1) || seed == lambda) continue;
      const auto cert = legendre::stoll_escape_check(seed, lambda);
      if (cert) {
        ++certified;
        for (long k = 1; k <= 3; ++k) {
          const auto& tp = legendre::legendre_torsion_pair(seed, k);
          if (tp.A.eval(lambda).is_zero() || tp.B.eval(lambda).is_zero())
            ++violations;
        }
      }
    }
    CheckRecord rec;
    rec.family = "legendre";
    rec.check = "certificate-soundness";
    rec.inputs = Json{{"samples", cfg.certificate_samples}, {"rng_seed", "0x70ad1c5"}};
    rec.expected = Json{{"violations", 0}};
    rec.actual = Json{{"certified", certified}, {"violations", violations}};
    rec.pass = violations == 0;
    out.push_back(std::move(rec));
  }

  if (cfg.families.count("general")) {
    const general::GenFamilyParams params{2, 3};
    unsigned long certified = 0, violations = 0;
    for (unsigned long i = 0; i < cfg.certificate_samples; ++i) {
      const Rat seed = rand_rat(), lambda = rand_rat();
      const auto cert = general::gen_escape_check(params, seed, lambda);
      if (cert) {
        ++certified;
        for (long k = 1; k <= 3; ++k) {
          const auto tp = general::gen_torsion_pair(params, seed, k);
          if (tp.A.eval(lambda).is_zero() || tp.B.eval(lambda).is_zero())
            ++violations;
        }
      }
    }
    CheckRecord rec;
    rec.family = "general";
    rec.check = "certificate-soundness";
    rec.inputs = Json{{"samples", cfg.certificate_samples},
                      {"rng_seed", "0x70ad1c5"},
                      {"d", 2},
                      {"p", 3}};
    rec.expected = Json{{"violations", 0}};
    rec.actual = Json{{"certified", certified}, {"violations", violations}};
    rec.pass = violations == 0;
    out.push_back(std::move(rec));
  }
  return out;
}

inline std::vector<std::string> suite_names() {
  return {"coprimality",   "trichotomy", "periodicity", "modp",
          "intersections", "legendre",   "identities",  "general",
          "certificates"};
}

inline std::vector<CheckRecord> run_suite(const std::string& name,
                                          const SuiteConfig& cfg) {
  if (name == "coprimality") return suite_coprimality(cfg);
  if (name == "trichotomy") return suite_trichotomy(cfg);
  if (name == "periodicity") return suite_periodicity(cfg);
  if (name == "modp") return suite_modp(cfg);
  if (name == "intersections") return suite_intersections(cfg);
  if (name == "legendre") return suite_legendre(cfg);
  if (name == "identities") return suite_identities(cfg);
  if (name == "general") return suite_general(cfg);
  if (name == "certificates") return suite_certificates(cfg);
  throw std::domain_error("unknown suite: " + name);
}

inline Report run_suites(const std::vector<std::string>& names,
                         const SuiteConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  Report report;
  std::vector<std::string> expanded;
  for (const auto& n : names) {
    if (n == "all") {
      const auto all = suite_names();
      expanded.insert(expanded.end(), all.begin(), all.end());
    } else {
      expanded.push_back(n);
    }
  }
  for (const auto& name : expanded) {
    auto recs = run_suite(name, cfg);
    report.records.insert(report.records.end(), recs.begin(), recs.end());
  }
  sort_records(report.records);
  report.wall_ms = static_cast<long>(
      std::chrono::duration_cast<std::chrono::milliseconds>(
          std::chrono::steady_clock::now() - start)
          .count());
  return report;
}

}  // namespace padic_lattes::suites
