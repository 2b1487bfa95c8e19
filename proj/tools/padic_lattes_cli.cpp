// Command-line front end: exact Newton polygons, orbits, torsion pairs,
// trichotomy classification, intersection reports and the verification
// suites, with deterministic JSON/CSV output.
//
// Exit codes: 0 success, 1 verification failure, 2 usage/parse error.

#include <padic_lattes/suites.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace pl = padic_lattes;
using pl::Json;

namespace {

struct CommonOpts {
  std::string output;           // empty = stdout
  std::string format = "json";  // json | csv (csv only for verify)
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--output", opts.output, "write the report to a file");
  cmd->add_option("--format", opts.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
}

int emit(const CommonOpts& opts, const std::string& text) {
  if (opts.output.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(opts.output, std::ios::binary);
  if (!out) {
    std::cerr << "cannot open output file: " << opts.output << "\n";
    return 2;
  }
  out << text;
  return 0;
}

Json points_json(const pl::OrbitRecord& rec) {
  Json arr = Json::array();
  for (const auto& p : rec.points) arr.push_back(p.str());
  return arr;
}

int run_newton(const std::string& prime_text, const std::string& poly_text,
               const CommonOpts& opts) {
  const pl::BigInt p(prime_text);
  const pl::UPoly f = pl::parse_poly(poly_text);
  pl::NewtonPolygon np = pl::newton_polygon(f, p);
  pl::RootValuationSpectrum sp = pl::root_valuations(f, p);
  Json j = np.to_json();
  Json slopes = Json::array();
  for (const auto& seg : np.segments()) {
    Json s;
    s["slope"] = seg.slope.str();
    s["length"] = seg.length;
    slopes.push_back(s);
  }
  j["slopes"] = slopes;
  j["spectrum"] = sp.to_json()["spectrum"];
  return emit(opts, j.dump(2) + "\n");
}

int run_orbit(const std::string& family, const std::string& lambda_text,
              const std::string& seed_text, long max_steps, long d, long p,
              const CommonOpts& opts) {
  const pl::Rat seed = pl::parse_rat(seed_text);
  pl::ProjPoint start(seed);
  std::optional<pl::RatMap> map;
  pl::EscapePredicate pred;
  pl::Rat lambda;
  if (family != "g") lambda = pl::parse_rat(lambda_text);
  if (family == "weierstrass") {
    map = pl::weierstrass::family_map(lambda);
    pred = pl::weierstrass::make_orbit_predicate(lambda);
  } else if (family == "legendre") {
    map = pl::legendre::family_map(lambda);
    pred = pl::legendre::make_orbit_predicate(lambda);
  } else if (family == "general") {
    pl::general::GenFamilyParams params{d, pl::BigInt(p)};
    map = pl::general::family_map(params, lambda);
    pred = pl::general::make_orbit_predicate(params, lambda);
  } else if (family == "g") {
    map = pl::weierstrass::map_g();
    pred = pl::weierstrass::g_escape_predicate;
  } else {
    throw std::domain_error("unknown family: " + family);
  }
  pl::OrbitRecord rec = pl::orbit(*map, start, max_steps, pred);
  Json j;
  j["family"] = family;
  if (family != "g") j["lambda"] = lambda.str();
  j["seed"] = seed.str();
  j["status"] = rec.status_str();
  j["points"] = points_json(rec);
  return emit(opts, j.dump(2) + "\n");
}

int run_torsion(const std::string& family, const std::string& a_text, long n,
                long d, long p, const CommonOpts& opts) {
  const pl::Rat a = pl::parse_rat(a_text);
  Json j;
  j["family"] = family;
  j["a"] = a.str();
  j["n"] = n;
  if (family == "weierstrass") {
    const auto& tp = pl::weierstrass::torsion_pair(a, n);
    j["A"] = tp.A.str();
    j["B"] = tp.B.str();
    j["deg"] = tp.A.degree();
  } else if (family == "legendre") {
    const auto& tp = pl::legendre::legendre_torsion_pair(a, n);
    j["A"] = tp.A.str();
    j["B"] = tp.B.str();
    j["cancelled"] = tp.cancelled.str();
  } else if (family == "general") {
    pl::general::GenFamilyParams params{d, pl::BigInt(p)};
    j["d"] = d;
    j["p"] = p;
    const auto tp = pl::general::gen_torsion_pair(params, a, n);
    j["A"] = tp.A.str();
    j["B"] = tp.B.str();
    j["cancelled"] = tp.cancelled.str();
  } else {
    throw std::domain_error("unknown family: " + family);
  }
  return emit(opts, j.dump(2) + "\n");
}

int run_classify(const std::string& va_text, const std::string& vl_text,
                 const CommonOpts& opts) {
  const pl::Rat va = pl::parse_rat(va_text);
  const pl::Rat vl = pl::parse_rat(vl_text);
  const auto cls = pl::weierstrass::trichotomy_classify(pl::Val(va, 2), pl::Val(vl, 2));
  Json j;
  j["v_alpha"] = va.str();
  j["v_lambda"] = vl.str();
  j["class"] = cls.str();
  return emit(opts, j.dump(2) + "\n");
}

int run_intersect(const std::string& a_text, const std::string& b_text, long n,
                  const CommonOpts& opts) {
  const pl::Rat a = pl::parse_rat(a_text);
  const pl::Rat b = pl::parse_rat(b_text);
  const auto rep = pl::weierstrass::intersection_report(a, b, n);
  Json j;
  j["a"] = a.str();
  j["b"] = b.str();
  j["n"] = n;
  j["gcd_AA"] = rep.gcd_AA.str();
  j["gcd_BB"] = rep.gcd_BB.str();
  j["gcd_AB"] = rep.gcd_AB.str();
  j["gcd_BA"] = rep.gcd_BA.str();
  Json params = Json::array();
  for (const auto& r : rep.common_parameters) params.push_back(r.str());
  j["common_parameters"] = params;
  j["verified"] = rep.all_roots_verified;
  return emit(opts, j.dump(2) + "\n");
}

int run_verify(const std::vector<std::string>& suites_arg,
               const std::vector<std::string>& families, long level_cap,
               bool force_cap, unsigned long samples, const CommonOpts& opts) {
  pl::suites::SuiteConfig cfg;
  if (!families.empty())
    cfg.families = std::set<std::string>(families.begin(), families.end());
  if (level_cap >= 0) cfg.level_cap = level_cap;
  cfg.force_cap_override = force_cap;
  cfg.certificate_samples = samples;
  std::vector<std::string> names = suites_arg;
  if (names.empty()) names.push_back("all");
  const pl::Report report = pl::suites::run_suites(names, cfg);
  const std::string text = opts.format == "csv"
                               ? report.to_csv()
                               : report.to_json().dump(2) + "\n";
  const int rc = emit(opts, text);
  if (rc != 0) return rc;
  return report.failures() == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact 2-adic verification for torsion parameters of Lattes-type families"};
  app.require_subcommand(1);

  // newton
  auto* newton = app.add_subcommand("newton", "Newton polygon and root-valuation spectrum");
  std::string prime_text = "2", poly_text;
  CommonOpts newton_opts;
  newton->add_option("--prime", prime_text, "prime p")->required();
  newton->add_option("--poly", poly_text, "polynomial in the CLI grammar")->required();
  add_common(newton, newton_opts);

  // orbit
  auto* orbit_cmd = app.add_subcommand("orbit", "exact forward orbit with status");
  std::string family = "weierstrass", lambda_text = "1", seed_text;
  long max_steps = 16, gen_d = 2, gen_p = 3;
  CommonOpts orbit_opts;
  orbit_cmd->add_option("--family", family, "weierstrass | legendre | general | g")->required();
  orbit_cmd->add_option("--lambda", lambda_text, "parameter lambda");
  orbit_cmd->add_option("--seed", seed_text, "starting point")->required();
  orbit_cmd->add_option("--max-steps", max_steps, "iteration bound");
  orbit_cmd->add_option("--d", gen_d, "degree d (general family)");
  orbit_cmd->add_option("--p", gen_p, "prime p (general family)");
  add_common(orbit_cmd, orbit_opts);

  // torsion
  auto* torsion = app.add_subcommand("torsion", "torsion-parameter polynomial pair");
  std::string tors_family = "weierstrass", a_text;
  long tors_n = 1, tors_d = 2, tors_p = 3;
  CommonOpts torsion_opts;
  torsion->add_option("--family", tors_family, "weierstrass | legendre | general");
  torsion->add_option("--a", a_text, "seed")->required();
  torsion->add_option("--n", tors_n, "level")->required();
  torsion->add_option("--d", tors_d, "degree d (general family)");
  torsion->add_option("--p", tors_p, "prime p (general family)");
  add_common(torsion, torsion_opts);

  // classify
  auto* classify = app.add_subcommand("classify", "trichotomy class from valuations");
  std::string va_text, vl_text;
  CommonOpts classify_opts;
  classify->add_option("--v-alpha", va_text, "v_2(alpha)")->required();
  classify->add_option("--v-lambda", vl_text, "v_2(lambda)")->required();
  add_common(classify, classify_opts);

  // intersect
  auto* intersect = app.add_subcommand("intersect", "cross-gcds of two torsion pairs");
  std::string ia_text, ib_text;
  long inter_n = 3;
  CommonOpts intersect_opts;
  intersect->add_option("--a", ia_text, "first seed")->required();
  intersect->add_option("--b", ib_text, "second seed")->required();
  intersect->add_option("--n", inter_n, "level");
  add_common(intersect, intersect_opts);

  // verify
  auto* verify = app.add_subcommand("verify", "run verification suites");
  std::vector<std::string> suites_arg, families_arg;
  long level_cap = -1;
  bool force_cap = false;
  unsigned long samples = 200;
  CommonOpts verify_opts;
  verify->add_option("--suite", suites_arg,
                     "suite name (repeatable); one of: all, coprimality, trichotomy, "
                     "periodicity, modp, intersections, legendre, identities, general, "
                     "certificates");
  verify->add_option("--family", families_arg, "restrict to families (repeatable)");
  verify->add_option("--level-cap", level_cap, "cap recursion levels");
  verify->add_flag("--force-cap", force_cap, "allow caps above module defaults");
  verify->add_option("--samples", samples, "certificate-suite sample count");
  add_common(verify, verify_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*newton) return run_newton(prime_text, poly_text, newton_opts);
    if (*orbit_cmd)
      return run_orbit(family, lambda_text, seed_text, max_steps, gen_d, gen_p,
                       orbit_opts);
    if (*torsion)
      return run_torsion(tors_family, a_text, tors_n, tors_d, tors_p, torsion_opts);
    if (*classify) return run_classify(va_text, vl_text, classify_opts);
    if (*intersect) return run_intersect(ia_text, ib_text, inter_n, intersect_opts);
    if (*verify)
      return run_verify(suites_arg, families_arg, level_cap, force_cap, samples,
                        verify_opts);
  } catch (const pl::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
