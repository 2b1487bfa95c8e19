#include <padic_lattes/general_family.hpp>
#include <padic_lattes/parse.hpp>
#include <padic_lattes/rational_roots.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace padic_lattes;
using namespace padic_lattes::general;

TEST_CASE("gen torsion pairs, worked levels") {
  const GenFamilyParams p23{2, 3};
  {
    const auto tp = gen_torsion_pair(p23, Rat(1), 1);
    CHECK(tp.A == parse_poly("1 + t"));
    CHECK(tp.B == parse_poly("3"));
  }
  {
    const auto tp = gen_torsion_pair(p23, Rat(1), 2);
    CHECK(tp.A == parse_poly("(1+t)^2 + 9*t"));
    CHECK(tp.B == parse_poly("9*(1+t)"));
  }
  {
    const auto tp = gen_torsion_pair(GenFamilyParams{3, 2}, Rat(1), 1);
    CHECK(tp.A == parse_poly("1 + t"));
    CHECK(tp.B == parse_poly("2"));
  }
  CHECK_THROWS_AS(gen_torsion_pair(p23, Rat(0), 1), std::domain_error);
  CHECK_THROWS_AS(gen_torsion_pair(GenFamilyParams{1, 3}, Rat(1), 1),
                  std::domain_error);
  CHECK_THROWS_AS(gen_torsion_pair(GenFamilyParams{2, 4}, Rat(1), 1),
                  std::domain_error);
}

TEST_CASE("degree law deg A_n = d^(n-1)") {
  for (long d : {2L, 3L, 4L}) {
    for (long p : {2L, 3L, 5L}) {
      if (d == 2 && p == 2) continue;  // cancellation-free growth holds anyway
      const GenFamilyParams params{d, BigInt(p)};
      for (long n = 1; n <= 4; ++n) {
        const auto tp = gen_torsion_pair(params, Rat(1), n);
        long want = 1;
        for (long i = 1; i < n; ++i) want *= d;
        CHECK(tp.A.degree() == want);
      }
    }
  }
}

TEST_CASE("gen pairs agree with direct orbit evaluation") {
  const GenFamilyParams params{2, 3};
  for (const Rat& a : {Rat(1), Rat(2), Rat(BigInt(1), BigInt(3))}) {
    for (const Rat& lambda : {Rat(1), Rat(-5), Rat(BigInt(2), BigInt(9))}) {
      const RatMap f = family_map(params, lambda);
      ProjPoint w(a);
      for (long n = 0; n <= 3; ++n) {
        const auto tp = gen_torsion_pair(params, a, n);
        const Rat bn = tp.B.eval(lambda);
        if (w.is_infinity()) {
          CHECK(bn.is_zero());
        } else {
          CHECK_FALSE(bn.is_zero());
          CHECK(tp.A.eval(lambda) / bn == w.affine());
        }
        w = f.eval(w);
      }
    }
  }
}

TEST_CASE("shifted spectrum worked example (d=2, p=3, a=1)") {
  const GenFamilyParams params{2, 3};
  // A_2(s - 1) = s^2 + 9s - 9
  const auto tp = gen_torsion_pair(params, Rat(1), 2);
  CHECK(tp.A.taylor_shift(Rat(-1)) == parse_poly("t^2 + 9*t - 9"));
  const auto sp = root_valuations(parse_poly("t^2 + 9*t - 9"), 3);
  REQUIRE(sp.entries.size() == 1);
  CHECK(sp.entries[0] == std::make_pair(Rat(1), 2L));

  const auto rep = shifted_spectrum_check(params, Rat(1), 2);
  CHECK(rep.pass);
  // boundary case: A_1(s - 1) = s, the exact root lambda = -a^d
  const auto tp1 = gen_torsion_pair(params, Rat(1), 1);
  CHECK(tp1.A.taylor_shift(Rat(-1)) == UPoly::variable('t'));
}

TEST_CASE("shifted spectra for the criterion grid") {
  CHECK(shifted_spectrum_check(GenFamilyParams{2, 3}, Rat(1), 3).pass);
  CHECK(shifted_spectrum_check(GenFamilyParams{3, 2}, Rat(1), 3).pass);
  CHECK(shifted_spectrum_check(GenFamilyParams{2, 5}, Rat(2), 3).pass);
  CHECK_THROWS_AS(shifted_spectrum_check(GenFamilyParams{2, 3}, Rat(BigInt(1), BigInt(3)), 2),
                  std::domain_error);
}

TEST_CASE("escape certificates") {
  const GenFamilyParams p23{2, 3};
  CHECK(gen_escape_check(p23, Rat(1), Rat(BigInt(1), BigInt(3))).has_value());
  CHECK(gen_escape_check(p23, Rat(BigInt(1), BigInt(3)), Rat(1)).has_value());
  CHECK_FALSE(gen_escape_check(p23, Rat(1), Rat(-1)).has_value());
  CHECK(gen_escape_check(p23, Rat(1), Rat(1)).has_value());  // |1 + 1|_3 = 1
}

TEST_CASE("escape soundness against level-<=3 root sets") {
  const GenFamilyParams p23{2, 3};
  std::mt19937_64 rng(909);
  std::uniform_int_distribution<long> nd(-9, 9), dd(1, 9);
  for (int i = 0; i < 150; ++i) {
    long nn = 0;
    while (nn == 0) nn = nd(rng);
    const Rat alpha(BigInt(nn), BigInt(dd(rng)));
    long ll = 0;
    while (ll == 0) ll = nd(rng);
    const Rat lambda(BigInt(ll), BigInt(dd(rng)));
    if (!gen_escape_check(p23, alpha, lambda)) continue;
    for (long n = 1; n <= 3; ++n) {
      const auto tp = gen_torsion_pair(p23, alpha, n);
      CHECK_FALSE(tp.A.eval(lambda).is_zero());
      CHECK_FALSE(tp.B.eval(lambda).is_zero());
    }
  }
}

TEST_CASE("rational roots of hits-0 polynomials reach 0 and satisfy the shift bound") {
  struct Case {
    long d;
    long p;
    Rat a;
  };
  for (const Case& c : {Case{2, 3, Rat(1)}, Case{3, 2, Rat(1)}, Case{2, 5, Rat(2)}}) {
    const GenFamilyParams params{c.d, BigInt(c.p)};
    for (long n = 1; n <= 3; ++n) {
      const auto tp = gen_torsion_pair(params, c.a, n);
      for (const auto& [lambda, mult] : rational_roots(tp.A).roots) {
        const OrbitRecord rec =
            orbit(family_map(params, lambda), ProjPoint(c.a), n + 2);
        bool reaches_zero = false;
        for (std::size_t i = 0; i < rec.points.size() &&
                                i <= static_cast<std::size_t>(n);
             ++i)
          reaches_zero = reaches_zero || rec.points[i] == ProjPoint(Rat(0));
        CHECK(reaches_zero);
        const Rat shifted = c.a.pow(c.d) + lambda;
        CHECK((shifted.is_zero() ||
               val_of(shifted, BigInt(c.p)).value() >= Rat(1)));
      }
    }
  }
}

TEST_CASE("rho_reduce") {
  CHECK(rho_reduce(Rat(BigInt(1), BigInt(3)), 3) == ResiduePoint{true, 0});
  CHECK(rho_reduce(Rat(7), 3) == ResiduePoint{false, 1});
  CHECK(rho_reduce(Rat(0), 5) == ResiduePoint{false, 0});
  CHECK(rho_reduce(ProjPoint::infinity(), 5) == ResiduePoint{true, 0});
  CHECK(rho_reduce(Rat(BigInt(2), BigInt(5)), 3) == ResiduePoint{false, 1});  // 2 * 5^{-1} = 2*2 = 4 = 1 mod 3

  // multiplicative on units
  std::mt19937_64 rng(111);
  std::uniform_int_distribution<long> d(1, 40);
  for (int i = 0; i < 100; ++i) {
    for (long p : {3L, 5L, 7L}) {
      const Rat x(BigInt(d(rng)), BigInt(d(rng)));
      const Rat y(BigInt(d(rng)), BigInt(d(rng)));
      if (val_of(x, p).value() != Rat(0) || val_of(y, p).value() != Rat(0))
        continue;
      const auto rx = rho_reduce(x, p), ry = rho_reduce(y, p), rxy = rho_reduce(x * y, p);
      CHECK(rxy.residue == rx.residue * ry.residue % p);
    }
  }
}

TEST_CASE("disjointness checks") {
  {
    const auto rep = disjointness_check(GenFamilyParams{2, 5}, Rat(1), Rat(2), 2);
    CHECK_FALSE(rep.refused);
    CHECK(rep.pass);
  }
  {
    const auto rep = disjointness_check(GenFamilyParams{2, 3}, Rat(1), Rat(2), 2);
    CHECK(rep.refused);
    CHECK(rep.refusal_reason.find("rho") != std::string::npos);
  }
  {
    const auto rep = disjointness_check(GenFamilyParams{3, 2}, Rat(1), Rat(BigInt(1), BigInt(2)), 2);
    CHECK_FALSE(rep.refused);
    CHECK(rep.pass);
  }
}

TEST_CASE("conjugation examples and fixed-point multipliers") {
  for (const auto& rec : conjugation_examples()) {
    INFO(rec.check);
    CHECK(rec.pass);
  }
  for (const auto& rec : fixed_point_multiplier_checks()) {
    INFO(rec.check);
    CHECK(rec.pass);
  }
}
