#include <padic_lattes/legendre.hpp>
#include <padic_lattes/parse.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace padic_lattes;
using namespace padic_lattes::legendre;

TEST_CASE("legendre torsion pair level 1 for seed 2") {
  const auto& tp = legendre_torsion_pair(Rat(2), 1);
  CHECK(tp.A == parse_poly("(4 - t)^2"));
  CHECK(tp.B == parse_poly("8*(2 - t)"));
  CHECK(tp.cancelled == UPoly::one('t'));
  CHECK_THROWS_AS(legendre_torsion_pair(Rat(0), 1), std::domain_error);
  CHECK_THROWS_AS(legendre_torsion_pair(Rat(1), 1), std::domain_error);
}

TEST_CASE("legendre pairs agree with direct orbit evaluation") {
  for (const Rat& a : {Rat(2), Rat(3), Rat(BigInt(1), BigInt(2))}) {
    for (const Rat& lambda : {Rat(5), Rat(BigInt(3), BigInt(7)), Rat(-2)}) {
      const RatMap f = family_map(lambda);
      ProjPoint w(a);
      for (long n = 0; n <= 3; ++n) {
        const auto& tp = legendre_torsion_pair(a, n);
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

TEST_CASE("cancellation bookkeeping reconstructs the raw one-step values") {
  for (const Rat& a : {Rat(2), Rat(3), Rat(BigInt(1), BigInt(2))}) {
    for (long n = 1; n <= 2; ++n) {
      const auto& prev = legendre_torsion_pair(a, n - 1);
      const auto& cur = legendre_torsion_pair(a, n);
      const UPoly t = UPoly::variable('t');
      const UPoly rawA = (prev.A * prev.A - t * (prev.B * prev.B)).pow(2);
      const UPoly rawB =
          Rat(4) * (prev.A * prev.B * (prev.A - prev.B) * (prev.A - t * prev.B));
      const UPoly step_gcd = cur.cancelled.divexact(prev.cancelled);
      CHECK(cur.A * step_gcd == rawA);
      CHECK(cur.B * step_gcd == rawB);
    }
  }
}

TEST_CASE("level-2 rational parameters for seed 2 are 4 and 4/3, both of valuation 2") {
  const auto& tp = legendre_torsion_pair(Rat(2), 2);
  std::vector<Rat> roots;
  for (const auto& [r, m] : rational_roots(tp.A).roots) roots.push_back(r);
  for (const auto& [r, m] : rational_roots(tp.B).roots) roots.push_back(r);
  bool has4 = false, has43 = false;
  for (const auto& r : roots) {
    has4 = has4 || r == Rat(4);
    has43 = has43 || r == Rat(BigInt(4), BigInt(3));
  }
  CHECK(has4);
  CHECK(has43);
  CHECK(val_of(Rat(4), 2).value() == Rat(2));
  CHECK(val_of(Rat(BigInt(4), BigInt(3)), 2).value() == Rat(2));
  // f_4 sends 2 to 0 and f_{4/3} fixes the image chain rationally
  CHECK(family_map(Rat(4)).eval(ProjPoint(Rat(2))) == ProjPoint(Rat(0)));
  CHECK(family_map(Rat(BigInt(4), BigInt(3))).eval(ProjPoint(Rat(2))) ==
        ProjPoint(Rat(BigInt(4), BigInt(3))));
}

TEST_CASE("t2 claim at levels 2 and 3") {
  for (long n = 2; n <= 3; ++n) {
    const auto rep = t2_claim_verify(n);
    INFO("n = " << n);
    CHECK(rep.pass);
  }
  CHECK_THROWS_AS(t2_claim_verify(1), std::domain_error);
}

TEST_CASE("reciprocal mirror for seed 1/2") {
  const auto rep = t2_claim_verify(Rat(BigInt(1), BigInt(2)), 2, Rat(-2));
  CHECK(rep.pass);
}

TEST_CASE("hits-infinity roots produce infinity within n steps") {
  for (const Rat& a : {Rat(2), Rat(3), Rat(BigInt(1), BigInt(2))}) {
    for (long n = 1; n <= 3; ++n) {
      const auto& tp = legendre_torsion_pair(a, n);
      for (const auto& [lambda, mult] : rational_roots(tp.B).roots) {
        if (lambda.is_zero() || lambda == Rat(1)) continue;
        const OrbitRecord rec = orbit(family_map(lambda), ProjPoint(a), n + 2);
        bool reached = false;
        for (std::size_t i = 0; i < rec.points.size() &&
                                i <= static_cast<std::size_t>(n);
             ++i)
          reached = reached || rec.points[i].is_infinity();
        // the orbit may legally stop before storing infinity only by
        // repeating; re-evaluate the map on the last stored point
        if (!reached && rec.points.size() <= static_cast<std::size_t>(n))
          reached = family_map(lambda).eval(rec.points.back()).is_infinity();
        CHECK(reached);
      }
    }
  }
}

TEST_CASE("stoll escape certificates") {
  CHECK(stoll_escape_check(Rat(2), Rat(BigInt(1), BigInt(2))).has_value());
  CHECK(stoll_escape_check(Rat(3), Rat(BigInt(1), BigInt(4))).has_value());
  CHECK_FALSE(stoll_escape_check(Rat(2), Rat(4)).has_value());
  CHECK_FALSE(stoll_escape_check(Rat(2), Rat(2)).has_value());  // lambda = alpha
  // |alpha| > 1 with integral lambda
  CHECK(stoll_escape_check(Rat(BigInt(1), BigInt(2)), Rat(3)).has_value());
}

TEST_CASE("stoll theorem restated on the found parameters") {
  // for every rational lambda in a level-<=3 torsion polynomial with
  // |alpha| <= 1: |alpha^2 - lambda| < 1 unless lambda = alpha
  for (const Rat& a : {Rat(2), Rat(3)}) {
    for (long n = 1; n <= 3; ++n) {
      const auto& tp = legendre_torsion_pair(a, n);
      for (const auto* side : {&tp.A, &tp.B}) {
        for (const auto& [lambda, mult] : rational_roots(*side).roots) {
          if (lambda.is_zero() || lambda == Rat(1) || lambda == a) continue;
          const Rat diff = a * a - lambda;
          CHECK((diff.is_zero() || val_of(diff, 2).value() > Rat(0)));
        }
      }
    }
  }
}

TEST_CASE("reciprocal identity") {
  CHECK(reciprocal_identity_check(1));
  CHECK(reciprocal_identity_check(2));
  CHECK_THROWS_AS(reciprocal_identity_check(0), std::domain_error);
  CHECK_THROWS_AS(reciprocal_identity_check(4), std::domain_error);
  // numeric spot check: f_{1/4}(1/2) = (1/4) f_4(2) = 0
  CHECK(family_map(Rat(BigInt(1), BigInt(4))).eval(ProjPoint(Rat(BigInt(1), BigInt(2)))) ==
        ProjPoint(Rat(0)));
  CHECK(family_map(Rat(4)).eval(ProjPoint(Rat(2))) == ProjPoint(Rat(0)));
}
