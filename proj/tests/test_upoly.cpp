#include <padic_lattes/parse.hpp>
#include <padic_lattes/poly_gcd.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace padic_lattes;

namespace {

UPoly random_poly(std::mt19937_64& rng, int max_deg, long coeff_range) {
  std::uniform_int_distribution<int> degd(0, max_deg);
  std::uniform_int_distribution<long> cd(-coeff_range, coeff_range);
  std::vector<Rat> c(static_cast<std::size_t>(degd(rng)) + 1);
  for (auto& x : c) x = Rat(BigInt(cd(rng)));
  UPoly p(std::move(c));
  return p.is_zero() ? UPoly::one() : p;
}

}  // namespace

TEST_CASE("UPoly basics") {
  const UPoly t = UPoly::variable();
  CHECK((t.pow(2) + Rat(2) * t + UPoly(Rat(1))).eval(Rat(3)) == Rat(16));
  CHECK(UPoly::zero().degree() == -1);
  CHECK(t.pow(4).derivative() == Rat(4) * t.pow(3));
  CHECK(parse_poly("t^2+2*t+1").divexact(parse_poly("t+1")) == parse_poly("t+1"));
  CHECK_THROWS_AS(parse_poly("t^2+1").divexact(parse_poly("t+1")), std::domain_error);

  auto [q, r] = parse_poly("t^3 - 2*t + 5").divmod(parse_poly("2*t - 1"));
  CHECK(q * parse_poly("2*t - 1") + r == parse_poly("t^3 - 2*t + 5"));
  CHECK(r.degree() < 1);
}

TEST_CASE("taylor_shift") {
  CHECK(UPoly::variable().pow(2).taylor_shift(Rat(1)) == parse_poly("t^2 + 2*t + 1"));
  const UPoly p = parse_poly("3*t^3 - t + 7/2");
  CHECK(p.taylor_shift(Rat(0)) == p);
  // q(s) = p(s + c) pointwise
  const Rat c(BigInt(5), BigInt(3));
  const UPoly q = p.taylor_shift(c);
  for (long x = -3; x <= 3; ++x)
    CHECK(q.eval(Rat(x)) == p.eval(Rat(x) + c));
}

TEST_CASE("poly_gcd worked examples") {
  // A_1(1,t), B_1(1,t) from one hand-expansion of the torsion recursion
  CHECK(poly_gcd(parse_poly("1 - 8*t"), parse_poly("4 + 4*t")) == UPoly::one());
  CHECK(poly_gcd(parse_poly("(1+t)^2"), parse_poly("(1+t)^3")) ==
        parse_poly("(1+t)^2"));
  CHECK_THROWS_AS(poly_gcd(UPoly::zero(), UPoly::zero()), std::domain_error);
  CHECK(poly_gcd(UPoly::zero(), parse_poly("3*t+3")) == parse_poly("t+1"));
}

TEST_CASE("gcd divides both and cofactors are coprime") {
  std::mt19937_64 rng(101);
  for (int i = 0; i < 120; ++i) {
    UPoly a = random_poly(rng, 6, 8), b = random_poly(rng, 6, 8);
    UPoly shared = random_poly(rng, 3, 4);
    a *= shared;
    b *= shared;
    const UPoly g = poly_gcd(a, b);
    CHECK(g.divides(a));
    CHECK(g.divides(b));
    CHECK(poly_gcd(a.divexact(g), b.divexact(g)) == UPoly::one());
    CHECK(g.is_monic());
  }
}

TEST_CASE("modular gcd agrees with the subresultant route") {
  std::mt19937_64 rng(202);
  for (int i = 0; i < 80; ++i) {
    UPoly a = random_poly(rng, 7, 30), b = random_poly(rng, 7, 30);
    UPoly shared = random_poly(rng, 4, 10);
    a *= shared;
    b *= shared;
    CHECK(poly_gcd(a, b) == poly_gcd_subresultant(a, b));
  }
  // rational coefficients clear correctly
  const UPoly a = parse_poly("1/2*t^2 + t + 1/2");
  const UPoly b = parse_poly("1/3*t + 1/3");
  CHECK(poly_gcd(a, b) == parse_poly("t + 1"));
  CHECK(poly_gcd_subresultant(a, b) == parse_poly("t + 1"));
}

TEST_CASE("primitive_int round trip") {
  std::mt19937_64 rng(303);
  std::uniform_int_distribution<long> cd(-30, 30);
  std::uniform_int_distribution<long> dd(1, 12);
  for (int i = 0; i < 100; ++i) {
    std::vector<Rat> c(5);
    for (auto& x : c) x = Rat(BigInt(cd(rng)), BigInt(dd(rng)));
    const UPoly p(std::move(c));
    if (p.is_zero()) continue;
    auto [scale, ints] = p.primitive_int();
    CHECK(scale * UPoly::from_int_coeffs(ints) == p);
    CHECK(ints.back() > 0);
    BigInt content = 0;
    for (const auto& x : ints) content = boost::multiprecision::gcd(content, x);
    CHECK(content == 1);
  }
}
