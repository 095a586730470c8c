#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "pnilrep/padic.hpp"

using namespace pnilrep;

TEST_CASE("rational arithmetic basics") {
  Rat a(1, 2), b(1, 3);
  CHECK(a + b == Rat(5, 6));
  CHECK(a * b == Rat(1, 6));
  CHECK(a - b == Rat(1, 6));
  CHECK(a / b == Rat(3, 2));
  CHECK(Rat(-2, -4) == Rat(1, 2));
  CHECK(Rat(0, 5) == Rat(0));
  CHECK_THROWS_AS(a / Rat(0), Error);
}

TEST_CASE("valuations and norms") {
  CHECK(rat_valuation(Rat(9), 3) == 2);
  CHECK(rat_valuation(Rat(1, 9), 3) == -2);
  CHECK(rat_valuation(Rat(6, 5), 3) == 1);
  CHECK(rat_valuation(Rat(0), 3) == VAL_INFINITY);
  CHECK(class_norm(Rat(1, 9), 3) == 9);
  CHECK(class_norm(Rat(2, 7), 3) == 1);   // prime-to-p denominator: integral
  CHECK(class_denom_exp(Rat(5, 27), 3) == 3);
}

TEST_CASE("p-adic fractional part: fixed values") {
  // {5/3}_3 = 2/3 and {7/9}_3 = 7/9
  CHECK(frac_p(Rat(5, 3), 3) == Rat(2, 3));
  CHECK(frac_p(Rat(7, 9), 3) == Rat(7, 9));
  // integers and p-units in the denominator contribute nothing
  CHECK(frac_p(Rat(4), 3) == Rat(0));
  CHECK(frac_p(Rat(2, 7), 3) == Rat(0));
  // {1/2}_3: 1/2 = 2^{-1} in Z_3, fractional part 0
  CHECK(frac_p(Rat(1, 2), 3) == Rat(0));
  // mixed denominator 1/6 = (1/2)(1/3): only the 3-part survives;
  // 1/6 = 5 * (1/3) - 3/2 -> {1/6}_3 = {5/3}_3 = 2/3
  CHECK(frac_p(Rat(1, 6), 3) == Rat(2, 3));
  // negative input lands in [0,1)
  Rat f = frac_p(Rat(-1, 3), 3);
  CHECK(f == Rat(2, 3));
}

TEST_CASE("p-adic fractional part: additivity mod 1 (random)") {
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 200; ++trial) {
    int p = (trial % 2) ? 3 : 5;
    i64 n1 = i64(rng() % 200) - 100, d1 = i64(rng() % 50) + 1;
    i64 n2 = i64(rng() % 200) - 100, d2 = i64(rng() % 50) + 1;
    Rat a(n1, d1), b(n2, d2);
    Rat lhs = frac_p(a + b, p);
    Rat rhs = frac_p(frac_p(a, p) + frac_p(b, p), p);
    CHECK(lhs == rhs);
    // difference with the naive fractional part is a p-integer
    Rat diff = a - frac_p(a, p);
    int v = rat_valuation(diff, p);
    CHECK((v == VAL_INFINITY || v >= 0));
  }
}

TEST_CASE("zred reduces p-adically, not by rational truncation") {
  // 1/2 mod 9 = 5 since 2*5 = 10 = 1 mod 9
  CHECK(zred(Rat(1, 2), 9, 3) == 5);
  // 1/6 has a 3 in the denominator: not reducible mod a power of 3
  CHECK_THROWS_AS(zred(Rat(1, 3), 9, 3), Error);
  CHECK(zred(Rat(22, 7), 25, 5) == floor_mod(22 * mod_inverse(7, 25), 25));
}

TEST_CASE("PadicInt residue arithmetic and div_exact") {
  PadicInt x(3, 2, 1);
  CHECK(div_exact(x, 2).residue == 5);  // 1/2 mod 9
  PadicInt y(5, 2, 1);
  CHECK(div_exact(y, 6).residue == 21);  // 1/6 mod 25
  CHECK_THROWS_AS(div_exact(x, 3), Error);
  // mixing frames is rejected
  CHECK_THROWS_AS(PadicInt(3, 2, 1) + PadicInt(5, 2, 1), Error);
  CHECK_THROWS_AS(PadicInt(3, 2, 1) + PadicInt(3, 1, 1), Error);
  // valuation flags exhausted precision instead of fabricating digits
  CHECK(valuation(PadicInt(3, 2, 0)).at_least_precision);
  CHECK(valuation(PadicInt(3, 2, 6)).value == 1);
}

TEST_CASE("DualElem canonicalization, parse, norm") {
  DualElem e(3, 2, 3);  // 3/9 = 1/3
  CHECK(e.denom_exp == 1);
  CHECK(e.numer == 1);
  CHECK(e.to_string() == "1/3");
  CHECK(DualElem(3, 2, 0).is_trivial());
  CHECK(DualElem(3, 0, 0).to_string() == "1");
  CHECK(DualElem::parse("7/9", 3) == DualElem(3, 2, 7));
  CHECK(DualElem::parse("1", 3).is_trivial());
  CHECK_THROWS_AS(DualElem::parse("1/6", 3), Error);
  CHECK(DualElem(5, 2, 7).norm() == 25);
  CHECK(DualElem(3, 1, 2).val() == -1);
  CHECK(DualElem(3, 0, 0).val() == VAL_INFINITY);
}

TEST_CASE("fractional_part demands enough precision") {
  DualElem xi(3, 2, 7);  // 7/9
  PadicInt x1(3, 1, 1);
  CHECK_THROWS_AS(fractional_part(xi, x1), Error);
  PadicInt x2(3, 2, 7);
  PhaseRational ph = fractional_part(xi, x2);
  CHECK(ph.to_rat() == frac_p(Rat(49, 9), 3));
}

TEST_CASE("character evaluation is a homomorphism") {
  DualPoint xi{{DualElem(3, 2, 7), DualElem(3, 1, 1), DualElem(3, 0, 0)}};
  std::mt19937_64 rng(7);
  for (int t = 0; t < 50; ++t) {
    std::vector<PadicInt> x, y, s;
    for (int i = 0; i < 3; ++i) {
      x.emplace_back(3, 3, i64(rng() % 27));
      y.emplace_back(3, 3, i64(rng() % 27));
      s.push_back(x.back() + y.back());
    }
    auto lhs = character_eval(xi, s);
    auto rhs = character_eval(xi, x) * character_eval(xi, y);
    CHECK(std::abs(lhs - rhs) < 1e-12);
    CHECK(std::abs(std::abs(lhs) - 1.0) < 1e-12);
  }
}

TEST_CASE("Legendre symbol and lambda_p") {
  CHECK(legendre(1, 3) == 1);
  CHECK(legendre(2, 3) == -1);
  CHECK(legendre(4, 5) == 1);
  CHECK(legendre(2, 5) == -1);
  // lambda_3(1/3) = i (odd valuation, leading digit 1, 3 = 3 mod 4)
  CHECK(std::abs(lambda_p(Rat(1, 3), 3) - std::complex<double>(0, 1)) < 1e-12);
  // lambda_5(1/5) = 1 (odd valuation, leading digit 1, 5 = 1 mod 4)
  CHECK(std::abs(lambda_p(Rat(1, 5), 5) - std::complex<double>(1, 0)) < 1e-12);
  // even valuation -> 1
  CHECK(std::abs(lambda_p(Rat(1, 9), 3) - std::complex<double>(1, 0)) < 1e-12);
  // |lambda_p| = 1
  CHECK(std::abs(std::abs(lambda_p(Rat(2, 3), 3)) - 1.0) < 1e-12);
  CHECK_THROWS_AS(lambda_p(Rat(0), 3), Error);
}

TEST_CASE("PhaseRational exactness") {
  PhaseRational a = PhaseRational::from_rat(Rat(5, 9), 3);
  PhaseRational b = PhaseRational::from_rat(Rat(7, 9), 3);
  PhaseRational c = a + b;
  CHECK(c.to_rat() == Rat(3, 9) + Rat(0));  // 12/9 mod 1 = 1/3
  CHECK(std::abs(unit_phase(c.to_rat()) -
                 unit_phase(Rat(5, 9)) * unit_phase(Rat(7, 9))) < 1e-12);
}
