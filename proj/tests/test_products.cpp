#include <catch2/catch_amalgamated.hpp>

#include "pdet/charpoly.hpp"
#include "pdet/products.hpp"

using namespace pdet;
using boost::multiprecision::abs;
using boost::multiprecision::sqrt;

namespace {
Real tol(const PrecisionContext& ctx, int slack) { return pow10(-ctx.digits + slack); }
}  // namespace

TEST_CASE("asm counts") {
  CHECK(asm_count(1) == 1);
  CHECK(asm_count(2) == 2);
  CHECK(asm_count(3) == 7);
  CHECK(asm_count(4) == 42);
  CHECK(asm_count(5) == 429);
  CHECK_THROWS_AS(asm_count(0), DomainError);
}

TEST_CASE("half-turn symmetric asm counts") {
  CHECK(htsasm_count(1) == 1);
  CHECK(htsasm_count(2) == 2);
  CHECK(htsasm_count(3) == 3);
  CHECK(htsasm_count(4) == 10);
  CHECK(htsasm_count(5) == 25);
  CHECK(htsasm_count(6) == 140);
  CHECK_THROWS_AS(htsasm_count(0), DomainError);
}

TEST_CASE("special values: pinned examples") {
  SpecialValue s = exact_special_value(4, 3);
  CHECK(s.value == 16);
  CHECK_FALSE(s.sqrt3);
  SpecialValue z = exact_special_value(3, 3);
  CHECK(z.value == 0);
  SpecialValue w = exact_special_value(2, 1);
  CHECK(w.value == 4);
  CHECK_FALSE(w.sqrt3);
  CHECK_THROWS_AS(exact_special_value(2, 4), DomainError);
}

TEST_CASE("special values match exact D bit for bit, both parities") {
  // The rational content is compared exactly through the u-polynomial:
  //   theta=0    -> (odd: 2*)P(2)   = A_HT(2L)/A(L)
  //   theta=pi/3 ->        P(1)     = A_HT(L)^2        (sqrt3 cleared)
  //   theta=2pi/3->        P(-1)    = A(L)
  //   theta=pi   ->        P(-2)    = A(L/2)^4 or 0
  for (int L = 1; L <= 16; ++L) {
    DPoly d = DPoly::from(char_poly(L));
    const bool odd = (L % 2 != 0);
    {
      Rat lhs = d.eval_u_exact(Rat(2));
      if (odd) lhs *= 2;
      CHECK(lhs == exact_special_value(L, 0).value);
    }
    CHECK(d.eval_u_exact(Rat(1)) == exact_special_value(L, 1).value);
    CHECK(d.eval_u_exact(Rat(-1)) == exact_special_value(L, 2).value);
    if (odd) {
      CHECK(exact_special_value(L, 3).value == 0);
    } else {
      CHECK(d.eval_u_exact(Rat(-2)) == exact_special_value(L, 3).value);
    }
  }
}

TEST_CASE("phi: hand values and pole") {
  PrecisionContext ctx(45);
  DPoly d2 = DPoly::from(char_poly(2));
  // phi(2,theta) = (3 + 2cos theta)/4
  CHECK(abs(phi_exact(d2, ThetaValue::pi_multiple(1, 3), ctx) - 1) < tol(ctx, 3));
  ScopedPrecision sp(ctx.working());
  Real expect = (Real(3) + 2 * boost::multiprecision::cos(Real(1) / 5)) / 4;
  CHECK(abs(phi_exact(d2, ThetaValue::radians_value(Real(1) / 5), ctx) - expect) < tol(ctx, 3));

  DPoly d1 = DPoly::from(char_poly(1));
  CHECK(abs(phi_exact(d1, ThetaValue::pi_multiple(0, 1), ctx) - 1) < tol(ctx, 3));
  CHECK_THROWS_AS(phi_exact(d1, ThetaValue::pi_multiple(1, 1), ctx), DomainError);
  CHECK_THROWS_AS(phi_exact(d1, ThetaValue::pi_multiple(3, 1), ctx), DomainError);
}

TEST_CASE("loop probabilities: exact rationals summing to one") {
  DPoly d2 = DPoly::from(char_poly(2));
  LoopProbabilityVector v2 = loop_probabilities(d2);
  REQUIRE(v2.probs.size() == 2);
  CHECK(v2.probs[0] == Rat(3, 4));
  CHECK(v2.probs[1] == Rat(1, 4));
  CHECK(v2.nonnegative);

  DPoly d1 = DPoly::from(char_poly(1));
  LoopProbabilityVector v1 = loop_probabilities(d1);
  REQUIRE(v1.probs.size() == 1);
  CHECK(v1.probs[0] == 1);

  for (int L = 1; L <= 20; ++L) {
    LoopProbabilityVector v = loop_probabilities(DPoly::from(char_poly(L)));
    Rat sum(0);
    for (const Rat& p : v.probs) sum += p;
    CHECK(sum == 1);
    CHECK(v.nonnegative);
  }
}

TEST_CASE("odd-L HTSASM amplitude is 3^{-1/4} times the even-L one") {
  // Raw consecutive ratios are dominated by the (3 sqrt3/4)^{L^2/2} growth,
  // so the claim is tested on the growth-normalized second ratio
  //   t(L) = A_HT(L+1)^2 / (A_HT(L) A_HT(L+2)) * Lambda * sqrt(3),  L even,
  // which tends to 1 exactly when the odd/even amplitude ratio is 3^{-1/4}.
  PrecisionContext ctx(40);
  ScopedPrecision sp(ctx.working());
  Real lam = 3 * sqrt(Real(3)) / 4;
  Real prev_gap(-1);
  bool monotone = true;
  for (int L = 4; L <= 61; L += 3) {
    Real a = to_real(htsasm_count(L)), b = to_real(htsasm_count(L + 1)),
         c = to_real(htsasm_count(L + 2));
    Real s = b * b / (a * c) * lam;
    if (L % 2 == 0) {
      Real t = s * sqrt(Real(3));
      Real gap = abs(t - 1);
      if (prev_gap >= 0 && gap > prev_gap) monotone = false;
      prev_gap = gap;
    } else {
      // at odd anchors the product formulas telescope exactly
      CHECK(abs(s / sqrt(Real(3)) - 1) < tol(ctx, 5));
    }
  }
  CHECK(monotone);
  CHECK(prev_gap < Real(1) / 10000);
}
