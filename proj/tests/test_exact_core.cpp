#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>

#include "pdet/cache.hpp"
#include "pdet/charpoly.hpp"
#include "pdet/dvalue.hpp"
#include "pdet/paths.hpp"

using namespace pdet;
using boost::multiprecision::abs;
using boost::multiprecision::cos;

namespace {
Real tol(const PrecisionContext& ctx, int slack) { return pow10(-ctx.digits + slack); }
}  // namespace

TEST_CASE("pascal matrix small cases") {
  CHECK_THROWS_AS(pascal_matrix(0), DomainError);
  ExactMatrix m1 = pascal_matrix(1);
  CHECK(m1.at(0, 0) == 1);
  ExactMatrix m2 = pascal_matrix(2);
  CHECK(m2.at(0, 0) == 1);
  CHECK(m2.at(0, 1) == 1);
  CHECK(m2.at(1, 0) == 1);
  CHECK(m2.at(1, 1) == 2);
  ExactMatrix m3 = pascal_matrix(3);
  CHECK(m3.at(2, 2) == 6);
  CHECK(m3.at(1, 2) == 3);
  for (int r = 0; r < 3; ++r)
    for (int s = 0; s < 3; ++s) CHECK(m3.at(r, s) == m3.at(s, r));
}

TEST_CASE("char poly hand values and symmetry") {
  CharPolyRecord r1 = char_poly(1);
  CHECK(r1.coeffs == std::vector<Int>{Int(1), Int(-1)});
  CharPolyRecord r2 = char_poly(2);
  CHECK(r2.coeffs == std::vector<Int>{Int(1), Int(-3), Int(1)});
  CharPolyRecord r4 = char_poly(4);
  CHECK(r4.coeffs[0] == 1);
  CHECK(r4.coeffs[4] == 1);
  for (int j = 0; j <= 4; ++j) CHECK(r4.coeffs[static_cast<size_t>(4 - j)] == r4.coeffs[static_cast<size_t>(j)]);
  CHECK_THROWS_AS(char_poly(0), DomainError);
}

TEST_CASE("char poly against direct Bareiss determinants at fresh points") {
  // evaluation points beyond the interpolation nodes
  for (int L : {3, 4, 6, 9}) {
    CharPolyRecord rec = char_poly(L);
    for (Int x : {Int(L + 3), Int(-2), Int(17)}) {
      Int horner(0);
      for (size_t j = rec.coeffs.size(); j-- > 0;) horner = horner * x + rec.coeffs[j];
      CHECK(horner == pascal_shifted_det(L, x));
    }
  }
}

TEST_CASE("char poly invariants for both parities") {
  for (int L = 1; L <= 14; ++L) {
    CharPolyRecord rec = char_poly(L);
    CHECK_NOTHROW(validate(rec));
  }
}

TEST_CASE("eval_D pinned values") {
  PrecisionContext ctx(50);
  CharPolyRecord r1 = char_poly(1);
  CHECK(abs(eval_D(r1, ThetaValue::pi_multiple(0, 1), ctx) - 2) < tol(ctx, 3));
  CharPolyRecord r2 = char_poly(2);
  CHECK(abs(eval_D(r2, ThetaValue::pi_multiple(1, 2), ctx) - 3) < tol(ctx, 3));
  CharPolyRecord r4 = char_poly(4);
  CHECK(abs(eval_D(r4, ThetaValue::pi_multiple(1, 1), ctx) - 16) < tol(ctx, 3));
}

TEST_CASE("eval_D is exactly even in theta") {
  PrecisionContext ctx(40);
  CharPolyRecord rec = char_poly(7);
  DPoly d = DPoly::from(rec);
  for (auto [p, q] : {std::pair{1, 3}, {2, 5}, {5, 7}}) {
    Real a = d.eval(ThetaValue::pi_multiple(p, q), ctx);
    Real b = d.eval(ThetaValue::pi_multiple(-p, q), ctx);
    CHECK(a == b);  // same cosine polynomial, same bits
  }
}

TEST_CASE("complex assembly: real part matches, imaginary residue negligible") {
  PrecisionContext ctx(45);
  for (int L : {3, 4, 6}) {
    DPoly d = DPoly::from(char_poly(L));
    for (auto [p, q] : {std::pair{1, 5}, {3, 7}, {2, 3}}) {
      ThetaValue th = ThetaValue::pi_multiple(p, q);
      Cplx z = d.eval_complex_assembly(th, ctx);
      ScopedPrecision sp(ctx.working());
      CHECK(abs(z.im) < tol(ctx, 5));
      CHECK(abs(z.re - d.eval(th, ctx)) < tol(ctx, 5) * (abs(z.re) + 1));
    }
  }
}

TEST_CASE("derivatives: hand values") {
  PrecisionContext ctx(50);
  CharPolyRecord r2 = char_poly(2);
  // D(2,theta) = 3 + 2cos(theta)
  auto d1 = eval_D_derivatives(r2, ThetaValue::pi_multiple(1, 2), 1, ctx);
  CHECK(abs(d1[0] - 3) < tol(ctx, 3));
  CHECK(abs(d1[1] + 2) < tol(ctx, 3));
  auto d2 = eval_D_derivatives(r2, ThetaValue::pi_multiple(0, 1), 2, ctx);
  CHECK(abs(d2[1]) < tol(ctx, 3));
  CHECK(abs(d2[2] + 2) < tol(ctx, 3));
  // evenness: first derivative vanishes at 0 for any L
  for (int L : {3, 5, 8}) {
    auto d = eval_D_derivatives(char_poly(L), ThetaValue::pi_multiple(0, 1), 1, ctx);
    CHECK(abs(d[1]) < tol(ctx, 3));
  }
  CHECK_THROWS_AS(eval_D_derivatives(r2, ThetaValue::pi_multiple(0, 1), 9, ctx), DomainError);
}

TEST_CASE("derivatives agree with central finite differences") {
  PrecisionContext ctx(60);
  DPoly d = DPoly::from(char_poly(6));
  ScopedPrecision sp(ctx.working());
  Real h = pow10(-ctx.digits / 4);
  Real reltol = pow10(-ctx.digits / 4);
  for (auto [p, q] : {std::pair{1, 3}, {1, 2}, {4, 5}}) {
    ThetaValue th = ThetaValue::pi_multiple(p, q);
    Real t0 = th.radians(ctx);
    Real plus = d.eval(ThetaValue::radians_value(t0 + h), ctx);
    Real minus = d.eval(ThetaValue::radians_value(t0 - h), ctx);
    Real fd = (plus - minus) / (2 * h);
    Real an = d.derivatives(th, 1, ctx)[1];
    CHECK(abs(fd - an) < reltol * (abs(an) + 1));
  }
}

TEST_CASE("path oracle: configuration counts") {
  auto c1 = path_configuration_counts(1);
  CHECK(c1 == std::vector<Int>{Int(1), Int(1)});
  auto c2 = path_configuration_counts(2);
  CHECK(c2 == std::vector<Int>{Int(1), Int(3), Int(1)});
  CHECK_THROWS_AS(path_configuration_counts(6), DomainError);
  CHECK_THROWS_AS(path_configuration_counts(0), DomainError);
}

TEST_CASE("path oracle equals det(B + e^{i theta} I) for L <= 5") {
  PrecisionContext ctx(40);
  for (int L = 1; L <= 5; ++L) {
    DPoly d = DPoly::from(char_poly(L));
    for (int g = 0; g < 6; ++g) {
      ThetaValue th = ThetaValue::pi_multiple(2 * g + 1, 9);
      Cplx lhs = path_weight_oracle(L, th, ctx);
      // det(B + e^{i th} I) = e^{i th L/2} D(L, th)
      ScopedPrecision sp(ctx.working());
      Real dv = d.eval(th, ctx);
      Cplx rhs = unit_phase(th.radians(ctx) * L / 2);
      rhs.re *= dv;
      rhs.im *= dv;
      CHECK(abs(lhs.re - rhs.re) < tol(ctx, 5) * (abs(rhs.re) + 1));
      CHECK(abs(lhs.im - rhs.im) < tol(ctx, 5) * (abs(rhs.re) + 1));
    }
  }
  // L=3, theta=0: value equals det of 3x3 (B+I)
  Cplx v = path_weight_oracle(3, ThetaValue::pi_multiple(0, 1), PrecisionContext(30));
  ExactMatrix m = pascal_matrix(3);
  for (int i = 0; i < 3; ++i) m.at(i, i) += 1;
  CHECK(abs(v.re - to_real(bareiss_det(std::move(m)))) < pow10(-20));
}

TEST_CASE("cache: round trip, tampering, absence") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "pdet_cache_test";
  fs::remove_all(dir);

  CharPolyRecord rec = char_poly(2);
  cache_store(dir, rec);
  CharPolyRecord back = cache_load(dir, 2);
  CHECK(back.coeffs == rec.coeffs);

  CHECK_THROWS_AS(cache_load(dir, 5), CacheMissing);

  // flip a digit in the payload: digest must catch it
  {
    fs::path f = cache_file(dir, 2);
    std::ifstream in(f);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    in.close();
    auto pos = text.find("-3");
    REQUIRE(pos != std::string::npos);
    text[pos + 1] = '7';
    std::ofstream out(f, std::ios::trunc);
    out << text;
  }
  CHECK_THROWS_AS(cache_load(dir, 2), CacheChecksumMismatch);

  // well-formed file with a valid digest but impossible coefficients:
  // the invariant check must reject it
  {
    std::string payload = "pascal-charpoly v1 L=2\n2\n-3\n1\n";
    std::ofstream out(cache_file(dir, 2), std::ios::trunc);
    out << payload << "sha256=" << pdet::detail::sha256_hex(payload) << "\n";
  }
  CHECK_THROWS_AS(cache_load(dir, 2), CacheInvariantViolation);

  fs::remove_all(dir);
}

TEST_CASE("cache_get_or_compute hits the cache on rerun") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "pdet_cache_test2";
  fs::remove_all(dir);
  CharPolyRecord a = cache_get_or_compute(dir, 6);
  REQUIRE(fs::exists(cache_file(dir, 6)));
  auto t0 = fs::last_write_time(cache_file(dir, 6));
  CharPolyRecord b = cache_get_or_compute(dir, 6);
  CHECK(a.coeffs == b.coeffs);
  CHECK(fs::last_write_time(cache_file(dir, 6)) == t0);
  fs::remove_all(dir);
}
