#pragma once

// High-precision constants: pi, Euler's gamma, zeta(3), zeta'(-1).
//
// Every constant is computed by two independent routes that must agree to
// ctx.digits before the value is released; a disagreement means an
// implementation bug and raises ConsistencyError.  Values are cached per
// (constant, working digits) with serialized insertion.

#include <map>
#include <mutex>
#include <utility>

#include "pdet/bernoulli.hpp"
#include "pdet/numeric.hpp"

namespace pdet {

enum class Constant { pi, euler_gamma, zeta3, zeta_prime_minus1 };

namespace detail {

inline Real mpfr_pi() {
  Real r;
  mpfr_const_pi(r.backend().data(), MPFR_RNDN);
  return r;
}

inline Real mpfr_euler() {
  Real r;
  mpfr_const_euler(r.backend().data(), MPFR_RNDN);
  return r;
}

inline Real mpfr_zeta_int(unsigned n) {
  Real r;
  mpfr_zeta_ui(r.backend().data(), n, MPFR_RNDN);
  return r;
}

// Machin: pi = 16 atan(1/5) - 4 atan(1/239), Taylor for atan(1/m).
inline Real pi_machin() {
  const Real eps = pow10(-static_cast<long>(Real::default_precision()) - 5);
  auto atan_inv = [&](long m) {
    Real x = Real(1) / m, x2 = x * x, term = x, sum = x;
    long j = 1;
    while (boost::multiprecision::abs(term) > eps) {
      term *= x2;
      Real c = term / (2 * j + 1);
      if (j % 2 == 1)
        sum -= c;
      else
        sum += c;
      ++j;
    }
    return sum;
  };
  return 16 * atan_inv(5) - 4 * atan_inv(239);
}

// Brent-McMillan: gamma = S(n)/I(n) - log n + O(e^{-4n}).
inline Real euler_gamma_brent_mcmillan() {
  const long digits = static_cast<long>(Real::default_precision());
  const long n = static_cast<long>(0.59 * static_cast<double>(digits)) + 4;
  const Real eps = pow10(-digits - 5);
  Real term(1), S(0), I(1), H(0);
  for (long k = 1; k < 100 * n; ++k) {
    H += Real(1) / k;
    Real f = Real(n) / k;
    term *= f * f;
    I += term;
    S += term * H;
    if (k > 2 * n && term < eps * I) break;
  }
  return S / I - boost::multiprecision::log(Real(n));
}

// Apery-accelerated series: zeta(3) = 5/2 sum (-1)^{k-1} / (k^3 C(2k,k)).
inline Real zeta3_apery() {
  const long digits = static_cast<long>(Real::default_precision());
  const long kmax = static_cast<long>(1.7 * static_cast<double>(digits)) + 10;
  Int central = 2;  // C(2,1)
  Real sum(0);
  for (long k = 1; k <= kmax; ++k) {
    if (k > 1) {
      central *= 2 * (2 * k - 1);
      central /= k;
    }
    Real term = Real(1) / (to_real(Int(k) * k * k) * to_real(central));
    if (k % 2 == 1)
      sum += term;
    else
      sum -= term;
  }
  return sum * 5 / 2;
}

// zeta'(2) = -sum log n / n^2, head sum plus Euler-Maclaurin tail.
inline Real zeta_prime_2() {
  const long digits = static_cast<long>(Real::default_precision());
  const long N = (std::max)(40L, static_cast<long>(0.6 * static_cast<double>(digits)) + 10);
  const Real eps = pow10(-digits - 5);
  Real S(0);
  for (long n = 2; n < N; ++n)
    S += boost::multiprecision::log(Real(n)) / (Real(n) * n);
  Real logN = boost::multiprecision::log(Real(N));
  Real rN = Real(1) / N;
  // integral + half-node:  int_N^inf log x/x^2 dx = (log N + 1)/N
  Real tail = (logN + 1) * rN + logN * rN * rN / 2;
  // f(x) = log(x)/x^2 has f^{(j)}(x) = (a_j + b_j log x)/x^{2+j} with
  // a_{j+1} = b_j - (2+j) a_j and b_{j+1} = -(2+j) b_j.
  Rat a(0), b(1), inv_fact(1);
  Real xpow = rN * rN;
  for (int j = 0;; ++j) {
    Rat a_next = b - Rat(2 + j) * a;
    b = -Rat(2 + j) * b;
    a = a_next;
    xpow *= rN;
    inv_fact /= (j + 1);
    const int order = j + 1;
    if (order % 2 == 0) continue;
    const int two_k = order + 1;
    if (two_k > kBernoulliCap) throw PrecisionError("zeta_prime_2: tail did not converge");
    Real deriv = (to_real(a) + to_real(b) * logN) * xpow;
    Real term = to_real(bernoulli(two_k) * inv_fact / two_k) * deriv;
    tail -= term;
    if (boost::multiprecision::abs(term) < eps) break;
  }
  return -(S + tail);
}

// Functional-equation route: zeta'(-1) = 1/12 - log A,
// log A = (gamma + log(2 pi) - zeta'(2)/zeta(2)) / 12.
inline Real zeta_prime_minus1_functional(const Real& pi, const Real& gamma) {
  Real z2 = pi * pi / 6;
  Real logA = (gamma + boost::multiprecision::log(2 * pi) - zeta_prime_2() / z2) / 12;
  return Real(1) / 12 - logA;
}

// Series route: solve the log G(n+1) large-n expansion for its constant term
// using the exactly known log G(n+1) = sum_{j=2}^{n-1} (n-j) log j.
inline Real zeta_prime_minus1_series(const Real& pi) {
  const long digits = static_cast<long>(Real::default_precision());
  const long n = (std::max)(40L, static_cast<long>(0.6 * static_cast<double>(digits)) + 10);
  const Real eps = pow10(-digits - 5);
  Real logG(0);
  for (long j = 2; j < n; ++j) logG += Real(n - j) * boost::multiprecision::log(Real(j));
  Real logn = boost::multiprecision::log(Real(n));
  Real x = Real(n);
  Real main = x * x * (logn / 2 - Real(3) / 4) + boost::multiprecision::log(2 * pi) / 2 * x -
              logn / 12;
  Real series(0), inv2 = Real(1) / (x * x), p = inv2;
  for (int k = 1; k <= 98; ++k) {
    Real term = to_real(bernoulli(2 * k + 2)) / (4 * k * (k + 1)) * p;
    series += term;
    if (boost::multiprecision::abs(term) < eps) break;
    p *= inv2;
    if (2 * k + 4 > kBernoulliCap) throw PrecisionError("zeta_prime_minus1: tail did not converge");
  }
  return logG - main - series;
}

}  // namespace detail

inline Real constant(Constant which, const PrecisionContext& ctx) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, Real> cache;
  const int key_digits = ctx.working();
  const auto key = std::make_pair(static_cast<int>(which), key_digits);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  ScopedPrecision sp(key_digits + 5);
  Real a, b;
  switch (which) {
    case Constant::pi:
      a = detail::mpfr_pi();
      b = detail::pi_machin();
      break;
    case Constant::euler_gamma:
      a = detail::mpfr_euler();
      b = detail::euler_gamma_brent_mcmillan();
      break;
    case Constant::zeta3:
      a = detail::mpfr_zeta_int(3);
      b = detail::zeta3_apery();
      break;
    case Constant::zeta_prime_minus1: {
      Real pi = detail::mpfr_pi();
      Real gamma = detail::mpfr_euler();
      a = detail::zeta_prime_minus1_functional(pi, gamma);
      b = detail::zeta_prime_minus1_series(pi);
      break;
    }
  }
  if (digits_agree(a, b) < ctx.digits)
    throw ConsistencyError("constant: independent methods disagree");
  Real out;
  {
    ScopedPrecision sp2(key_digits);
    out = a + 0;  // round to the working precision
  }
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(key, out);
  return out;
}

}  // namespace pdet
