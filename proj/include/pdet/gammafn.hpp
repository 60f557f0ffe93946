#pragma once

// Gamma, digamma and polygamma on the positive real axis.
//
// Gamma itself is delegated to MPFR.  psi_p for p <= 6 uses the Hurwitz-style
// series sum (n+z)^{-p-1} with an Euler-Maclaurin tail, which gives uniform
// accuracy control at the rational arguments (1/6, 1/3, 2/3, ...) the
// asymptotics need.

#include "pdet/bernoulli.hpp"
#include "pdet/numeric.hpp"

namespace pdet {

inline constexpr int kPolygammaCap = 6;

inline Real gamma_fn(const Real& z, const PrecisionContext& ctx) {
  if (z <= 0) throw DomainError("gamma_fn: argument must be positive");
  ScopedPrecision sp(ctx.working());
  Real x = z + 0;
  Real r;
  mpfr_gamma(r.backend().data(), x.backend().data(), MPFR_RNDN);
  return r;
}

// log |Gamma(x)| with the sign of Gamma(x), valid away from the poles.
// Used internally by the Barnes recurrence, which walks through negative
// arguments.  Assumes an enclosing ScopedPrecision.
inline Real lgamma_signed(const Real& x, int& sign) {
  Real r;
  mpfr_lgamma(r.backend().data(), &sign, x.backend().data(), MPFR_RNDN);
  return r;
}

namespace detail {

// sum_{n=0}^{inf} (n+z)^{-s} for integer s >= 2 at the current precision.
inline Real hurwitz_int(int s, const Real& z) {
  const long digits = static_cast<long>(Real::default_precision());
  const Real eps = pow10(-digits - 3);
  long N = (std::max)(2L, static_cast<long>(0.45 * static_cast<double>(digits)) + 16 -
                              z.convert_to<long>());
  for (int attempt = 0;; ++attempt, N = N * 2) {
    Real head(0);
    for (long n = 0; n < N; ++n)
      head += boost::multiprecision::pow(z + n, -s);
    Real w = z + N;
    Real invw = Real(1) / w;
    Real w1ms = boost::multiprecision::pow(w, 1 - s);
    Real tail = w1ms / (s - 1) + w1ms * invw / 2;
    // -B_{2k}/(2k)! f^{(2k-1)}(N) = +B_{2k}/(2k)! (s)_{2k-1} w^{1-s-2k}
    Rat rising(s);        // (s)_{2k-1}
    Rat inv_fact(1, 2);   // 1/(2k)!
    Real wpow = w1ms * invw * invw;  // w^{1-s-2k}, starting at k=1
    bool done = false;
    for (int k = 1; 2 * k <= kBernoulliCap; ++k) {
      if (k > 1) {
        rising *= Rat(s + 2 * k - 3) * Rat(s + 2 * k - 2);
        inv_fact /= Rat(2 * k - 1) * Rat(2 * k);
        wpow *= invw * invw;
      }
      Real term = to_real(bernoulli(2 * k) * inv_fact * rising) * wpow;
      tail += term;
      if (boost::multiprecision::abs(term) < eps) {
        done = true;
        break;
      }
    }
    if (done) return head + tail;
    if (attempt > 3) throw PrecisionError("hurwitz_int: Euler-Maclaurin tail did not converge");
  }
}

}  // namespace detail

// psi(z) = d/dz log Gamma(z), z > 0.  Assumes an enclosing ScopedPrecision
// when called through polygamma(); the public entry sets one up.
inline Real digamma_at(const Real& z) {
  const long digits = static_cast<long>(Real::default_precision());
  const Real eps = pow10(-digits - 3);
  long N = (std::max)(2L, static_cast<long>(0.45 * static_cast<double>(digits)) + 16 -
                              z.convert_to<long>());
  for (int attempt = 0;; ++attempt, N = N * 2) {
    Real head(0);
    for (long n = 0; n < N; ++n) head += Real(1) / (z + n);
    Real w = z + N;
    Real invw = Real(1) / w;
    Real tail = boost::multiprecision::log(w) - invw / 2;
    Real wp = invw * invw;
    bool done = false;
    for (int k = 1; 2 * k <= kBernoulliCap; ++k) {
      Real term = to_real(bernoulli(2 * k) / (2 * k)) * wp;
      tail -= term;
      if (boost::multiprecision::abs(term) < eps) {
        done = true;
        break;
      }
      wp *= invw * invw;
    }
    if (done) return tail - head;
    if (attempt > 3) throw PrecisionError("digamma: Euler-Maclaurin tail did not converge");
  }
}

inline Real polygamma(int p, const Real& z, const PrecisionContext& ctx) {
  if (z <= 0) throw DomainError("polygamma: argument must be positive");
  if (p < 0 || p > kPolygammaCap) throw DomainError("polygamma: order out of range");
  ScopedPrecision sp(ctx.working());
  Real zz = z + 0;
  if (p == 0) return digamma_at(zz);
  // psi_p(z) = (-1)^{p+1} p! sum (n+z)^{-p-1}
  Real s = detail::hurwitz_int(p + 1, zz);
  Real fact(1);
  for (int i = 2; i <= p; ++i) fact *= i;
  Real r = fact * s;
  return (p % 2 == 1) ? r : -r;
}

}  // namespace pdet
