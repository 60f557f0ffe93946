#pragma once

// log of the Barnes G-function.
//
// Strategy: shift the argument upward with G(z+1) = Gamma(z) G(z) until it
// clears a threshold w >= max(30, digits/2), then apply the large-argument
// expansion
//   log G(w+1) = w^2 (log w / 2 - 3/4) + log(2 pi) w / 2 - log(w)/12
//                + zeta'(-1) + sum_{k>=1} B_{2k+2} / (4k(k+1) w^{2k}),
// truncated at its smallest term.  The summation enters with a plus sign;
// the recurrence-residual tests adjudicate this empirically.  If the
// smallest term is still above 10^(-digits-guard) the shift is enlarged and
// the evaluation retried.
//
// The signed variant handles any real argument (the winding sum walks
// through negative ones): G vanishes exactly at the nonpositive integers,
// elsewhere the sign is the product of the Gamma signs met on the way up.

#include "pdet/constants.hpp"
#include "pdet/gammafn.hpp"
#include "pdet/numeric.hpp"

namespace pdet {

// sign = 0 encodes an exact zero (log_abs meaningless then).
struct SignedLog {
  int sign = 1;
  Real log_abs;
};

namespace detail {

// Series at argument w (must be >= threshold); returns log G(w+1).
// ok=false when the smallest reachable term exceeds the target.
inline Real barnes_series(const Real& w, const Real& eps, bool& ok,
                          const PrecisionContext& ctx) {
  Real logw = boost::multiprecision::log(w);
  Real r = w * w * (logw / 2 - Real(3) / 4);
  r += boost::multiprecision::log(2 * constant(Constant::pi, ctx)) / 2 * w;
  r -= logw / 12;
  r += constant(Constant::zeta_prime_minus1, ctx);
  Real inv2 = Real(1) / (w * w);
  Real p = inv2;
  Real smallest = -1;
  ok = false;
  for (int k = 1; 2 * k + 2 <= kBernoulliCap; ++k) {
    Real term = to_real(bernoulli(2 * k + 2)) / (4 * k * (k + 1)) * p;
    Real mag = boost::multiprecision::abs(term);
    if (smallest >= 0 && mag > smallest) break;  // past optimal truncation
    r += term;
    smallest = mag;
    if (mag < eps) {
      ok = true;
      break;
    }
    p *= inv2;
  }
  return r;
}

}  // namespace detail

inline SignedLog log_barnes_g_signed(const Real& z, const PrecisionContext& ctx) {
  ScopedPrecision sp(ctx.working());
  Real x = z + 0;
  if (x == boost::multiprecision::floor(x) && x <= 0) return {0, Real(0)};

  const Real eps = pow10(-ctx.working() - 2);
  long threshold = (std::max)(30L, static_cast<long>(ctx.digits) / 2);
  for (int attempt = 0; attempt < 6; ++attempt, threshold *= 2) {
    // G(x) = G(x+m) / prod_{j=0}^{m-1} Gamma(x+j), with w = x+m-1 >= threshold
    long m = (Real(threshold) + 1 - x).convert_to<long>() + 1;
    if (m < 0) m = 0;
    Real w = x + m - 1;
    bool ok = false;
    Real series = detail::barnes_series(w, eps, ok, ctx);
    if (!ok) continue;
    int sign = 1;
    Real log_abs = series;
    for (long j = 0; j < m; ++j) {
      int s = 1;
      Real lg = lgamma_signed(x + j, s);
      log_abs -= lg;
      sign *= s;
    }
    return {sign, log_abs};
  }
  throw PrecisionError("log_barnes_g: series did not reach target accuracy");
}

inline Real log_barnes_g(const Real& z, const PrecisionContext& ctx) {
  if (z <= 0) throw DomainError("log_barnes_g: argument must be positive");
  SignedLog r = log_barnes_g_signed(z, ctx);
  if (r.sign <= 0) throw ConsistencyError("log_barnes_g: negative G on the positive axis");
  return r.log_abs;
}

}  // namespace pdet
