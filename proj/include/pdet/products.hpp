#pragma once

// Closed-form product formulas (alternating sign matrix counts and their
// half-turn symmetric variant), the exact special values of D at multiples
// of pi/3, the generating function phi, and the loop probabilities P(L,m).
//
// Products are evaluated as exact rationals and asserted integral, which
// catches transcription slips in the formulas immediately.

#include <mutex>
#include <vector>

#include "pdet/dvalue.hpp"
#include "pdet/numeric.hpp"
#include "pdet/theta.hpp"

namespace pdet {

inline const Int& factorial(int n) {
  if (n < 0) throw DomainError("factorial: negative argument");
  static std::mutex mu;
  static std::vector<Int> table{Int(1), Int(1)};
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<int>(table.size()) <= n)
    table.push_back(table.back() * static_cast<long>(table.size()));
  return table[static_cast<size_t>(n)];
}

namespace detail {

inline Int assert_integral(const Rat& q, const char* what) {
  if (denominator(q) != 1)
    throw ConsistencyError(std::string(what) + ": product is not an integer");
  return numerator(q);
}

}  // namespace detail

// Number of n x n alternating sign matrices: prod_{k=0}^{n-1} (3k+1)!/(k+n)!.
inline Int asm_count(int n) {
  if (n < 1) throw DomainError("asm_count: n must be >= 1");
  Rat acc(1);
  for (int k = 0; k < n; ++k) acc *= Rat(factorial(3 * k + 1), factorial(k + n));
  return detail::assert_integral(acc, "asm_count");
}

// Number of L x L half-turn symmetric alternating sign matrices.
inline Int htsasm_count(int L) {
  if (L < 1) throw DomainError("htsasm_count: L must be >= 1");
  Rat acc(1);
  if (L % 2 == 0) {
    const int n = L / 2;
    for (int k = 1; k <= n - 1; ++k) {
      Rat num = Rat(3) * Rat(factorial(k - 1)) * Rat(factorial(k)) *
                Rat(factorial(3 * k - 1)) * Rat(factorial(3 * k + 2));
      Rat den = Rat(4) * Rat(factorial(2 * k - 1)) * Rat(factorial(2 * k - 1)) *
                Rat(factorial(2 * k + 1)) * Rat(factorial(2 * k + 1));
      acc *= num / den;
    }
    acc *= 2;
  } else {
    const int m = (L - 1) / 2;
    for (int j = 1; j <= m; ++j) {
      Rat num = Rat(4) * Rat(factorial(j)) * Rat(factorial(j)) * Rat(factorial(3 * j)) *
                Rat(factorial(3 * j));
      Rat den = Rat(3) * Rat(factorial(2 * j)) * Rat(factorial(2 * j)) *
                Rat(factorial(2 * j)) * Rat(factorial(2 * j));
      acc *= num / den;
    }
  }
  return detail::assert_integral(acc, "htsasm_count");
}

// D(L, p*pi/3) in closed form: a rational carrying an optional sqrt(3).
struct SpecialValue {
  Rat value;
  bool sqrt3 = false;  // true means the result is value * sqrt(3)

  Real to_real(const PrecisionContext& ctx) const {
    ScopedPrecision sp(ctx.working());
    Real v = pdet::to_real(value);
    if (sqrt3) v *= boost::multiprecision::sqrt(Real(3));
    return v;
  }
};

inline SpecialValue exact_special_value(int L, int p) {
  if (L < 1) throw DomainError("exact_special_value: L must be >= 1");
  if (p < 0 || p > 3) throw DomainError("exact_special_value: p must be in 0..3");
  const bool even = (L % 2 == 0);
  switch (p) {
    case 0:
      return {Rat(htsasm_count(2 * L), asm_count(L)), false};
    case 1: {
      Int a = htsasm_count(L);
      return {Rat(a * a), !even};
    }
    case 2:
      return {Rat(asm_count(L)), false};
    case 3:
      if (even) {
        Int a = asm_count(L / 2);
        return {Rat(a * a * a * a), false};
      }
      return {Rat(0), false};
  }
  return {};  // unreachable
}

// phi(L, theta) under the generating-function conjecture:
//   even L: D / A_HT(L)^2,  odd L: D / (2 cos(theta/2) A_HT(L)^2).
// In the cosine-polynomial representation both collapse to P(u)/A_HT^2.
// The odd-L division formula is singular at theta = pi; that point is
// rejected here (the generating function itself stays regular, see
// loop_probabilities for the exact route).
inline Real phi_exact(const DPoly& d, const ThetaValue& theta, const PrecisionContext& ctx) {
  if (d.odd() && theta.is_odd_pi())
    throw DomainError("phi_exact: odd-L pole at theta = pi");
  ScopedPrecision sp(ctx.working());
  Int aht2 = htsasm_count(d.L());
  aht2 *= aht2;
  Real u = 2 * boost::multiprecision::cos(theta.radians(ctx));
  return d.eval_u(u) / to_real(aht2);
}

struct LoopProbabilityVector {
  int L = 0;
  std::vector<Rat> probs;  // P(L, 0..floor(L/2))
  bool nonnegative = true; // conjectured, checked, reported
};

// Exact P(L,m): phi(L,theta) = sum_m P(L,m) u^m with u = 2cos(theta), so the
// probabilities are the u-coefficients of D divided by A_HT(L)^2.  Their sum
// is checked to be exactly 1 (equivalently P(1) = A_HT^2, the Table-1 value
// at theta = pi/3).
inline LoopProbabilityVector loop_probabilities(const DPoly& d) {
  Int aht = htsasm_count(d.L());
  Rat denom(aht * aht);
  LoopProbabilityVector out;
  out.L = d.L();
  Rat sum(0);
  for (const Int& c : d.u_coeffs()) {
    Rat p = Rat(c) / denom;
    if (p < 0) out.nonnegative = false;
    sum += p;
    out.probs.push_back(std::move(p));
  }
  if (sum != 1)
    throw ConsistencyError("loop_probabilities: probabilities do not sum to 1");
  return out;
}

}  // namespace pdet
