#pragma once

// θ is a rational multiple of π by default (exact trigonometric evaluation
// at any precision), with a free high-precision real override for scans.

#include <numeric>
#include <stdexcept>

#include "pdet/constants.hpp"
#include "pdet/numeric.hpp"

namespace pdet {

class ThetaValue {
 public:
  // θ = (p/q)·π, reduced so gcd(|p|, q) = 1, q >= 1.
  static ThetaValue pi_multiple(long long p, long long q) {
    if (q == 0) throw DomainError("ThetaValue: zero denominator");
    if (q < 0) {
      p = -p;
      q = -q;
    }
    long long g = std::gcd(p < 0 ? -p : p, q);
    if (g > 1) {
      p /= g;
      q /= g;
    }
    ThetaValue t;
    t.rational_ = true;
    t.p_ = p;
    t.q_ = q;
    return t;
  }

  // Free real override, in radians, taken at whatever precision it carries.
  static ThetaValue radians_value(Real v) {
    ThetaValue t;
    t.rational_ = false;
    t.free_ = std::move(v);
    return t;
  }

  bool is_pi_multiple() const { return rational_; }
  long long num() const { return p_; }
  long long den() const { return q_; }
  Rat pi_fraction() const {
    if (!rational_) throw DomainError("ThetaValue: not a rational multiple of pi");
    return Rat(Int(p_), Int(q_));
  }

  // Radians at the current default precision.
  Real radians(const PrecisionContext& ctx) const {
    if (!rational_) return free_;
    Real pi = constant(Constant::pi, ctx);
    return pi * p_ / q_;
  }

  // True when θ ≡ π (mod 2π), i.e. cos(θ/2) = 0 exactly.
  bool is_odd_pi() const {
    if (!rational_) return false;
    return q_ == 1 && (p_ % 2 != 0);
  }

  // θ → −θ
  ThetaValue negated() const {
    if (rational_) return pi_multiple(-p_, q_);
    return radians_value(-free_);
  }

 private:
  bool rational_ = true;
  long long p_ = 0;
  long long q_ = 1;
  Real free_;
};

}  // namespace pdet
