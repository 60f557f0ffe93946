#pragma once

// Arbitrary-precision scalar types and the precision context shared by the
// whole library.  Reals are MPFR-backed (via Boost.Multiprecision), exact
// integers and rationals are GMP-backed.  All routines follow the same
// convention: enter a ScopedPrecision for ctx.working() decimal digits and
// create every temporary inside that scope, so results are reproducible
// bit-for-bit for fixed (inputs, digits, guard).

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <stdexcept>
#include <string>
#include <utility>

namespace pdet {

using Real = boost::multiprecision::mpfr_float;
using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad argument (size 0, nonpositive gamma argument, pole, ...).
struct DomainError : Error {
  using Error::Error;
};

// Requested digits exceed what the context/backend can deliver.
struct PrecisionError : Error {
  using Error::Error;
};

// Internal cross-check failed (dual-method constants, integrality, ...).
struct ConsistencyError : Error {
  using Error::Error;
};

struct PrecisionContext {
  int digits = 50;  // decimal digits every output is good to
  int guard = 10;   // extra digits absorbing rounding

  PrecisionContext() = default;
  PrecisionContext(int d, int g = 10) : digits(d), guard(g) { validate(); }

  void validate() const {
    if (digits < 16) throw DomainError("PrecisionContext: digits must be >= 16");
    if (guard < 1) throw DomainError("PrecisionContext: guard must be >= 1");
    // mpfr exponent/precision limits are astronomically far away; cap at a
    // desk-scale sanity bound so typos fail loudly.
    if (digits > 100000)
      throw PrecisionError("PrecisionContext: digits beyond supported capability");
  }

  int working() const { return digits + guard; }
};

// RAII guard setting the thread-default decimal precision for new Reals.
class ScopedPrecision {
 public:
  explicit ScopedPrecision(int digits10) : prev_(Real::default_precision()) {
    if (digits10 < 2) throw PrecisionError("ScopedPrecision: bad digit count");
    Real::default_precision(static_cast<unsigned>(digits10));
  }
  ~ScopedPrecision() { Real::default_precision(prev_); }
  ScopedPrecision(const ScopedPrecision&) = delete;
  ScopedPrecision& operator=(const ScopedPrecision&) = delete;

 private:
  unsigned prev_;
};

inline Real to_real(const Rat& q) { return Real(q); }
inline Real to_real(const Int& n) { return Real(n); }

// 10^e as a Real at the current working precision (e may be negative).
inline Real pow10(long e) {
  Real ten(10);
  return boost::multiprecision::pow(ten, static_cast<int>(e));
}

// floor(x) as an exact integer.
inline Int floor_to_int(const Real& x) {
  Real f = boost::multiprecision::floor(x);
  return Int(f.convert_to<Int>());
}

// Number of agreeing leading decimal digits between two values, judged on
// the relative difference (absolute when both are tiny).
inline int digits_agree(const Real& a, const Real& b) {
  using boost::multiprecision::abs;
  using boost::multiprecision::log10;
  Real diff = abs(a - b);
  Real scale = (std::max)(Real(abs(a)), Real(abs(b)));
  if (diff == 0) return static_cast<int>(Real::default_precision());
  if (scale == 0) return 0;
  if (scale < 1) scale = 1;
  Real r = -log10(diff / scale);
  if (r < 0) return 0;
  long n = r.convert_to<long>();
  return static_cast<int>(n);
}

// Minimal complex pair; only the handful of operations the path oracle and
// the realness cross-checks need.
struct Cplx {
  Real re, im;

  Cplx() : re(0), im(0) {}
  Cplx(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

  Cplx operator+(const Cplx& o) const { return {re + o.re, im + o.im}; }
  Cplx operator-(const Cplx& o) const { return {re - o.re, im - o.im}; }
  Cplx operator*(const Cplx& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  Cplx& operator+=(const Cplx& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Real abs() const {
    return boost::multiprecision::sqrt(re * re + im * im);
  }
};

inline Cplx unit_phase(const Real& angle) {
  return {boost::multiprecision::cos(angle), boost::multiprecision::sin(angle)};
}

}  // namespace pdet
