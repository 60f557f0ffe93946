#pragma once

// Exact construction of the Pascal matrix and its characteristic polynomial.
//
// det(B - xI) is evaluated exactly at x = 0..L with fraction-free (Bareiss)
// elimination over the integers, then the degree-L polynomial is recovered
// by Lagrange interpolation over the rationals and checked for integrality.
// The coefficient symmetry c_{L-j} = (-1)^L c_j serves as an independent
// end-to-end check on every record.

#include <future>
#include <thread>
#include <vector>

#include "pdet/numeric.hpp"

namespace pdet {

struct ExactMatrix {
  int n = 0;
  std::vector<Int> entries;  // row-major

  Int& at(int r, int s) { return entries[static_cast<size_t>(r) * n + s]; }
  const Int& at(int r, int s) const { return entries[static_cast<size_t>(r) * n + s]; }
};

// entries(r,s) = binomial(r+s-2, r-1) for 1-based indices r,s.
inline ExactMatrix pascal_matrix(int L) {
  if (L < 1) throw DomainError("pascal_matrix: size must be >= 1");
  ExactMatrix m;
  m.n = L;
  m.entries.assign(static_cast<size_t>(L) * L, Int(0));
  for (int r = 0; r < L; ++r)
    for (int s = 0; s < L; ++s) {
      if (r == 0 || s == 0)
        m.at(r, s) = 1;
      else
        m.at(r, s) = m.at(r - 1, s) + m.at(r, s - 1);
    }
  return m;
}

// Fraction-free determinant; consumes its argument.
inline Int bareiss_det(ExactMatrix m) {
  const int n = m.n;
  if (n == 0) return Int(1);
  Int prev(1);
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (m.at(i, k) != 0) {
          piv = i;
          break;
        }
      if (piv < 0) return Int(0);
      for (int j = k; j < n; ++j) std::swap(m.at(k, j), m.at(piv, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
      }
      m.at(i, k) = 0;
    }
    prev = m.at(k, k);
  }
  return sign > 0 ? m.at(n - 1, n - 1) : Int(-m.at(n - 1, n - 1));
}

// det(B - xI) for the L x L Pascal matrix at integer x.
inline Int pascal_shifted_det(int L, const Int& x) {
  ExactMatrix m = pascal_matrix(L);
  for (int i = 0; i < L; ++i) m.at(i, i) -= x;
  return bareiss_det(std::move(m));
}

struct CharPolyRecord {
  int L = 0;
  std::vector<Int> coeffs;  // c_0 .. c_L with det(B - xI) = sum c_k x^k
};

struct InvariantViolation : Error {
  using Error::Error;
};

inline void validate(const CharPolyRecord& rec) {
  if (rec.L < 1 || rec.coeffs.size() != static_cast<size_t>(rec.L) + 1)
    throw InvariantViolation("char poly record: bad shape");
  if (rec.coeffs[0] != 1) throw InvariantViolation("char poly record: c_0 != 1");
  const int L = rec.L;
  const bool even = (L % 2 == 0);
  if (rec.coeffs[static_cast<size_t>(L)] != (even ? Int(1) : Int(-1)))
    throw InvariantViolation("char poly record: c_L != (-1)^L");
  for (int j = 0; j <= L; ++j) {
    Int mirrored = rec.coeffs[static_cast<size_t>(L - j)];
    Int expect = even ? rec.coeffs[static_cast<size_t>(j)] : Int(-rec.coeffs[static_cast<size_t>(j)]);
    if (mirrored != expect)
      throw InvariantViolation("char poly record: coefficient symmetry violated");
  }
}

inline CharPolyRecord char_poly(int L) {
  if (L < 1) throw DomainError("char_poly: size must be >= 1");

  // Sample determinants at x = 0..L, in parallel when it pays off.
  std::vector<Int> values(static_cast<size_t>(L) + 1);
  const unsigned hw = (std::max)(1u, std::thread::hardware_concurrency());
  if (L >= 24 && hw > 1) {
    std::vector<std::future<Int>> futs;
    futs.reserve(static_cast<size_t>(L) + 1);
    for (int x = 0; x <= L; ++x)
      futs.push_back(std::async(std::launch::async, [L, x] { return pascal_shifted_det(L, Int(x)); }));
    for (int x = 0; x <= L; ++x) values[static_cast<size_t>(x)] = futs[static_cast<size_t>(x)].get();
  } else {
    for (int x = 0; x <= L; ++x) values[static_cast<size_t>(x)] = pascal_shifted_det(L, Int(x));
  }

  // Newton forward differences at the integer nodes 0..L, then conversion
  // to the monomial basis; all arithmetic exact.
  std::vector<Int> diff = values;
  for (int k = 1; k <= L; ++k)
    for (int j = L; j >= k; --j)
      diff[static_cast<size_t>(j)] -= diff[static_cast<size_t>(j - 1)];
  // p(x) = sum_k diff[k] * C(x, k); expand C(x,k) = x(x-1)...(x-k+1)/k!
  std::vector<Rat> acc(static_cast<size_t>(L) + 1, Rat(0));
  std::vector<Rat> basis(static_cast<size_t>(L) + 1, Rat(0));  // C(x,k) coefficients
  basis[0] = 1;
  Rat kfact(1);
  for (int k = 0; k <= L; ++k) {
    if (k > 0) {
      // multiply basis by (x - (k-1)) and divide by k at the end via kfact
      for (int j = k; j >= 1; --j)
        basis[static_cast<size_t>(j)] =
            basis[static_cast<size_t>(j - 1)] - Rat(k - 1) * basis[static_cast<size_t>(j)];
      basis[0] *= Rat(-(k - 1));
      kfact *= k;
    }
    Rat w = Rat(diff[static_cast<size_t>(k)]) / kfact;
    for (int j = 0; j <= k; ++j) acc[static_cast<size_t>(j)] += w * basis[static_cast<size_t>(j)];
  }

  CharPolyRecord rec;
  rec.L = L;
  rec.coeffs.resize(static_cast<size_t>(L) + 1);
  for (int j = 0; j <= L; ++j) {
    const Rat& c = acc[static_cast<size_t>(j)];
    if (denominator(c) != 1)
      throw ConsistencyError("char_poly: interpolation produced a non-integer coefficient");
    rec.coeffs[static_cast<size_t>(j)] = numerator(c);
  }
  validate(rec);
  return rec;
}

}  // namespace pdet
