#pragma once

// Exact Bernoulli numbers B_0, B_2, ..., B_{2K} as rationals.
//
// The table is produced by the classic convolution recurrence
//   B_m = -1/(m+1) * sum_{j<m} C(m+1, j) B_j
// and validated, entry by entry, against an independent integer-only route:
// Seidel/Knuth-Buckholtz tangent numbers T_n with
//   B_{2n} = (-1)^{n-1} * 2n * T_n / (4^n (4^n - 1)).
// A mismatch anywhere aborts table construction.

#include <mutex>
#include <vector>

#include "pdet/numeric.hpp"

namespace pdet {

inline constexpr int kBernoulliCap = 200;  // largest supported index 2k

namespace detail {

inline std::vector<Int> tangent_numbers(int n) {
  // t[k] ends up as T_{k+1}; pure integer additions/multiplications.
  std::vector<Int> t(static_cast<size_t>(n));
  t[0] = 1;
  for (int k = 1; k < n; ++k) t[static_cast<size_t>(k)] = t[static_cast<size_t>(k - 1)] * k;
  for (int k = 1; k < n; ++k)
    for (int j = k; j < n; ++j)
      t[static_cast<size_t>(j)] =
          t[static_cast<size_t>(j - 1)] * (j - k) + t[static_cast<size_t>(j)] * (j - k + 2);
  return t;
}

inline std::vector<Rat> build_bernoulli_even(int cap) {
  const int m_max = cap;
  std::vector<Rat> all(static_cast<size_t>(m_max) + 1);
  std::vector<Int> binom(static_cast<size_t>(m_max) + 2);
  all[0] = 1;
  // Row m+1 of Pascal's triangle is rebuilt incrementally for the recurrence.
  for (int m = 1; m <= m_max; ++m) {
    binom[0] = 1;
    for (int j = 1; j <= m + 1; ++j) binom[static_cast<size_t>(j)] = 0;
    for (int r = 1; r <= m + 1; ++r)
      for (int j = r; j >= 1; --j)
        binom[static_cast<size_t>(j)] += binom[static_cast<size_t>(j - 1)];
    Rat s(0);
    for (int j = 0; j < m; ++j) s += Rat(binom[static_cast<size_t>(j)]) * all[static_cast<size_t>(j)];
    all[static_cast<size_t>(m)] = -s / Rat(m + 1);
  }

  std::vector<Rat> even(static_cast<size_t>(m_max / 2) + 1);
  for (int k = 0; 2 * k <= m_max; ++k) even[static_cast<size_t>(k)] = all[static_cast<size_t>(2 * k)];

  // Independent validation path.
  if (even[1] != Rat(1, 6) || even[2] != Rat(-1, 30))
    throw ConsistencyError("bernoulli: anchor check failed");
  const int n_tan = m_max / 2;
  std::vector<Int> tan = tangent_numbers(n_tan);
  Int four_n = 1;
  for (int n = 1; n <= n_tan; ++n) {
    four_n *= 4;
    Int denom = four_n * (four_n - 1);
    Rat via_tangent = Rat(Int(2 * n) * tan[static_cast<size_t>(n - 1)], denom);
    if (n % 2 == 0) via_tangent = -via_tangent;
    if (via_tangent != even[static_cast<size_t>(n)])
      throw ConsistencyError("bernoulli: tangent-number cross-check failed at 2k=" +
                             std::to_string(2 * n));
  }
  return even;
}

}  // namespace detail

// Exact B_{2k}; the argument is the full even index (bernoulli(12) = B_12).
inline const Rat& bernoulli(int two_k) {
  if (two_k < 0 || two_k % 2 != 0) throw DomainError("bernoulli: index must be even and >= 0");
  if (two_k > kBernoulliCap) throw DomainError("bernoulli: index beyond configured cap");
  static std::once_flag flag;
  static std::vector<Rat> table;
  std::call_once(flag, [] { table = detail::build_bernoulli_even(kBernoulliCap); });
  return table[static_cast<size_t>(two_k / 2)];
}

}  // namespace pdet
