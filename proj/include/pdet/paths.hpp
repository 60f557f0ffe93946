#pragma once

// Brute-force weighted enumeration of nonintersecting lattice-path families.
//
// Paths move right or down on an L x L grid; the path with start (0,k) must
// end at (k,0).  A configuration picks a subset of starting indices and one
// path per chosen index, all pairwise vertex-disjoint, and carries weight
// e^{i theta (L - s)} for s chosen paths.  The total must reproduce
// det(B + e^{i theta} I) exactly, which makes this a fully independent
// oracle for the characteristic-polynomial pipeline.

#include <cstdint>
#include <vector>

#include "pdet/numeric.hpp"
#include "pdet/theta.hpp"

namespace pdet {

inline constexpr int kPathOracleCap = 5;

namespace detail {

// All monotone paths (0,k) -> (k,0) as vertex bitmasks on the 5x5 grid.
inline void gen_paths(int x, int y, int k, uint32_t mask, std::vector<uint32_t>& out) {
  mask |= 1u << (x * 5 + y);
  if (x == k && y == 0) {
    out.push_back(mask);
    return;
  }
  if (x < k) gen_paths(x + 1, y, k, mask, out);
  if (y > 0) gen_paths(x, y - 1, k, mask, out);
}

inline void count_configs(int k, uint32_t used, int chosen,
                          const std::vector<std::vector<uint32_t>>& paths,
                          std::vector<Int>& counts) {
  if (k < 0) {
    counts[static_cast<size_t>(chosen)] += 1;
    return;
  }
  count_configs(k - 1, used, chosen, paths, counts);  // index k absent
  for (uint32_t p : paths[static_cast<size_t>(k)])
    if ((p & used) == 0) count_configs(k - 1, used | p, chosen + 1, paths, counts);
}

}  // namespace detail

// Exact per-path-count tallies: counts[s] = number of s-path configurations.
inline std::vector<Int> path_configuration_counts(int L) {
  if (L < 1) throw DomainError("path_weight_oracle: size must be >= 1");
  if (L > kPathOracleCap) throw DomainError("path_weight_oracle: enumeration cap is L <= 5");
  std::vector<std::vector<uint32_t>> paths(static_cast<size_t>(L));
  for (int k = 0; k < L; ++k) detail::gen_paths(0, k, k, 0, paths[static_cast<size_t>(k)]);
  std::vector<Int> counts(static_cast<size_t>(L) + 1, Int(0));
  detail::count_configs(L - 1, 0, 0, paths, counts);
  return counts;
}

// sum over configurations of e^{i theta (L - s)}
inline Cplx path_weight_oracle(int L, const ThetaValue& theta, const PrecisionContext& ctx) {
  std::vector<Int> counts = path_configuration_counts(L);
  ScopedPrecision sp(ctx.working());
  Real th = theta.radians(ctx);
  Cplx acc;
  for (int s = 0; s <= L; ++s) {
    Cplx ph = unit_phase(th * (L - s));
    Real w = to_real(counts[static_cast<size_t>(s)]);
    acc += Cplx{ph.re * w, ph.im * w};
  }
  return acc;
}

}  // namespace pdet
