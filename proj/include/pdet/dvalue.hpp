#pragma once

// Evaluation of D(L,theta) = exp(-i theta L/2) det(B + e^{i theta} I).
//
// With b_k = (-1)^k c_k the coefficient symmetry makes the sequence b
// palindromic, so D collapses to a cosine polynomial:
//   even L:  D = P(u),                u = 2 cos(theta)
//   odd  L:  D = 2 cos(theta/2) P(u)
// with P an integer polynomial of degree floor(L/2).  Realness and evenness
// in theta are structural in this representation, not numerical accidents.

#include <vector>

#include "pdet/charpoly.hpp"
#include "pdet/constants.hpp"
#include "pdet/numeric.hpp"
#include "pdet/theta.hpp"

namespace pdet {

inline constexpr int kDerivativeCap = 8;

class DPoly {
 public:
  static DPoly from(const CharPolyRecord& rec) {
    validate(rec);
    DPoly d;
    d.L_ = rec.L;
    const int L = rec.L;
    const int h = L / 2;
    std::vector<Int> b(static_cast<size_t>(L) + 1);
    for (int k = 0; k <= L; ++k)
      b[static_cast<size_t>(k)] = (k % 2 == 0) ? rec.coeffs[static_cast<size_t>(k)]
                                               : Int(-rec.coeffs[static_cast<size_t>(k)]);
    d.b_ = b;
    d.u_coeffs_.assign(static_cast<size_t>(h) + 1, Int(0));

    // Dickson basis: 2cos(m t) = D_m(u), D_0 = 2, D_1 = u, D_{m+1} = u D_m - D_{m-1}.
    std::vector<std::vector<Int>> dick(static_cast<size_t>(h) + 1);
    dick[0] = {Int(2)};
    if (h >= 1) dick[1] = {Int(0), Int(1)};
    for (int m = 2; m <= h; ++m) {
      std::vector<Int> nxt(static_cast<size_t>(m) + 1, Int(0));
      for (size_t j = 0; j < dick[static_cast<size_t>(m - 1)].size(); ++j)
        nxt[j + 1] += dick[static_cast<size_t>(m - 1)][j];
      for (size_t j = 0; j < dick[static_cast<size_t>(m - 2)].size(); ++j)
        nxt[j] -= dick[static_cast<size_t>(m - 2)][j];
      dick[static_cast<size_t>(m)] = std::move(nxt);
    }

    if (L % 2 == 0) {
      // D = b_h + sum_{m=1..h} b_{h-m} D_m(u)
      d.u_coeffs_[0] = b[static_cast<size_t>(h)];
      for (int m = 1; m <= h; ++m)
        for (size_t j = 0; j < dick[static_cast<size_t>(m)].size(); ++j)
          d.u_coeffs_[j] += b[static_cast<size_t>(h - m)] * dick[static_cast<size_t>(m)][j];
    } else {
      // 2cos((j+1/2)t) = 2cos(t/2) E_j(u), E_0 = 1, E_j = D_j - E_{j-1};
      // D = 2cos(t/2) sum_{j=0..h} b_{h-j} E_j(u)
      d.u_coeffs_[0] = b[static_cast<size_t>(h)];  // b_h * E_0
      std::vector<Int> prev_e{Int(1)};
      for (int j = 1; j <= h; ++j) {
        std::vector<Int> ej(static_cast<size_t>(j) + 1, Int(0));
        for (size_t t = 0; t < dick[static_cast<size_t>(j)].size(); ++t)
          ej[t] = dick[static_cast<size_t>(j)][t];
        for (size_t t = 0; t < prev_e.size(); ++t) ej[t] -= prev_e[t];
        for (size_t t = 0; t < ej.size(); ++t)
          d.u_coeffs_[t] += b[static_cast<size_t>(h - j)] * ej[t];
        prev_e = std::move(ej);
      }
    }
    return d;
  }

  int L() const { return L_; }
  bool odd() const { return L_ % 2 != 0; }
  const std::vector<Int>& u_coeffs() const { return u_coeffs_; }

  // P(u) at an exact rational point (u = 2, 1, -1, -2 for the special angles).
  Rat eval_u_exact(const Rat& u) const {
    Rat acc(0);
    for (size_t j = u_coeffs_.size(); j-- > 0;) acc = acc * u + Rat(u_coeffs_[j]);
    return acc;
  }

  // P(u) at a real point.
  Real eval_u(const Real& u) const {
    Real acc(0);
    for (size_t j = u_coeffs_.size(); j-- > 0;) acc = acc * u + to_real(u_coeffs_[j]);
    return acc;
  }

  // D(L, theta)
  Real eval(const ThetaValue& theta, const PrecisionContext& ctx) const {
    ScopedPrecision sp(ctx.working());
    Real th = theta.radians(ctx);
    Real u = 2 * boost::multiprecision::cos(th);
    Real v = eval_u(u);
    if (odd()) v *= 2 * boost::multiprecision::cos(th / 2);
    return v;
  }

  // D, D', ..., D^(max_order) by analytic differentiation of the cosine sum:
  //   D(theta) = sum_k b_k e^{i(k - L/2) theta}
  //            = [L even] b_{L/2} + sum_{m_k > 0} 2 b_k cos(m_k theta)
  // so the r-th derivative replaces cos(m th) by m^r cos(m th + r pi/2).
  std::vector<Real> derivatives(const ThetaValue& theta, int max_order,
                                const PrecisionContext& ctx) const {
    if (max_order < 0 || max_order > kDerivativeCap)
      throw DomainError("eval_D_derivatives: order cap is 8");
    ScopedPrecision sp(ctx.working());
    Real th = theta.radians(ctx);
    std::vector<Real> out(static_cast<size_t>(max_order) + 1, Real(0));
    const int L = L_;
    const int pairs = (L + 1) / 2;  // k = 0 .. pairs-1 have m_k > 0
    for (int k = 0; k < pairs; ++k) {
      Real m = Real(L) / 2 - k;
      Real c = boost::multiprecision::cos(m * th);
      Real s = boost::multiprecision::sin(m * th);
      Real coef = 2 * to_real(b_[static_cast<size_t>(k)]);
      Real mpow(1);
      for (int r = 0; r <= max_order; ++r) {
        // cos(m th + r pi/2) cycles c, -s, -c, s
        Real trig = (r % 4 == 0) ? c : (r % 4 == 1) ? -s : (r % 4 == 2) ? -c : s;
        out[static_cast<size_t>(r)] += coef * mpow * trig;
        mpow *= m;
      }
    }
    if (L % 2 == 0) out[0] += to_real(b_[static_cast<size_t>(L / 2)]);
    return out;
  }

  // Complex assembly of e^{-i th L/2} det(B + e^{i th} I) straight from the
  // characteristic coefficients; retained as a cross-check of the cosine
  // representation (imaginary residue must sit below the guard digits).
  Cplx eval_complex_assembly(const ThetaValue& theta, const PrecisionContext& ctx) const {
    ScopedPrecision sp(ctx.working());
    Real th = theta.radians(ctx);
    Cplx acc;
    for (int k = 0; k <= L_; ++k) {
      Real ang = (Real(k) - Real(L_) / 2) * th;
      Cplx ph = unit_phase(ang);
      Real w = to_real(b_[static_cast<size_t>(k)]);
      acc += Cplx{ph.re * w, ph.im * w};
    }
    return acc;
  }

 private:
  int L_ = 0;
  std::vector<Int> b_;         // (-1)^k c_k
  std::vector<Int> u_coeffs_;  // P(u)
};

inline Real eval_D(const CharPolyRecord& rec, const ThetaValue& theta,
                   const PrecisionContext& ctx) {
  return DPoly::from(rec).eval(theta, ctx);
}

inline std::vector<Real> eval_D_derivatives(const CharPolyRecord& rec, const ThetaValue& theta,
                                            int max_order, const PrecisionContext& ctx) {
  return DPoly::from(rec).derivatives(theta, max_order, ctx);
}

}  // namespace pdet
