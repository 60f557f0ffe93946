#pragma once

// The correction polynomials R_2, ..., R_14 appearing in the exponent of the
// asymptotic f(L,theta): exact rational coefficients in the variable
// x = theta/pi.  Each R_{2k} is even of degree exactly 2k+2; both facts are
// asserted at construction.

#include <vector>

#include "pdet/numeric.hpp"

namespace pdet {

inline constexpr int kRPolyKMax = 7;

class RPolynomialTable {
 public:
  static const RPolynomialTable& instance() {
    static RPolynomialTable t;
    return t;
  }

  // coefficients of x^0, x^2, ..., x^{2k+2} for R_{2k}
  const std::vector<Rat>& coeffs(int k) const {
    if (k < 1 || k > kRPolyKMax) throw DomainError("R polynomial index out of range");
    return table_[static_cast<size_t>(k - 1)];
  }

  Rat eval_exact(int k, const Rat& x) const {
    const auto& c = coeffs(k);
    Rat x2 = x * x, acc(0);
    for (size_t j = c.size(); j-- > 0;) acc = acc * x2 + c[j];
    return acc;
  }

  Real eval(int k, const Real& x) const {
    const auto& c = coeffs(k);
    Real x2 = x * x, acc(0);
    for (size_t j = c.size(); j-- > 0;) acc = acc * x2 + to_real(c[j]);
    return acc;
  }

 private:
  RPolynomialTable() {
    auto R = [](std::vector<Rat> v) { return v; };
    table_ = {
        R({Rat(77, 15552), Rat(7, 144), Rat(-11, 64)}),
        R({Rat(-245, 559872), Rat(-157, 12960), Rat(-29, 1152), Rat(181, 1280)}),
        R({Rat(1103, 40310784), Rat(-1349, 244944), Rat(3599, 31104), Rat(-989, 6912),
           Rat(-3275, 14336)}),
        R({Rat(793135, 4353564672), Rat(116807, 2099520), Rat(-101009, 279936),
           Rat(-47479, 622080), Rat(43171, 36864), Rat(61621, 122880)}),
        R({Rat(Int(-93651593), Int(130606940160)), Rat(-3740009, 10392624),
           Rat(1868083, 1399680), Rat(301091, 93312), Rat(-1858513, 276480),
           Rat(-1239773, 184320), Rat(-1184171, 901120)}),
        R({Rat(Int(2884889645), Int(940369969152)), Rat(Int(68061091601), Int(23213342880)),
           Rat(-110018569, 22674816), Rat(-754814143, 16796160), Rat(454871621, 10450944),
           Rat(931652293, 9953280), Rat(31193731, 884736), Rat(23057581, 5963776)}),
        R({Rat(Int("-2213492219141"), Int("135413275557888")), Rat(Int(-2471502605), Int(76527504)),
           Rat(Int(-83019415531), Int(7142567040)), Rat(Int(30869634919), Int(45349632)),
           Rat(Int(-10100916773), Int(44789760)), Rat(Int(-96936237491), Int(62705664)),
           Rat(Int(-35619671389), Int(39813120)), Rat(-105293315, 589824),
           Rat(-453005291, 36700160)}),
    };
    for (int k = 1; k <= kRPolyKMax; ++k) {
      // even polynomial of degree exactly 2k+2: k+2 stored coefficients,
      // the top one nonzero
      const auto& c = table_[static_cast<size_t>(k - 1)];
      if (static_cast<int>(c.size()) != k + 2 || c.back() == 0)
        throw ConsistencyError("R polynomial table: degree check failed");
    }
  }

  std::vector<std::vector<Rat>> table_;
};

}  // namespace pdet
