#include "kvertex/localization.hpp"

#include <stdexcept>

namespace kvertex {

FixedPointData fixed_point_Ed(int d) {
  if (d < 1) throw std::invalid_argument("fixed_point_Ed: d must be >= 1");
  FixedPointData fp;
  fp.label = "divisor:" + std::to_string(d);
  for (int i = 1; i <= d; ++i) {
    fp.t_hilb.add(Monomial::y(i), 1);
    fp.t_hilb.add(Monomial::xyz() * Monomial::y(-i), 1);
    fp.t_vir.add(Monomial::y(i), 1);
  }
  // (1 + y^{-1} + ... + y^{-(d-1)}) (1 - (1 + y + ... + y^{d-1})(1 - xz))
  Character geo_down, geo_up, one_minus_xz;
  for (int i = 0; i < d; ++i) {
    geo_down.add(Monomial::y(-i), 1);
    geo_up.add(Monomial::y(i), 1);
  }
  one_minus_xz.add(Monomial::one(), 1);
  one_minus_xz.add(Monomial::xz(), -1);
  Character inner(Monomial::one(), 1);
  inner -= geo_up * one_minus_xz;
  fp.t_half_hilb = geo_down * inner;
  // -xz {y^d}^2 / {y}^2, an exact quotient
  LaurentPoly num = bracket1(Monomial::y(d)) * bracket1(Monomial::y(d));
  num = num.times_monomial(Monomial::xz()).scaled(Rational(-1));
  auto quot = num.exact_divide(bracket1(Monomial::y()) * bracket1(Monomial::y()));
  if (!quot) throw std::logic_error("fixed_point_Ed: bracket ratio failed to divide");
  fp.t_half_vir = Character::from_laurent(*quot);
  fp.ohat_stalk = LaurentPoly(Monomial{0, -d * d, 0});
  return fp;
}

FixedPointData fixed_point_Elambda(const Partition& la) {
  FixedPointData fp;
  fp.label = "leg:" + la.str();
  Character a;
  int sum_coarm = 0, sum_coleg = 0;
  for (int i = 0; i < la.length(); ++i)
    for (int j = 0; j < la.part(i); ++j) {
      a.add(Monomial::xz(-la.arm(i, j)) * Monomial::y(la.leg(i, j) + 1), 1);
      sum_coarm += la.coarm(i, j);
      sum_coleg += la.coleg(i, j);
    }
  fp.t_vir = a + a.dual().times_monomial(Monomial::xyz());
  fp.t_hilb = fp.t_vir.scaled(2);
  fp.t_half_hilb = a.scaled(2);
  fp.t_half_vir = -a;
  int n = la.size();
  fp.ohat_stalk = LaurentPoly(
      Monomial::kappa(-n) * Monomial::xz(-sum_coarm) * Monomial::y(-sum_coleg));
  return fp;
}

bool check_polarization(const FixedPointData& fp) {
  Monomial xyz = Monomial::xyz();
  bool full = fp.t_hilb == fp.t_half_hilb + fp.t_half_hilb.dual().times_monomial(xyz);
  bool vir = fp.t_vir ==
             fp.t_half_vir - fp.t_half_vir.dual().times_monomial(xyz) + fp.t_half_hilb;
  return full && vir;
}

}  // namespace kvertex
