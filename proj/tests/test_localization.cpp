#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "kvertex/localization.hpp"

using namespace kvertex;

TEST_CASE("thickened divisor fixed points") {
  auto fp1 = fixed_point_Ed(1);
  CHECK(fp1.t_vir == Character(Monomial::y()));
  CHECK(fp1.t_half_hilb == Character(Monomial::xz()));
  CHECK(fp1.t_half_vir == Character(Monomial::xz(), -1));
  CHECK(fp1.ohat_stalk == LaurentPoly(Monomial{0, -1, 0}));

  auto fp2 = fixed_point_Ed(2);
  Character thv;
  thv.add(Monomial::xz() * Monomial::y(), -1);
  thv.add(Monomial::xz(), -2);
  thv.add(Monomial::xz() * Monomial::y(-1), -1);
  CHECK(fp2.t_half_vir == thv);
  CHECK(fp2.ohat_stalk == LaurentPoly(Monomial{0, -4, 0}));

  for (int d = 1; d <= 6; ++d) {
    auto fp = fixed_point_Ed(d);
    CHECK(fp.t_vir.rank() == d);
    CHECK(fp.t_hilb.rank() == 2 * d);
    CHECK(fp.t_half_vir.rank() == -d * d);
    CHECK(fp.ohat_stalk == LaurentPoly(Monomial{0, -d * d, 0}));
    CHECK(check_polarization(fp));
  }
  CHECK_THROWS_AS(fixed_point_Ed(0), std::invalid_argument);
}

TEST_CASE("leg fixed points") {
  auto fp1 = fixed_point_Elambda(Partition({1}));
  Character tv;
  tv.add(Monomial::y(), 1);
  tv.add(Monomial::xz(), 1);
  CHECK(fp1.t_vir == tv);
  CHECK(fp1.ohat_stalk == LaurentPoly(Monomial::kappa(-1)));

  // row of length 2: boxes (0,0) and (0,1) with coarms 0, 1 and colegs 0
  auto fp2 = fixed_point_Elambda(Partition({2}));
  CHECK(fp2.ohat_stalk == LaurentPoly(Monomial::kappa(-2) * Monomial::xz(-1)));

  for (const auto& la : partitions_up_to(6)) {
    if (la.empty()) continue;
    auto fp = fixed_point_Elambda(la);
    int n = la.size();
    CHECK(fp.t_half_vir.rank() == -n);
    CHECK(fp.t_half_hilb.rank() == 2 * n);
    CHECK(fp.t_vir.rank() == 2 * n);
    CHECK(check_polarization(fp));
    // the two half characters are proportional: t_half_vir = -(1/2) t_half_hilb
    CHECK(fp.t_half_hilb == fp.t_half_vir.scaled(-2));
  }
}
