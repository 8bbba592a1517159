#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "kvertex/character.hpp"
#include "kvertex/conifold.hpp"
#include "kvertex/vertex.hpp"

using namespace kvertex;

namespace {

std::mt19937 rng(41117);

RatFunc inv(const LaurentPoly& den) { return RatFunc(LaurentPoly(Rational(1)), den); }

// -q/({w}(1 - q/kappa)) rebuilt from scratch
QSeries leg(Orders ord, const Monomial& w) {
  return QSeries::term(ord, 1, 0, -inv(bracket1(w))) *
         geom_inv(ord, 1, Monomial::kappa().inverse());
}

QSeries random_series(Orders ord) {
  std::uniform_int_distribution<int> qa(0, 2), qb(0, 1), e(-1, 1), num(-3, 3), den(1, 2);
  QSeries s(ord);
  for (int t = 0; t < 2; ++t) {
    int b = qb(rng);
    s += QSeries::term(ord, b + qa(rng), b,
                       RatFunc(LaurentPoly(Monomial{e(rng), e(rng), e(rng)},
                                           Rational(num(rng), den(rng)))));
  }
  return s;
}

}  // namespace

TEST_CASE("capped vertex and gluing-inverse seeds match their displays") {
  const Partition e, p1({1});
  Orders ord{3, 0};
  const QSeries qy = leg(ord, Monomial::y()), qxz = leg(ord, Monomial::xz());

  SymFunc2 s1 = plet_log(v_kernel(1, 3, 2).body);
  CHECK(s1.coeff(p1, e) == qy);
  CHECK(s1.coeff(e, p1) == qy);
  CHECK(s1.coeff(p1, p1).coeff(1, 0) == -inv(bracket1(Monomial::y()) * bracket1(Monomial::xz())));
  CHECK(s1.coeff(p1, p1).coeff(2, 0) ==
        RatFunc(LaurentPoly(Monomial::kappa()) - LaurentPoly(Monomial::kappa().inverse()),
                bracket1(Monomial::y()) * bracket1(Monomial::xz())));

  SymFunc2 s2 = plet_log(v_kernel(2, 3, 2).body);
  CHECK(s2.coeff(p1, e) == qxz);
  CHECK(s2.coeff(e, p1) == qxz);
  CHECK(s2.coeff(p1, p1) == s1.coeff(p1, p1));

  Orders oQ{3, 2};
  SymFunc2 sg = plet_log(g_inv_kernel(3, 2).body);
  CHECK(sg.coeff(p1, p1).coeff(-1, 1) ==
        -RatFunc(bracket1(Monomial::xz()) * bracket1(Monomial::y())));
  CHECK(g_inv_kernel(3, 2).body.coeff(e, e) == QSeries::one(oQ));
  CHECK(g_inv_kernel(3, 2).body.truncated({3, 0}) == SymFunc2::one({3, 0}, 2, 2));
}

TEST_CASE("one-letter contraction multiplies seed coefficients") {
  Orders ord{2, 2};
  const Partition p1({1});
  for (int trial = 0; trial < 6; ++trial) {
    QSeries a = random_series(ord), b = random_series(ord);
    SymFunc2 sa(ord, 3, 3), sb(ord, 3, 3), sab(ord, 3, 3);
    sa.add_term(p1, p1, a);
    sb.add_term(p1, p1, b);
    sab.add_term(p1, p1, a * b);
    Kernel left{plet_exp(sa)}, right{plet_exp(sb)};
    CHECK(contract(left, right).body == plet_exp(sab));
  }
}

TEST_CASE("gluing inverse undoes the plain gluing kernel up to the degree weight") {
  Orders ord{3, 2};
  Kernel g{gluing(ord, 2).body};
  Kernel composed = contract(g, g_inv_kernel(3, 2));
  SymFunc2 want(ord, 2, 2);
  want.add_term(Partition({1}), Partition({1}),
                QSeries::term(ord, -1, 1,
                              -RatFunc(bracket1(Monomial::xz()) * bracket1(Monomial::y()))));
  CHECK(composed.body == plet_exp(want));
}

TEST_CASE("composition matches the closed six-term seed") {
  const Partition e, p1({1});
  Orders ord{3, 2};
  ConifoldKernel ck;
  REQUIRE_NOTHROW(ck = compose_conifold(3, 2, 2));

  CHECK(ck.seed.coeff(e, e) ==
        QSeries::term(ord, 1, 1, RatFunc(-1)) *
            geom_inv(ord, 1, Monomial::kappa().inverse()) *
            geom_inv(ord, 1, Monomial::kappa()));
  // at Q^0 only the two outer cap terms survive
  CHECK(ck.seed.coeff(p1, e).slice_Q0() == leg(ord, Monomial::y()));
  CHECK(ck.seed.coeff(e, p1).slice_Q0() == leg(ord, Monomial::xz()));
  // the Q-corrections swap the brackets
  CHECK(ck.seed.coeff(p1, e).coeff(1, 1) == -inv(bracket1(Monomial::xz())));
  CHECK(ck.seed.coeff(e, p1).coeff(1, 1) == -inv(bracket1(Monomial::y())));
  CHECK(ck.seed.coeff(p1, p1).coeff(1, 1) ==
        -inv(bracket1(Monomial::y()) * bracket1(Monomial::xz())));
  CHECK(ck.seed.coeff(p1, p1).slice_Q0().is_zero());

  CHECK(ck.z.coeff(0, 0) == RatFunc(1));
  CHECK(ck.z.coeff(1, 1) == RatFunc(-1));
  CHECK(matrix_element(ck.kernel, Partition(), Partition()).coeff(0, 0) == RatFunc(1));
}

TEST_CASE("composed kernel factors through the scalar part exactly") {
  CHECK(conifold_theorem_check(3, 2, 2));
  CHECK(conifold_theorem_check(4, 3, 3));
}

TEST_CASE("matrix elements over the vacuum are polynomial in the degree variable") {
  ConifoldKernel ck = compose_conifold(3, 3, 2);
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b)
      for (const auto& la : enumerate_partitions(a))
        for (const auto& mu : enumerate_partitions(b))
          CHECK(q_polynomiality_check(ck.kernel, la, mu, 3));
}
