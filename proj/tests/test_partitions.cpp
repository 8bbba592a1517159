#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>

#include "doctest.h"
#include "kvertex/partition.hpp"

using namespace kvertex;

namespace {

// independent dimension oracle: hook length formula
std::int64_t hook_dim(const Partition& la) {
  std::int64_t nfact = 1;
  for (int k = 2; k <= la.size(); ++k) nfact *= k;
  std::int64_t hooks = 1;
  for (int i = 0; i < la.length(); ++i)
    for (int j = 0; j < la.part(i); ++j) hooks *= la.arm(i, j) + la.leg(i, j) + 1;
  return nfact / hooks;
}

}  // namespace

TEST_CASE("construction and parsing") {
  CHECK(Partition({3, 1, 1}).str() == "3,1,1");
  CHECK(Partition::parse("3,1,1").size() == 5);
  CHECK(Partition::parse("").empty());
  CHECK(Partition({3, 1, 0, 0}) == Partition({3, 1}));
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({2, -1}), std::invalid_argument);
  CHECK_THROWS_AS(Partition::parse("2,,1"), std::invalid_argument);
}

TEST_CASE("enumeration order is reverse-lexicographic") {
  auto p4 = enumerate_partitions(4);
  REQUIRE(p4.size() == 5);
  CHECK(p4[0] == Partition({4}));
  CHECK(p4[1] == Partition({3, 1}));
  CHECK(p4[2] == Partition({2, 2}));
  CHECK(p4[3] == Partition({2, 1, 1}));
  CHECK(p4[4] == Partition({1, 1, 1, 1}));
  CHECK(enumerate_partitions(8).size() == 22);
  CHECK(enumerate_partitions(0).size() == 1);

  // operator< agrees with the enumeration order and sorts by size first
  auto all = partitions_up_to(6);
  CHECK(std::is_sorted(all.begin(), all.end(),
                       [](const Partition& a, const Partition& b) { return a < b; }));
}

TEST_CASE("conjugation") {
  CHECK(Partition({3, 1}).conjugate() == Partition({2, 1, 1}));
  CHECK(Partition({3, 1, 1}).conjugate() == Partition({3, 1, 1}));
  for (int n = 0; n <= 8; ++n)
    for (const auto& la : enumerate_partitions(n)) {
      CHECK(la.conjugate().conjugate() == la);
      CHECK(la.conjugate().size() == n);
    }
}

TEST_CASE("arms, legs and containment") {
  Partition la({3, 1});
  CHECK(la.arm(0, 0) == 2);
  CHECK(la.leg(0, 0) == 1);
  CHECK(la.coarm(0, 0) == 0);
  CHECK(la.coleg(0, 0) == 0);
  CHECK(la.arm(0, 2) == 0);
  CHECK(la.leg(0, 2) == 0);

  // brute-force cross-check
  for (const auto& mu : partitions_up_to(6))
    for (int i = 0; i < mu.length(); ++i)
      for (int j = 0; j < mu.part(i); ++j) {
        int a = 0, l = 0;
        for (int jj = j + 1; mu.contains(i, jj); ++jj) ++a;
        for (int ii = i + 1; mu.contains(ii, j); ++ii) ++l;
        CHECK(mu.arm(i, j) == a);
        CHECK(mu.leg(i, j) == l);
      }

  CHECK(Partition({3, 2}).contains(Partition({2, 2})));
  CHECK(!Partition({3, 2}).contains(Partition({2, 2, 1})));
  CHECK(Partition({3, 2}).contains(Partition()));
}

TEST_CASE("centralizer orders") {
  CHECK(z_of(Partition({3, 1, 1})) == Rational(6));
  CHECK(z_of(Partition()) == Rational(1));
  CHECK(z_of(Partition({1, 1, 1})) == Rational(6));
  CHECK(z_of(Partition({2, 2, 2})) == Rational(48));
  // sum over classes of |class| = n!  <=>  sum 1/z_mu = 1
  for (int n = 1; n <= 9; ++n) {
    Rational total(0);
    for (const auto& mu : enumerate_partitions(n)) total += z_of(mu).inverse();
    CHECK(total == Rational(1));
  }
}

TEST_CASE("murnaghan-nakayama values") {
  CHECK(mn_character(Partition({2, 1}), Partition({1, 1, 1})) == 2);
  CHECK(mn_character(Partition({1, 1}), Partition({2})) == -1);
  CHECK(mn_character(Partition(), Partition()) == 1);
  CHECK_THROWS_AS(mn_character(Partition({2}), Partition({1})), std::invalid_argument);

  // trivial and sign characters
  for (int n = 1; n <= 7; ++n)
    for (const auto& mu : enumerate_partitions(n)) {
      CHECK(mn_character(Partition({n}), mu) == 1);
      int sign = ((n - mu.length()) % 2 == 0) ? 1 : -1;
      CHECK(mn_character(Partition(std::vector<int>(n, 1)), mu) == sign);
    }

  // dimension at the identity class matches the hook length formula
  for (int n = 1; n <= 8; ++n)
    for (const auto& la : enumerate_partitions(n))
      CHECK(mn_character(la, Partition(std::vector<int>(n, 1))) == hook_dim(la));
}

TEST_CASE("character orthogonality") {
  // rows: sum_mu chi^la(mu) chi^nu(mu) / z_mu = delta_{la nu}
  for (int n = 1; n <= 5; ++n) {
    auto ps = enumerate_partitions(n);
    for (const auto& la : ps)
      for (const auto& nu : ps) {
        Rational s(0);
        for (const auto& mu : ps)
          s += Rational(mn_character(la, mu) * mn_character(nu, mu)) / z_of(mu);
        CHECK(s == Rational(la == nu ? 1 : 0));
      }
    // columns: sum_la chi^la(mu) chi^la(nu) = z_mu delta_{mu nu}
    for (const auto& mu : ps)
      for (const auto& nu : ps) {
        Rational s(0);
        for (const auto& la : ps)
          s += Rational(mn_character(la, mu) * mn_character(la, nu));
        CHECK(s == (mu == nu ? z_of(mu) : Rational(0)));
      }
  }
}
