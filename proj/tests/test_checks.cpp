#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdlib>
#include <stdexcept>

#include "doctest.h"
#include "kvertex/serialize.hpp"

using namespace kvertex;
using nlohmann::json;

TEST_CASE("suite table and dispatch") {
  const auto& names = check_suite_names();
  REQUIRE(names.size() == 8);
  CHECK(names.front() == "hall");
  CHECK(names.back() == "qpoly");
  CHECK_THROWS_AS(run_check_suites("no-such-suite", CheckOptions{}), std::invalid_argument);

  // a cheap suite end to end, pinned to one worker
  setenv("KVERTEX_THREADS", "1", 1);
  auto vs = run_check_suites("localization", CheckOptions{});
  REQUIRE(vs.size() == 1);
  CHECK(vs[0].suite == "localization");
  CHECK(vs[0].passed);
  CHECK(format_verdict(vs[0]).rfind("PASS localization: ", 0) == 0);
  CHECK(format_verdict({"x", false, "d"}) == "FAIL x: d");
}

TEST_CASE("verdicts run in canonical order on any pool size") {
  CheckOptions opt;
  setenv("KVERTEX_THREADS", "3", 1);
  auto a = run_check_suites("hall", opt);
  setenv("KVERTEX_THREADS", "1", 1);
  auto b = run_check_suites("hall", opt);
  REQUIRE(a.size() == b.size());
  CHECK(a[0].suite == b[0].suite);
  CHECK(a[0].passed == b[0].passed);
  CHECK(a[0].detail == b[0].detail);
}

TEST_CASE("symmetric function json records") {
  Orders ord{1, 1};
  SymFunc f(ord, 2);
  f.add_term(Partition({2}), QSeries::term(ord, 1, 0, RatFunc(Monomial::y())));
  f.add_term(Partition({1}), QSeries::term(ord, 0, 1, RatFunc(Rational(1, 2))));
  json jf = to_json(f);
  REQUIRE(jf.size() == 2);
  // canonical order: |p| ascending
  CHECK(jf[0]["p"] == json::array({1}));
  CHECK(jf[0]["coeff"]["q"] == 0);
  CHECK(jf[0]["coeff"]["Q"] == 1);
  CHECK(jf[0]["coeff"]["num"] == "1/2");
  CHECK(jf[0]["coeff"]["den"] == "1");
  CHECK(jf[1]["p"] == json::array({2}));

  SymFunc2 g(ord, 1, 1);
  QSeries two_terms = QSeries::term(ord, 0, 0, RatFunc(1)) + QSeries::term(ord, 1, 0, RatFunc(2));
  g.add_term(Partition({1}), Partition(), two_terms);
  json jg = to_json(g);
  REQUIRE(jg.size() == 2);  // one record per bidegree
  CHECK(jg[0]["p"] == json::array({1}));
  CHECK(jg[0]["pbar"] == json::array());
  CHECK(jg[1]["coeff"]["q"] == 1);

  json jk = to_json(Kernel{g});
  CHECK(jk["alphabets"]["p"] == "out");
  CHECK(jk["alphabets"]["pbar"] == "in");
  CHECK(jk["terms"] == jg);

  json jv = to_json(Verdict{"hall", true, "ok"});
  CHECK(jv["check"] == "hall");
  CHECK(jv["passed"] == true);
  CHECK(jv["detail"] == "ok");
}
