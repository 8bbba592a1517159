#include "kvertex/serialize.hpp"

namespace kvertex {

using nlohmann::json;

json to_json(const LaurentPoly& p) {
  json terms = json::array();
  for (const auto& [m, c] : p.terms())
    terms.push_back({m.ex2, m.ey2, m.ez2, c.str()});
  return terms;
}

LaurentPoly laurent_from_json(const json& j) {
  LaurentPoly p;
  for (const auto& t : j)
    p.add_term({t.at(0).get<int>(), t.at(1).get<int>(), t.at(2).get<int>()},
               Rational::from_string(t.at(3).get<std::string>()));
  return p;
}

json to_json(const RatFunc& f) {
  return {{"num", to_json(f.num())}, {"den", to_json(f.den())}};
}

RatFunc ratfunc_from_json(const json& j) {
  return RatFunc(laurent_from_json(j.at("num")), laurent_from_json(j.at("den")));
}

json to_json(const QSeries& s) {
  json terms = json::array();
  for (const auto& [ab, c] : s.terms())
    terms.push_back({{"q", ab.first},
                     {"Q", ab.second},
                     {"num", c.num().str()},
                     {"den", c.den().str()}});
  return {{"nq", s.orders().nq}, {"nQ", s.orders().nQ}, {"terms", terms}};
}

QSeries qseries_from_json(const json& j) {
  QSeries s({j.at("nq").get<int>(), j.at("nQ").get<int>()});
  for (const auto& t : j.at("terms"))
    s.add_term(t.at("q").get<int>(), t.at("Q").get<int>(),
               RatFunc(LaurentPoly::parse(t.at("num").get<std::string>()),
                       LaurentPoly::parse(t.at("den").get<std::string>())));
  return s;
}

namespace {

json coeff_record(int a, int b, const RatFunc& c) {
  return {{"q", a}, {"Q", b}, {"num", c.num().str()}, {"den", c.den().str()}};
}

}  // namespace

json to_json(const SymFunc& f) {
  json out = json::array();
  for (const auto& [mu, c] : f.terms())
    for (const auto& [ab, v] : c.terms())
      out.push_back({{"p", mu.parts()}, {"coeff", coeff_record(ab.first, ab.second, v)}});
  return out;
}

json to_json(const SymFunc2& f) {
  json out = json::array();
  for (const auto& [key, c] : f.terms())
    for (const auto& [ab, v] : c.terms())
      out.push_back({{"p", key.first.parts()},
                     {"pbar", key.second.parts()},
                     {"coeff", coeff_record(ab.first, ab.second, v)}});
  return out;
}

json to_json(const Kernel& k) {
  return {{"alphabets", {{"p", "out"}, {"pbar", "in"}}}, {"terms", to_json(k.body)}};
}

json to_json(const Verdict& v) {
  return {{"check", v.suite}, {"passed", v.passed}, {"detail", v.detail}};
}

}  // namespace kvertex
