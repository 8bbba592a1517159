#include "kvertex/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace kvertex {

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first.is_unit() &&
         terms_.begin()->second.is_one();
}

Rational LaurentPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPoly::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
  LaurentPoly r;
  if (c.is_zero()) return r;
  for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
  return r;
}

LaurentPoly LaurentPoly::times_monomial(const Monomial& m) const {
  LaurentPoly r;
  for (const auto& [mm, c] : terms_) r.terms_.emplace(mm * m, c);
  return r;
}

LaurentPoly LaurentPoly::pow(int n) const {
  if (n < 0) throw std::domain_error("LaurentPoly::pow: negative power");
  LaurentPoly r(Rational(1));
  LaurentPoly base = *this;
  while (n > 0) {
    if (n & 1) r *= base;
    base = (n >>= 1) ? base * base : base;
  }
  return r;
}

LaurentPoly LaurentPoly::adams(int n) const {
  if (n == 0) throw std::domain_error("LaurentPoly::adams: n must be nonzero");
  LaurentPoly r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m.pow(n), c);
  return r;
}

Monomial LaurentPoly::min_exponents() const {
  if (terms_.empty()) throw std::domain_error("LaurentPoly::min_exponents: zero polynomial");
  Monomial lo = terms_.begin()->first;
  for (const auto& [m, c] : terms_) {
    lo.ex2 = std::min(lo.ex2, m.ex2);
    lo.ey2 = std::min(lo.ey2, m.ey2);
    lo.ez2 = std::min(lo.ez2, m.ez2);
  }
  return lo;
}

Monomial LaurentPoly::max_exponents() const {
  if (terms_.empty()) throw std::domain_error("LaurentPoly::max_exponents: zero polynomial");
  Monomial hi = terms_.begin()->first;
  for (const auto& [m, c] : terms_) {
    hi.ex2 = std::max(hi.ex2, m.ex2);
    hi.ey2 = std::max(hi.ey2, m.ey2);
    hi.ez2 = std::max(hi.ez2, m.ez2);
  }
  return hi;
}

const std::pair<const Monomial, Rational>& LaurentPoly::lead() const {
  if (terms_.empty()) throw std::domain_error("LaurentPoly::lead: zero polynomial");
  return *terms_.rbegin();
}

std::optional<LaurentPoly> LaurentPoly::exact_divide(const LaurentPoly& d) const {
  if (d.is_zero()) throw std::domain_error("LaurentPoly::exact_divide: zero divisor");
  if (is_zero()) return LaurentPoly();
  // Any exact quotient lives in the box [min(r)-min(d), max(r)-max(d)]
  // componentwise (per-variable degrees and valuations add over products),
  // which both rejects inexact input and bounds the loop.
  const Monomial qlo = min_exponents() * d.min_exponents().inverse();
  const Monomial qhi = max_exponents() * d.max_exponents().inverse();
  if (qlo.ex2 > qhi.ex2 || qlo.ey2 > qhi.ey2 || qlo.ez2 > qhi.ez2) return std::nullopt;
  LaurentPoly q, r = *this;
  const auto& dl = d.lead();
  while (!r.is_zero()) {
    const auto& rl = r.lead();
    Monomial tm = rl.first * dl.first.inverse();
    if (tm.ex2 < qlo.ex2 || tm.ex2 > qhi.ex2 || tm.ey2 < qlo.ey2 || tm.ey2 > qhi.ey2 ||
        tm.ez2 < qlo.ez2 || tm.ez2 > qhi.ez2)
      return std::nullopt;
    Rational tc = rl.second / dl.second;
    q.add_term(tm, tc);
    r -= d.times_monomial(tm).scaled(tc);
  }
  return q;
}

Rational LaurentPoly::eval_at_sqrt(const Rational& a, const Rational& b,
                                   const Rational& c) const {
  if (a.is_zero() || b.is_zero() || c.is_zero())
    throw std::domain_error("LaurentPoly::eval_at_sqrt: evaluation at zero");
  Rational out(0);
  for (const auto& [m, v] : terms_)
    out += v * a.pow(m.ex2) * b.pow(m.ey2) * c.pow(m.ez2);
  return out;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += c.str();
    std::string ms = m.str();
    if (!ms.empty()) out += ' ' + ms;
  }
  return out;
}

namespace {

int parse_half_exponent(const std::string& s) {
  // inverse of half_exponent_str: "3" -> 6, "-1/2" -> -1
  if (s.size() > 2 && s.compare(s.size() - 2, 2, "/2") == 0)
    return std::stoi(s.substr(0, s.size() - 2));
  return 2 * std::stoi(s);
}

}  // namespace

LaurentPoly LaurentPoly::parse(const std::string& s) {
  if (s == "0") return LaurentPoly();
  LaurentPoly out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t end = s.find(" + ", pos);
    std::string term = s.substr(pos, end == std::string::npos ? end : end - pos);
    pos = end == std::string::npos ? s.size() + 1 : end + 3;
    std::istringstream ts(term);
    std::string tok;
    if (!(ts >> tok)) throw std::invalid_argument("LaurentPoly::parse: empty term");
    Rational c = Rational::from_string(tok);
    Monomial m;
    while (ts >> tok) {
      if (tok.size() < 4 || tok[1] != '^' || tok[2] != '{' || tok.back() != '}')
        throw std::invalid_argument("LaurentPoly::parse: bad factor '" + tok + "'");
      int e2 = parse_half_exponent(tok.substr(3, tok.size() - 4));
      switch (tok[0]) {
        case 'x': m.ex2 += e2; break;
        case 'y': m.ey2 += e2; break;
        case 'z': m.ez2 += e2; break;
        default: throw std::invalid_argument("LaurentPoly::parse: bad variable '" + tok + "'");
      }
    }
    out.add_term(m, c);
  }
  return out;
}

}  // namespace kvertex
