#include "kvertex/ratfunc.hpp"

#include <algorithm>
#include <stdexcept>

namespace kvertex {

namespace {

// arbitrary total order for the factor bookkeeping
bool poly_less(const LaurentPoly& a, const LaurentPoly& b) {
  auto ia = a.terms().begin(), ea = a.terms().end();
  auto ib = b.terms().begin(), eb = b.terms().end();
  for (; ia != ea && ib != eb; ++ia, ++ib) {
    if (ia->first < ib->first) return true;
    if (ib->first < ia->first) return false;
    if (ia->second < ib->second) return true;
    if (ib->second < ia->second) return false;
  }
  return ib != eb;
}

}  // namespace

RatFunc::RatFunc(LaurentPoly num, LaurentPoly den) : num_(std::move(num)) {
  if (den.is_zero()) throw std::domain_error("RatFunc: zero denominator");
  attach_factor(std::move(den), 1);
  reduce();
}

// Canonicalize f and merge f^mult into the factor list; monomial parts
// divide straight into the numerator.
void RatFunc::attach_factor(LaurentPoly f, int mult) {
  if (mult == 0 || num_.is_zero()) return;
  if (f.is_single_term()) {
    const auto& [m, c] = *f.terms().begin();
    num_ = num_.times_monomial(m.pow(mult).inverse()).scaled(c.pow(mult).inverse());
    return;
  }
  Monomial content = f.min_exponents();
  if (!content.is_unit()) {
    f = f.times_monomial(content.inverse());
    num_ = num_.times_monomial(content.pow(mult).inverse());
  }
  if (f.lead().second.sign() < 0) {
    f = -f;
    if (mult % 2) num_ = -num_;
  }
  auto it = std::lower_bound(
      factors_.begin(), factors_.end(), f,
      [](const auto& e, const LaurentPoly& v) { return poly_less(e.first, v); });
  if (it != factors_.end() && it->first == f)
    it->second += mult;
  else
    factors_.insert(it, {std::move(f), mult});
}

void RatFunc::reduce() {
  if (num_.is_zero()) {
    factors_.clear();
    den_ = LaurentPoly(Rational(1));
    return;
  }
  for (auto& [f, m] : factors_)
    while (m > 0) {
      auto q = num_.exact_divide(f);
      if (!q) break;
      num_ = std::move(*q);
      --m;
    }
  std::erase_if(factors_, [](const auto& e) { return e.second == 0; });
  den_ = LaurentPoly(Rational(1));
  for (const auto& [f, m] : factors_) den_ *= f.pow(m);
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (factors_ == o.factors_) {
    num_ += o.num_;
    reduce();
    return *this;
  }
  // bring both numerators over the factorwise lcm of the denominators
  LaurentPoly na = std::move(num_), nb = o.num_;
  std::vector<std::pair<LaurentPoly, int>> merged;
  auto ia = factors_.begin();
  auto ib = o.factors_.begin();
  while (ia != factors_.end() || ib != o.factors_.end()) {
    bool only_a = ib == o.factors_.end() ||
                  (ia != factors_.end() && poly_less(ia->first, ib->first));
    bool only_b = ia == factors_.end() ||
                  (ib != o.factors_.end() && poly_less(ib->first, ia->first));
    if (only_a) {
      nb *= ia->first.pow(ia->second);
      merged.push_back(*ia++);
    } else if (only_b) {
      na *= ib->first.pow(ib->second);
      merged.push_back(*ib++);
    } else {
      int lcm = std::max(ia->second, ib->second);
      na *= ia->first.pow(lcm - ia->second);
      nb *= ia->first.pow(lcm - ib->second);
      merged.emplace_back(ia->first, lcm);
      ++ia, ++ib;
    }
  }
  num_ = na + nb;
  factors_ = std::move(merged);
  reduce();
  return *this;
}

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (&o == this) {
    num_ = num_ * num_;
    for (auto& [f, m] : factors_) m *= 2;
    reduce();
    return *this;
  }
  num_ = num_ * o.num_;
  for (const auto& [f, m] : o.factors_) attach_factor(f, m);
  reduce();
  return *this;
}

RatFunc RatFunc::inverse() const {
  if (num_.is_zero()) throw std::domain_error("RatFunc: division by zero");
  RatFunc r;
  r.num_ = den_;
  r.attach_factor(num_, 1);
  r.reduce();
  return r;
}

RatFunc RatFunc::pow(int n) const {
  if (n < 0) return inverse().pow(-n);
  RatFunc r(1);
  RatFunc base = *this;
  while (n > 0) {
    if (n & 1) r *= base;
    base = (n >>= 1) ? base * base : base;
  }
  return r;
}

RatFunc RatFunc::adams(int n) const {
  RatFunc r;
  r.num_ = num_.adams(n);
  for (const auto& [f, m] : factors_) r.attach_factor(f.adams(n), m);
  r.reduce();
  return r;
}

std::optional<LaurentPoly> RatFunc::to_polynomial() const {
  if (den_.is_one()) return num_;
  return num_.exact_divide(den_);
}

Rational RatFunc::eval_at_sqrt(const Rational& a, const Rational& b,
                               const Rational& c) const {
  Rational d = den_.eval_at_sqrt(a, b, c);
  if (d.is_zero()) throw std::domain_error("RatFunc: evaluation hits a pole");
  return num_.eval_at_sqrt(a, b, c) / d;
}

std::string RatFunc::str() const {
  if (den_.is_one()) return num_.str();
  return "(" + num_.str() + ") / (" + den_.str() + ")";
}

RatFunc RatFunc::parse(const std::string& s) {
  auto mid = s.find(") / (");
  if (s.empty() || s.front() != '(' || mid == std::string::npos)
    return RatFunc(LaurentPoly::parse(s));
  if (s.back() != ')') throw std::invalid_argument("RatFunc::parse: bad form");
  return RatFunc(LaurentPoly::parse(s.substr(1, mid - 1)),
                 LaurentPoly::parse(s.substr(mid + 5, s.size() - mid - 6)));
}

}  // namespace kvertex
