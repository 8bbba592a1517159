#include "kvertex/qseries.hpp"

#include <stdexcept>

namespace kvertex {

namespace {

// Every non-unit window term has positive weight a + (nq+1) b (for nq >= 1),
// so nilpotency degrees are bounded by the window's maximal weight.
int iteration_cap(Orders ord) {
  return (ord.nq + ord.nQ) + (ord.nq + 1) * ord.nQ + 2;
}

}  // namespace

QSeries QSeries::constant(Orders ord, RatFunc c) {
  QSeries s(ord);
  s.add_term(0, 0, c);
  return s;
}

QSeries QSeries::term(Orders ord, int a, int b, RatFunc c) {
  QSeries s(ord);
  s.add_term(a, b, c);
  return s;
}

RatFunc QSeries::coeff(int a, int b) const {
  auto it = terms_.find({a, b});
  return it == terms_.end() ? RatFunc() : it->second;
}

void QSeries::add_term(int a, int b, const RatFunc& c) {
  if (c.is_zero() || !in_window(a, b)) return;
  auto [it, fresh] = terms_.emplace(std::make_pair(a, b), c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

QSeries QSeries::operator-() const {
  QSeries r(ord_);
  for (const auto& [ab, c] : terms_) r.terms_.emplace(ab, -c);
  return r;
}

QSeries& QSeries::operator+=(const QSeries& o) {
  if (!(ord_ == o.ord_)) {
    *this = truncated(ord_.min(o.ord_));
    for (const auto& [ab, c] : o.terms_) add_term(ab.first, ab.second, c);
    return *this;
  }
  for (const auto& [ab, c] : o.terms_) add_term(ab.first, ab.second, c);
  return *this;
}

QSeries& QSeries::operator-=(const QSeries& o) { return *this += -o; }

QSeries operator*(const QSeries& a, const QSeries& b) {
  QSeries r(a.ord_.min(b.ord_));
  for (const auto& [ab1, c1] : a.terms_)
    for (const auto& [ab2, c2] : b.terms_) {
      int qa = ab1.first + ab2.first, qb = ab1.second + ab2.second;
      if (r.in_window(qa, qb)) r.add_term(qa, qb, c1 * c2);
    }
  return r;
}

QSeries QSeries::scaled(const RatFunc& c) const {
  QSeries r(ord_);
  if (c.is_zero()) return r;
  for (const auto& [ab, v] : terms_) r.terms_.emplace(ab, v * c);
  return r;
}

QSeries QSeries::shifted(int da, int db) const {
  QSeries r(ord_);
  for (const auto& [ab, v] : terms_) r.add_term(ab.first + da, ab.second + db, v);
  return r;
}

QSeries QSeries::truncated(Orders ord) const {
  if (ord.nq > ord_.nq || ord.nQ > ord_.nQ)
    throw std::domain_error("QSeries::truncated: cannot extend truncation orders");
  QSeries r(ord);
  for (const auto& [ab, v] : terms_) r.add_term(ab.first, ab.second, v);
  return r;
}

QSeries QSeries::slice_Q0() const {
  QSeries r(ord_);
  for (const auto& [ab, v] : terms_)
    if (ab.second == 0) r.terms_.emplace(ab, v);
  return r;
}

QSeries QSeries::adams(int n) const {
  if (n < 1) throw std::domain_error("QSeries::adams: n must be >= 1");
  QSeries r(ord_);
  for (const auto& [ab, v] : terms_) r.add_term(n * ab.first, n * ab.second, v.adams(n));
  return r;
}

QSeries QSeries::bar() const {
  QSeries r(ord_);
  for (const auto& [ab, v] : terms_) r.terms_.emplace(ab, v.bar());
  return r;
}

QSeries QSeries::inverse() const {
  RatFunc c0 = coeff(0, 0);
  if (c0.is_zero()) throw std::domain_error("QSeries::inverse: constant term is zero");
  RatFunc c0inv = c0.inverse();
  QSeries t = scaled(c0inv);
  t.add_term(0, 0, RatFunc(-1));  // t = s/c0 - 1, no constant term
  QSeries r = one(ord_), p = one(ord_);
  int cap = iteration_cap(ord_);
  for (int k = 1; !p.is_zero() && k <= cap + 1; ++k) {
    p = p * (-t);
    r += p;
    if (k == cap + 1 && !p.is_zero())
      throw std::logic_error("QSeries::inverse: geometric tail failed to vanish");
  }
  return r.scaled(c0inv);
}

std::string QSeries::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [ab, v] : terms_) {
    if (!out.empty()) out += " + ";
    out += "[" + v.str() + "] q^{" + std::to_string(ab.first) + "} Q^{" +
           std::to_string(ab.second) + "}";
  }
  return out;
}

QSeries QSeries::parse(const std::string& s, Orders ord) {
  QSeries out(ord);
  if (s == "0") return out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    if (s[pos] != '[') throw std::invalid_argument("QSeries::parse: expected '['");
    std::size_t close = s.find("] q^{", pos);
    if (close == std::string::npos) throw std::invalid_argument("QSeries::parse: bad term");
    RatFunc c = RatFunc::parse(s.substr(pos + 1, close - pos - 1));
    std::size_t qend = s.find('}', close + 5);
    int a = std::stoi(s.substr(close + 5, qend - close - 5));
    if (s.compare(qend, 4, "} Q^") != 0 || s[qend + 4] != '{')
      throw std::invalid_argument("QSeries::parse: bad Q exponent");
    std::size_t Qend = s.find('}', qend + 5);
    int b = std::stoi(s.substr(qend + 5, Qend - qend - 5));
    out.add_term(a, b, c);
    pos = Qend + 1;
    if (pos < s.size()) {
      if (s.compare(pos, 3, " + ") != 0)
        throw std::invalid_argument("QSeries::parse: expected ' + '");
      pos += 3;
    }
  }
  return out;
}

QSeries scalar_exp(const QSeries& s) {
  if (!s.coeff(0, 0).is_zero())
    throw std::domain_error("scalar_exp: nonzero constant term (divergent symmetric algebra)");
  Orders ord = s.orders();
  int cap = iteration_cap(ord);
  QSeries L(ord);
  for (int n = 1; n <= cap; ++n) {
    QSeries a = s.adams(n);
    if (a.is_zero()) break;  // adams(n) = 0 implies adams(m) = 0 for m > n
    L += a.scaled(RatFunc(Rational(1, n)));
  }
  QSeries r = QSeries::one(ord), p = QSeries::one(ord);
  for (int k = 1; !p.is_zero() && k <= cap + 1; ++k) {
    p = (p * L).scaled(RatFunc(Rational(1, k)));
    r += p;
    if (k == cap + 1 && !p.is_zero())
      throw std::logic_error("scalar_exp: exponential tail failed to vanish");
  }
  return r;
}

}  // namespace kvertex
