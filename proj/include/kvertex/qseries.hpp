#pragma once

#include <map>
#include <utility>

#include "kvertex/ratfunc.hpp"

namespace kvertex {

// Truncation orders for the box-counting variable q and the degree
// variable Q.
struct Orders {
  int nq = 4;
  int nQ = 2;
  friend bool operator==(const Orders&, const Orders&) = default;
  Orders min(const Orders& o) const { return {std::min(nq, o.nq), std::min(nQ, o.nQ)}; }
};

// Truncated bigraded series in (q, Q) with RatFunc coefficients.  A term
// q^a Q^b is kept iff 0 <= b <= nQ and -b <= a <= nq + (nQ - b): each
// power of Q buys one negative power of q (needed by the degree-graded
// gluing inverse) and one extra positive power, so that products with the
// complementary factors are exact up to q^nq on every Q-slice.  The kept
// region is closed under "discarded * kept = discarded", making truncated
// arithmetic a ring quotient; at nQ = 0 it is the plain box 0 <= a <= nq.
class QSeries {
public:
  using TermMap = std::map<std::pair<int, int>, RatFunc>;  // (a, b) -> coeff

  QSeries() = default;
  explicit QSeries(Orders ord) : ord_(ord) {}
  static QSeries constant(Orders ord, RatFunc c);
  static QSeries term(Orders ord, int a, int b, RatFunc c);
  static QSeries one(Orders ord) { return constant(ord, RatFunc(1)); }

  Orders orders() const { return ord_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  RatFunc coeff(int a, int b = 0) const;
  bool in_window(int a, int b) const {
    return b >= 0 && b <= ord_.nQ && a >= -b && a <= ord_.nq + (ord_.nQ - b);
  }
  void add_term(int a, int b, const RatFunc& c);

  QSeries operator-() const;
  QSeries& operator+=(const QSeries& o);
  QSeries& operator-=(const QSeries& o);
  friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
  friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  QSeries& operator*=(const QSeries& o) { return *this = *this * o; }
  QSeries scaled(const RatFunc& c) const;
  QSeries shifted(int da, int db) const;  // multiply by q^da Q^db
  friend bool operator==(const QSeries& a, const QSeries& b) {
    return a.ord_ == b.ord_ && a.terms_ == b.terms_;
  }

  QSeries truncated(Orders ord) const;  // pre: ord componentwise <= orders()
  QSeries slice_Q0() const;             // set Q = 0, same orders

  QSeries adams(int n) const;  // q -> q^n, Q -> Q^n, x -> x^n, ...; n >= 1
  QSeries bar() const;         // invert x, y, z; fix q, Q
  QSeries inverse() const;     // pre: coeff(0,0) invertible

  // "0" or terms "[coeff] q^{a} Q^{b}" joined by " + ", in (a, b) order
  std::string str() const;
  static QSeries parse(const std::string& s, Orders ord);

private:
  Orders ord_;
  TermMap terms_;
};

// exp(sum_{n>=1} adams(n, s)/n); pre: coeff(0,0) is zero
QSeries scalar_exp(const QSeries& s);

}  // namespace kvertex
