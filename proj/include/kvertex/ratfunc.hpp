#pragma once

#include <utility>
#include <vector>

#include "kvertex/laurent.hpp"

namespace kvertex {

// Quotient of Laurent polynomials.  The denominator is kept as a product
// of canonical factors (monomial content cleared so minimal exponents are
// zero, lexicographically leading coefficient positive; single-term
// factors fold into the numerator), and on every operation each factor is
// cancelled against the numerator by trial exact division.  Sums take the
// factorwise lcm of the denominators, so repeated arithmetic over a fixed
// family of bracket denominators never piles up spurious common factors.
// No general multivariate gcd is attempted beyond this.  Equality is
// exact, by cross-multiplication.
class RatFunc {
public:
  RatFunc() = default;
  RatFunc(LaurentPoly num) : num_(std::move(num)) {}
  RatFunc(const Rational& c) : num_(c) {}
  RatFunc(long c) : num_(Rational(c)) {}
  RatFunc(const Monomial& m) : num_(m) {}
  RatFunc(LaurentPoly num, LaurentPoly den);

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o) { return *this += -o; }
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o) { return *this *= o.inverse(); }
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }

  RatFunc inverse() const;
  RatFunc pow(int n) const;
  RatFunc adams(int n) const;  // x -> x^n etc.; n != 0
  RatFunc bar() const { return adams(-1); }

  // exact semantic equality (cross-multiplication)
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  // collapse to a Laurent polynomial when the denominator divides exactly
  std::optional<LaurentPoly> to_polynomial() const;

  Rational eval_at_sqrt(const Rational& a, const Rational& b, const Rational& c) const;

  // "num" or "(num) / (den)"
  std::string str() const;
  static RatFunc parse(const std::string& s);

private:
  void attach_factor(LaurentPoly f, int mult);
  void reduce();

  LaurentPoly num_;
  // den_ is always the expanded product of factors_; factors_ is sorted,
  // each factor canonical with at least two terms
  LaurentPoly den_ = LaurentPoly(Rational(1));
  std::vector<std::pair<LaurentPoly, int>> factors_;
};

}  // namespace kvertex
