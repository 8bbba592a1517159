#pragma once

#include <map>
#include <optional>
#include <string>

#include "kvertex/monomial.hpp"
#include "kvertex/rational.hpp"

namespace kvertex {

// Sparse Laurent polynomial in x, y, z (half-integer exponents via the
// doubled-exponent Monomial) with Rational coefficients.  Terms are kept
// in the canonical lexicographic order and never store a zero coefficient,
// so structural equality is semantic equality.
class LaurentPoly {
public:
  using TermMap = std::map<Monomial, Rational>;

  LaurentPoly() = default;
  LaurentPoly(const Rational& c) { add_term(Monomial::one(), c); }
  LaurentPoly(long c) : LaurentPoly(Rational(c)) {}
  LaurentPoly(const Monomial& m, const Rational& c = Rational(1)) { add_term(m, c); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  // single term c*m, if any
  bool is_single_term() const { return terms_.size() == 1; }
  std::size_t size() const { return terms_.size(); }
  Rational coeff(const Monomial& m) const;
  Rational constant_coeff() const { return coeff(Monomial::one()); }

  void add_term(const Monomial& m, const Rational& c);

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  LaurentPoly scaled(const Rational& c) const;
  LaurentPoly times_monomial(const Monomial& m) const;
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.terms_ == b.terms_;
  }

  LaurentPoly pow(int n) const;  // n >= 0

  // variable substitution x -> x^n (all of x, y, z); n != 0, n = -1 is bar
  LaurentPoly adams(int n) const;
  LaurentPoly bar() const { return adams(-1); }

  // componentwise min / max of exponents over the support; pre: nonzero
  Monomial min_exponents() const;
  Monomial max_exponents() const;
  // lexicographically largest term
  const std::pair<const Monomial, Rational>& lead() const;

  // exact division: returns q with *this == q * d, or nullopt
  std::optional<LaurentPoly> exact_divide(const LaurentPoly& d) const;

  // value at x = a^2, y = b^2, z = c^2 (a, b, c are the half-variable
  // values, so half-integer exponents evaluate exactly); pre: a,b,c != 0
  Rational eval_at_sqrt(const Rational& a, const Rational& b, const Rational& c) const;

  // canonical text, e.g. "-1/2 + 3 x^{1} y^{-1/2}"; "0" when zero
  std::string str() const;
  static LaurentPoly parse(const std::string& s);

private:
  TermMap terms_;
};

}  // namespace kvertex
