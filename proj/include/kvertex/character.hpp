#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "kvertex/ratfunc.hpp"

namespace kvertex {

// Finite-rank virtual torus character: a formal integer combination of
// monomial weights.  Characters are what localization hands to the
// bracket; they multiply like Laurent polynomials with integer
// coefficients.
class Character {
public:
  using TermMap = std::map<Monomial, std::int64_t>;

  Character() = default;
  Character(const Monomial& m, std::int64_t mult = 1) { add(m, mult); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::int64_t mult(const Monomial& m) const;
  void add(const Monomial& m, std::int64_t k);

  Character operator-() const;
  Character& operator+=(const Character& o);
  Character& operator-=(const Character& o);
  friend Character operator+(Character a, const Character& b) { return a += b; }
  friend Character operator-(Character a, const Character& b) { return a -= b; }
  friend Character operator*(const Character& a, const Character& b);
  Character scaled(std::int64_t k) const;
  Character times_monomial(const Monomial& m) const;
  friend bool operator==(const Character& a, const Character& b) {
    return a.terms_ == b.terms_;
  }

  // w -> w^{-1} on every weight (the dual representation)
  Character dual() const;
  // sum of multiplicities (virtual dimension)
  std::int64_t rank() const;

  LaurentPoly to_laurent() const;
  // pre: integer coefficients
  static Character from_laurent(const LaurentPoly& p);

  std::string str() const { return to_laurent().str(); }

private:
  TermMap terms_;
};

// Multiplicative extension of w |-> w^{1/2} - w^{-1/2} over a character:
// positive multiplicities go to the numerator, negative to the
// denominator.  A trivial weight with positive multiplicity gives exact
// zero; with negative multiplicity the bracket vanishes in the
// denominator and this throws.  Weights must have integer exponents.
RatFunc bracket(const Character& c);

// the single-weight bracket {w} as a Laurent polynomial
LaurentPoly bracket1(const Monomial& w);

}  // namespace kvertex
