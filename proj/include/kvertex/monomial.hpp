#pragma once

#include <compare>
#include <string>

namespace kvertex {

// Monomial in the torus weights x, y, z with half-integer exponents
// allowed: exponents are stored doubled, so kappa = (xyz)^{1/2} is
// {1,1,1} and y^{1/2} is {0,1,0}.  Ordering is lexicographic on
// (ex2, ey2, ez2) and is the canonical term order everywhere.
struct Monomial {
  int ex2 = 0;
  int ey2 = 0;
  int ez2 = 0;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;

  Monomial operator*(const Monomial& o) const {
    return {ex2 + o.ex2, ey2 + o.ey2, ez2 + o.ez2};
  }
  Monomial inverse() const { return {-ex2, -ey2, -ez2}; }
  Monomial pow(int n) const { return {ex2 * n, ey2 * n, ez2 * n}; }

  bool is_unit() const { return ex2 == 0 && ey2 == 0 && ez2 == 0; }
  // true when all x, y, z exponents are integers (doubled exponents even)
  bool integral() const { return ex2 % 2 == 0 && ey2 % 2 == 0 && ez2 % 2 == 0; }

  static Monomial one() { return {0, 0, 0}; }
  static Monomial x(int k = 1) { return {2 * k, 0, 0}; }
  static Monomial y(int k = 1) { return {0, 2 * k, 0}; }
  static Monomial z(int k = 1) { return {0, 0, 2 * k}; }
  static Monomial xz(int k = 1) { return {2 * k, 0, 2 * k}; }
  static Monomial xyz(int k = 1) { return {2 * k, 2 * k, 2 * k}; }
  static Monomial kappa(int k = 1) { return {k, k, k}; }  // (xyz)^{k/2}
  static Monomial y_half(int k = 1) { return {0, k, 0}; }     // y^{k/2}
  static Monomial xz_half(int k = 1) { return {k, 0, k}; }    // (xz)^{k/2}

  // "" for the unit; otherwise factors like "x^{2} y^{-1/2}" in x,y,z order
  std::string str() const;
};

std::string half_exponent_str(int e2);  // "3", "-1/2", ...

}  // namespace kvertex
