#include "kvertex/character.hpp"

#include <stdexcept>

namespace kvertex {

std::int64_t Character::mult(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

void Character::add(const Monomial& m, std::int64_t k) {
  if (k == 0) return;
  auto [it, fresh] = terms_.emplace(m, k);
  if (!fresh) {
    it->second += k;
    if (it->second == 0) terms_.erase(it);
  }
}

Character Character::operator-() const {
  Character r;
  for (const auto& [m, k] : terms_) r.terms_.emplace(m, -k);
  return r;
}

Character& Character::operator+=(const Character& o) {
  for (const auto& [m, k] : o.terms_) add(m, k);
  return *this;
}

Character& Character::operator-=(const Character& o) {
  for (const auto& [m, k] : o.terms_) add(m, -k);
  return *this;
}

Character operator*(const Character& a, const Character& b) {
  Character r;
  for (const auto& [ma, ka] : a.terms_)
    for (const auto& [mb, kb] : b.terms_) r.add(ma * mb, ka * kb);
  return r;
}

Character Character::scaled(std::int64_t k) const {
  Character r;
  if (k == 0) return r;
  for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * k);
  return r;
}

Character Character::times_monomial(const Monomial& m) const {
  Character r;
  for (const auto& [mm, v] : terms_) r.terms_.emplace(mm * m, v);
  return r;
}

Character Character::dual() const {
  Character r;
  for (const auto& [m, v] : terms_) r.terms_.emplace(m.inverse(), v);
  return r;
}

std::int64_t Character::rank() const {
  std::int64_t r = 0;
  for (const auto& [m, v] : terms_) r += v;
  return r;
}

LaurentPoly Character::to_laurent() const {
  LaurentPoly p;
  for (const auto& [m, v] : terms_) p.add_term(m, Rational(v));
  return p;
}

Character Character::from_laurent(const LaurentPoly& p) {
  Character c;
  for (const auto& [m, v] : p.terms()) {
    if (!v.is_integer())
      throw std::domain_error("Character::from_laurent: non-integer multiplicity");
    c.add(m, static_cast<std::int64_t>(mpz_get_si(v.raw().get_num_mpz_t())));
  }
  return c;
}

LaurentPoly bracket1(const Monomial& w) {
  LaurentPoly p;
  Monomial half{w.ex2 / 2, w.ey2 / 2, w.ez2 / 2};
  p.add_term(half, Rational(1));
  p.add_term(half.inverse(), Rational(-1));
  return p;
}

RatFunc bracket(const Character& c) {
  LaurentPoly num(Rational(1)), den(Rational(1));
  for (const auto& [m, k] : c.terms()) {
    if (!m.integral())
      throw std::domain_error("bracket: weight with non-integer exponents");
    if (m.is_unit()) {
      if (k > 0) return RatFunc();  // {1} = 0 kills the product
      throw std::domain_error("bracket: division by zero bracket {1}");
    }
    LaurentPoly f = bracket1(m).pow(k > 0 ? static_cast<int>(k) : static_cast<int>(-k));
    (k > 0 ? num : den) *= f;
  }
  return RatFunc(std::move(num), std::move(den));
}

}  // namespace kvertex
