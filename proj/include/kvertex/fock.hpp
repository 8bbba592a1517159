#pragma once

#include "kvertex/symfunc.hpp"

namespace kvertex {

// Operator kernel on Fock space: a two-alphabet body with p outgoing and
// pbar incoming.  Matrix elements and contraction both go through the
// Hall pairing, so z_mu weights appear exactly once per contracted slot.
struct Kernel {
  SymFunc2 body;
};

// Gamma_+(z) f = exp(sum_{n>=1} z^n p_n / n) f  (multiplication side)
SymFunc gamma_plus(const QSeries& zval, const SymFunc& state);
// Gamma_-(z) f = exp(sum_{n>=1} z^n d/dp_n) f, the Hall adjoint of
// Gamma_+(z): the adjoint of multiplication by p_n is n d/dp_n
SymFunc gamma_minus(const QSeries& zval, const SymFunc& state);

// (K1 K2)_{rho sigma} = sum_mu z_mu (K1)_{rho mu} (K2)_{mu sigma};
// pre: the middle degree bounds agree
Kernel contract(const Kernel& k1, const Kernel& k2);

QSeries matrix_element(const Kernel& k, const Partition& la, const Partition& mu);

// identity kernel Exp(p_1 pbar_1) up to degree max_deg in each alphabet
Kernel cauchy_kernel(Orders ord, int max_deg);

// Refined two-leg series sum_eta s_{la/eta}(1, t, t^2, ...) s_{mu/eta}(u,
// u^2, ...) at t = q/kappa, u = q kappa, truncated at q^nq.
QSeries refined_P(const Partition& la, const Partition& mu, int nq);
// The same series assembled operatorially: both Schur states are fed
// through the half-infinite products of lowering operators
// Gamma_-((q/kappa)^i), i >= 0 resp. Gamma_-((q kappa)^j), j >= 1, then
// Hall-paired.  Agrees with refined_P exactly at every truncation order.
QSeries refined_P_gamma(const Partition& la, const Partition& mu, int nq);

// Signed monomial in kappa relating the refined limit to the bare
// equivariant count.  Boxes live in the intersection of the two leg
// cylinders: (i, j, k) with i < len(mu), j < len(la), k < min(la_j, mu_i);
// a box contributes -kappa when i - j < 0 and -kappa^{-1} otherwise.
RatFunc refined_prefactor(const Partition& la, const Partition& mu);

}  // namespace kvertex
