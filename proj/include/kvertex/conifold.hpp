#pragma once

#include "kvertex/fock.hpp"

namespace kvertex {

// Composition of two capped two-leg vertex kernels glued along one leg,
// with every glued box weighted by the degree variable Q.  The body equals
// the plethystic exponential of `seed` (the six-term closed form, scalar
// part included); `z` is the pure-scalar factor of the body, which divides
// out of every coefficient.
struct ConifoldKernel {
  Kernel kernel;
  SymFunc2 seed;
  QSeries z;
  int max_deg = 0;
};

// Capped two-leg vertex kernel.  which = 1 puts 1/{y} on the
// single-alphabet terms, which = 2 puts 1/{xz}; the mixed term is
// -q/({y}{xz}) (1-q kappa)/(1-q/kappa) p_1 pbar_1 in both.
Kernel v_kernel(int which, int nq, int max_deg);

// Degree-weighted gluing inverse
// Exp(-(Q/q) (1-q/kappa)/(1-q kappa) {xz}{y} p_1 pbar_1).  Alphabet
// degrees are capped at nQ: each glued box carries one power of Q, so
// higher degrees vanish identically in the truncation window.
Kernel g_inv_kernel(int nq, int nQ);

// Scalar vacuum factor Exp(-qQ/((1-q/kappa)(1-q kappa))).
QSeries z_conifold(int nq, int nQ);

// v_kernel(1) . g_inv_kernel . v_kernel(2), contracted over the glued
// alphabets.  Both stages are verified against their closed forms and
// every composed coefficient is checked to be free of negative q-powers
// (only the gluing inverse itself carries q^{-1} per power of Q); any
// mismatch throws std::runtime_error naming the first differing
// coefficient.
ConifoldKernel compose_conifold(int nq, int nQ, int max_deg);

// True iff the composed kernel equals z_conifold times the plethystic
// exponential of the closed three-term seed
//   -q(1 + ({y}/{xz})Q)/({y}(1-q/kappa))     p_1
//   -q(1 + Q {xz}/{y})/({xz}(1-q/kappa))     pbar_1
//   -Qq/({y}{xz}) (1-q kappa)/(1-q/kappa)    p_1 pbar_1
// and its Q = 0 slice equals the exponential of the seed's Q = 0 slice.
bool conifold_theorem_check(int nq, int nQ, int max_deg);

}  // namespace kvertex
