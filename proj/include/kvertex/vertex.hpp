#pragma once

#include <string>

#include "kvertex/fock.hpp"
#include "kvertex/symfunc.hpp"

namespace kvertex {

// Two printed closed forms for the capped two-leg generating function.  They
// are *not* equal as series; the pairing check below is what discriminates
// between them.
enum class TwoLegVariant { as_printed, lemma_form };

const char* to_string(TwoLegVariant v);

// A generating function in plethystic-exponential form: body = Exp(seed).
// seed is kept so callers can inspect the closed form directly.
struct VertexFormula {
  std::string name;
  SymFunc2 seed;
  SymFunc2 body;
};

// Exp(-q / ({y}(1 - q/kappa)) p_1), one alphabet used.
VertexFormula one_leg(Orders ord, int max_deg);
// as_printed:  A p_1 + A pbar_1 + B p_1 pbar_1 with A the one-leg coefficient
//              and B = -q R / ({y}{xz}), R = (1 - q kappa)/(1 - q/kappa);
// lemma_form: -q/({y}(1 - q kappa)) pbar_1 - q/({y}{xz}) p_1 pbar_1.
VertexFormula two_leg(Orders ord, int max_deg, TwoLegVariant v);
// edge kernel Exp(R p_1 pbar_1) and its contraction inverse Exp(R^{-1} p_1 pbar_1)
VertexFormula gluing(Orders ord, int max_deg);
VertexFormula gluing_inv(Orders ord, int max_deg);

// y^{n/2} (xz)^{n - n^2/2} s_la(p_i -> p_i / (1 - (xz)^i)),  n = |la|.
SymFunc stab(Orders ord, const Partition& la);

// <f, g>' = <bar(f[p_i -> (1 - (xz)^{-i}) p_i]), g[p_i -> (1 - y^i) p_i]>
// where bar acts on coefficients and <,> is the Hall pairing.
QSeries khall_pair(const SymFunc& f, const SymFunc& g);
// Same pairing computed operatorially: constant term of
// exp(sum_n n (1-(xz)^n)(1-y^n) d/dp_n d/dpbar_n) applied to bar(f)(p) g(pbar).
// Independent code path; used to cross-check khall_pair.
QSeries khall_pair_derivation(const SymFunc& f, const SymFunc& g);
// Both alphabets at once, with the leg roles of y and xz swapped between the
// slots: f gets p_i -> (1-y^{-i}) p_i, pbar_i -> (1-(xz)^{-i}) pbar_i, then
// coefficient bar; g gets p_i -> ((xz)^i - 1) p_i, pbar_i -> (y^i - 1) pbar_i.
// The g side is expected to carry the outgoing alphabet already regraded by
// q^{-deg} (box counting sits across the edge from the incoming leg); see
// two_leg_pairing_check.
QSeries khall_pair2(const SymFunc2& f, const SymFunc2& g);

// <(xz)^{n^2/2} stab(la), one-leg body>' == s_la(p_i = -q^i / (1 - (q/kappa)^i))
// exactly through q^nq.
bool one_leg_chain_check(const Partition& la, int nq);

struct PairingVerdict {
  bool passed = false;
  RatFunc prefactor;  // the q-independent constant, meaningful when passed
};

// Pairs the two-leg body (with its outgoing alphabet regraded by q^{-deg})
// against twisted Schur states on both legs and compares with
// kappa^{|la|} s_{mu/la}(p_i = -q^i / (1 - (q kappa)^i)).
// Passes iff the two sides agree up to a single q-independent
// rational-times-monomial factor, which is then reported.
PairingVerdict two_leg_pairing_check(const Partition& la, const Partition& mu,
                                     int nq, TwoLegVariant v);

// Normalized matrix elements of k should be polynomial in Q: the ratio
// <la| k |mu> <empty| k |empty>^{-1} may carry at most one power of Q per
// box on either outer leg, so every term above Q-degree |la| + |mu| must
// vanish, and recomputing at Q-order nQ - 1 must reproduce the truncation.
bool q_polynomiality_check(const Kernel& k, const Partition& la,
                           const Partition& mu, int nQ);

}  // namespace kvertex
