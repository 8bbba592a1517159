#pragma once

#include <functional>

#include "kvertex/partition.hpp"
#include "kvertex/qseries.hpp"

namespace kvertex {

// Symmetric functions in one alphabet, stored in the power-sum basis:
// f = sum_mu c_mu(q, Q; x, y, z) p_mu with |mu| <= max_deg.  The power
// sums are the working basis everywhere; Schur functions enter and leave
// through the character table.
class SymFunc {
public:
  using Rule = std::function<QSeries(int)>;  // per power-sum index k

  SymFunc() = default;
  SymFunc(Orders ord, int max_deg) : ord_(ord), max_deg_(max_deg) {}

  static SymFunc p(Orders ord, int max_deg, const Partition& mu);
  static SymFunc one(Orders ord, int max_deg) { return p(ord, max_deg, Partition()); }
  // s_lambda = sum_{|mu|=|lambda|} chi^lambda(mu)/z_mu p_mu
  static SymFunc schur(Orders ord, int max_deg, const Partition& la);
  // h_n = sum_{|mu|=n} p_mu/z_mu
  static SymFunc h(Orders ord, int max_deg, int n);

  Orders orders() const { return ord_; }
  int max_deg() const { return max_deg_; }
  const std::map<Partition, QSeries>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  QSeries coeff(const Partition& mu) const;
  void add_term(const Partition& mu, const QSeries& c);

  SymFunc operator-() const;
  SymFunc& operator+=(const SymFunc& o);
  SymFunc& operator-=(const SymFunc& o);
  friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
  friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
  friend SymFunc operator*(const SymFunc& a, const SymFunc& b);
  SymFunc& operator*=(const SymFunc& o) { return *this = *this * o; }
  SymFunc scaled(const QSeries& c) const;
  SymFunc scaled(const RatFunc& c) const;
  friend bool operator==(const SymFunc& a, const SymFunc& b) {
    return a.ord_ == b.ord_ && a.max_deg_ == b.max_deg_ && a.terms_ == b.terms_;
  }

  // Adams operation: p_k -> p_{nk} and q -> q^n, Q -> Q^n, x -> x^n, ...
  SymFunc adams(int n) const;
  // p_k -> rule(k) * p_k (plethystic substitution, multiplier form)
  SymFunc substituted(const Rule& rule) const;
  // p_k -> rule(k) (evaluation form)
  QSeries evaluated(const Rule& rule) const;
  // bar every coefficient (alphabet untouched)
  SymFunc coeff_bar() const;
  SymFunc truncated(Orders ord) const;

private:
  Orders ord_;
  int max_deg_ = 0;
  std::map<Partition, QSeries> terms_;
};

// Hall pairing <p_mu, p_nu> = z_mu delta: <f, g> = sum_mu z_mu f_mu g_mu
QSeries hall(const SymFunc& f, const SymFunc& g);

// s_{lambda/eta} = sum_nu <s_lambda, s_eta s_nu> s_nu
SymFunc skew_schur(Orders ord, int max_deg, const Partition& la, const Partition& eta);

// plethystic exponential Exp(f) = exp(sum_n adams(n, f)/n);
// pre: zero coefficient at (p_empty, q^0 Q^0)
SymFunc plet_exp(const SymFunc& seed);
// inverse of plet_exp; pre: coefficient at (p_empty, q^0 Q^0) is 1
SymFunc plet_log(const SymFunc& body);

// Symmetric functions in two alphabets p (outgoing) and pbar (incoming);
// the one-alphabet type is the pbar-degree-0 slice.
class SymFunc2 {
public:
  using Key = std::pair<Partition, Partition>;  // (p-part, pbar-part)
  using Rule = SymFunc::Rule;

  SymFunc2() = default;
  SymFunc2(Orders ord, int deg_p, int deg_pbar)
      : ord_(ord), deg_p_(deg_p), deg_pbar_(deg_pbar) {}

  static SymFunc2 one(Orders ord, int deg_p, int deg_pbar);
  // f(p) g(pbar)
  static SymFunc2 outer(const SymFunc& f, const SymFunc& g);
  static SymFunc2 from_p(const SymFunc& f, int deg_pbar);
  static SymFunc2 from_pbar(const SymFunc& g, int deg_p);

  Orders orders() const { return ord_; }
  int deg_p() const { return deg_p_; }
  int deg_pbar() const { return deg_pbar_; }
  const std::map<Key, QSeries>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  QSeries coeff(const Partition& mu, const Partition& nu) const;
  void add_term(const Partition& mu, const Partition& nu, const QSeries& c);

  SymFunc2 operator-() const;
  SymFunc2& operator+=(const SymFunc2& o);
  SymFunc2& operator-=(const SymFunc2& o);
  friend SymFunc2 operator+(SymFunc2 a, const SymFunc2& b) { return a += b; }
  friend SymFunc2 operator-(SymFunc2 a, const SymFunc2& b) { return a -= b; }
  friend SymFunc2 operator*(const SymFunc2& a, const SymFunc2& b);
  SymFunc2& operator*=(const SymFunc2& o) { return *this = *this * o; }
  SymFunc2 scaled(const QSeries& c) const;
  friend bool operator==(const SymFunc2& a, const SymFunc2& b) {
    return a.ord_ == b.ord_ && a.deg_p_ == b.deg_p_ && a.deg_pbar_ == b.deg_pbar_ &&
           a.terms_ == b.terms_;
  }

  SymFunc2 adams(int n) const;
  SymFunc2 substituted_p(const Rule& rule) const;
  SymFunc2 substituted_pbar(const Rule& rule) const;
  // bar every coefficient (alphabets untouched)
  SymFunc2 coeff_bar() const;
  // evaluate the pbar alphabet, leaving a one-alphabet function
  SymFunc evaluated_pbar(const Rule& rule) const;
  // the pbar-degree-0 slice as a one-alphabet function
  SymFunc slice_p() const;
  SymFunc2 truncated(Orders ord) const;

private:
  Orders ord_;
  int deg_p_ = 0, deg_pbar_ = 0;
  std::map<Key, QSeries> terms_;
};

// <f, g> with both alphabets contracted: sum z_mu z_nu f_{mu nu} g_{mu nu}
QSeries hall2(const SymFunc2& f, const SymFunc2& g);

SymFunc2 plet_exp(const SymFunc2& seed);
SymFunc2 plet_log(const SymFunc2& body);

// 1/(1 - q^a m) as a QSeries
QSeries geom_inv(Orders ord, int a, const Monomial& m);

// Degree-d component of Exp(p_1/(1 - t^{-1})) computed two independent
// ways (plethystic exponential vs the direct p_mu / z_mu sum with
// specialized coefficients), plus polynomiality of the coefficients after
// clearing prod_{i=1}^{d} (1 - t^{-i}).  t is a single monomial weight.
bool exp_HHd_check(const Monomial& t, int max_deg);

}  // namespace kvertex
