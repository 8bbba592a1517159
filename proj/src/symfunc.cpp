#include "kvertex/symfunc.hpp"

#include <mutex>
#include <stdexcept>

namespace kvertex {

namespace {

Partition union_parts(const Partition& a, const Partition& b) {
  std::vector<int> parts;
  parts.reserve(a.length() + b.length());
  std::merge(a.parts().begin(), a.parts().end(), b.parts().begin(), b.parts().end(),
             std::back_inserter(parts), std::greater<int>());
  return Partition(std::move(parts));
}

// Schur row in the power-sum basis: s_la = sum chi^la(mu)/z_mu p_mu.
// Shared and memoized; the character table dominates the cost.
const std::map<Partition, Rational>& schur_row(const Partition& la) {
  static std::map<Partition, std::map<Partition, Rational>> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lk(mutex);
  auto it = cache.find(la);
  if (it != cache.end()) return it->second;
  std::map<Partition, Rational> row;
  for (const auto& mu : enumerate_partitions(la.size())) {
    std::int64_t chi = mn_character(la, mu);
    if (chi != 0) row.emplace(mu, Rational(chi) / z_of(mu));
  }
  return cache.emplace(la, std::move(row)).first->second;
}

int mobius(int n) {
  int m = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      m = -m;
    }
  }
  if (n > 1) m = -m;
  return m;
}

int exp_cap(Orders ord, int max_deg) {
  return max_deg + (ord.nq + ord.nQ) + (ord.nq + 1) * ord.nQ + 2;
}

}  // namespace

SymFunc SymFunc::p(Orders ord, int max_deg, const Partition& mu) {
  if (mu.size() > max_deg)
    throw std::invalid_argument("SymFunc::p: degree exceeds max_deg");
  SymFunc f(ord, max_deg);
  f.terms_.emplace(mu, QSeries::one(ord));
  return f;
}

SymFunc SymFunc::schur(Orders ord, int max_deg, const Partition& la) {
  if (la.size() > max_deg)
    throw std::invalid_argument("SymFunc::schur: degree exceeds max_deg");
  SymFunc f(ord, max_deg);
  for (const auto& [mu, c] : schur_row(la))
    f.terms_.emplace(mu, QSeries::constant(ord, RatFunc(c)));
  return f;
}

SymFunc SymFunc::h(Orders ord, int max_deg, int n) {
  if (n > max_deg) throw std::invalid_argument("SymFunc::h: degree exceeds max_deg");
  SymFunc f(ord, max_deg);
  for (const auto& mu : enumerate_partitions(n))
    f.terms_.emplace(mu, QSeries::constant(ord, RatFunc(z_of(mu).inverse())));
  return f;
}

QSeries SymFunc::coeff(const Partition& mu) const {
  auto it = terms_.find(mu);
  return it == terms_.end() ? QSeries(ord_) : it->second;
}

void SymFunc::add_term(const Partition& mu, const QSeries& c) {
  if (mu.size() > max_deg_ || c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(mu, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SymFunc SymFunc::operator-() const {
  SymFunc r(ord_, max_deg_);
  for (const auto& [mu, c] : terms_) r.terms_.emplace(mu, -c);
  return r;
}

SymFunc& SymFunc::operator+=(const SymFunc& o) {
  ord_ = ord_.min(o.ord_);
  max_deg_ = std::min(max_deg_, o.max_deg_);
  auto mine = std::move(terms_);
  terms_.clear();
  for (const auto& [mu, c] : mine) add_term(mu, c.truncated(ord_));
  for (const auto& [mu, c] : o.terms_) add_term(mu, c.truncated(ord_));
  return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& o) { return *this += -o; }

SymFunc operator*(const SymFunc& a, const SymFunc& b) {
  SymFunc r(a.ord_.min(b.ord_), std::min(a.max_deg_, b.max_deg_));
  for (const auto& [mua, ca] : a.terms_)
    for (const auto& [mub, cb] : b.terms_) {
      if (mua.size() + mub.size() > r.max_deg_) continue;
      r.add_term(union_parts(mua, mub), ca * cb);
    }
  return r;
}

SymFunc SymFunc::scaled(const QSeries& c) const {
  SymFunc r(ord_, max_deg_);
  for (const auto& [mu, v] : terms_) r.add_term(mu, v * c);
  return r;
}

SymFunc SymFunc::scaled(const RatFunc& c) const {
  SymFunc r(ord_, max_deg_);
  if (c.is_zero()) return r;
  for (const auto& [mu, v] : terms_) r.terms_.emplace(mu, v.scaled(c));
  return r;
}

SymFunc SymFunc::coeff_bar() const {
  SymFunc r(ord_, max_deg_);
  for (const auto& [mu, c] : terms_) r.terms_.emplace(mu, c.bar());
  return r;
}

SymFunc SymFunc::truncated(Orders ord) const {
  SymFunc r(ord, max_deg_);
  for (const auto& [mu, c] : terms_) r.add_term(mu, c.truncated(ord));
  return r;
}

SymFunc SymFunc::adams(int n) const {
  if (n < 1) throw std::domain_error("SymFunc::adams: n must be >= 1");
  SymFunc r(ord_, max_deg_);
  for (const auto& [mu, c] : terms_) {
    if (n * mu.size() > max_deg_) continue;
    std::vector<int> parts;
    parts.reserve(mu.length());
    for (int p : mu.parts()) parts.push_back(n * p);
    r.add_term(Partition(std::move(parts)), c.adams(n));
  }
  return r;
}

SymFunc SymFunc::substituted(const Rule& rule) const {
  SymFunc r(ord_, max_deg_);
  for (const auto& [mu, c] : terms_) {
    QSeries v = c;
    for (int p : mu.parts()) v *= rule(p);
    r.add_term(mu, v);
  }
  return r;
}

QSeries SymFunc::evaluated(const Rule& rule) const {
  QSeries out(ord_);
  for (const auto& [mu, c] : terms_) {
    QSeries v = c;
    for (int p : mu.parts()) v *= rule(p);
    out += v;
  }
  return out;
}

QSeries hall(const SymFunc& f, const SymFunc& g) {
  QSeries out(f.orders().min(g.orders()));
  const auto& a = f.terms();
  const auto& b = g.terms();
  for (const auto& [mu, ca] : a) {
    auto it = b.find(mu);
    if (it == b.end()) continue;
    out += (ca * it->second).scaled(RatFunc(z_of(mu)));
  }
  return out;
}

SymFunc skew_schur(Orders ord, int max_deg, const Partition& la, const Partition& eta) {
  int n = la.size() - eta.size();
  SymFunc out(ord, max_deg);
  if (n < 0 || !la.contains(eta)) return out;
  if (n > max_deg)
    throw std::invalid_argument("skew_schur: degree exceeds max_deg");
  SymFunc sla = SymFunc::schur(ord, la.size(), la);
  SymFunc seta = SymFunc::schur(ord, la.size(), eta);
  for (const auto& nu : enumerate_partitions(n)) {
    QSeries c = hall(sla, seta * SymFunc::schur(ord, la.size(), nu));
    if (!c.is_zero()) out += SymFunc::schur(ord, max_deg, nu).scaled(c);
  }
  return out;
}

SymFunc plet_exp(const SymFunc& seed) {
  if (!seed.coeff(Partition()).coeff(0, 0).is_zero())
    throw std::domain_error("plet_exp: nonzero constant term (divergent symmetric algebra)");
  Orders ord = seed.orders();
  int cap = exp_cap(ord, seed.max_deg());
  SymFunc L(ord, seed.max_deg());
  for (int n = 1; n <= cap; ++n) {
    SymFunc a = seed.adams(n);
    if (a.is_zero()) break;
    L += a.scaled(RatFunc(Rational(1, n)));
  }
  SymFunc r = SymFunc::one(ord, seed.max_deg()), pk = r;
  for (int k = 1; !pk.is_zero() && k <= cap + 1; ++k) {
    pk = (pk * L).scaled(RatFunc(Rational(1, k)));
    r += pk;
    if (k == cap + 1 && !pk.is_zero())
      throw std::logic_error("plet_exp: exponential tail failed to vanish");
  }
  return r;
}

SymFunc plet_log(const SymFunc& body) {
  if (!body.coeff(Partition()).coeff(0, 0).is_one())
    throw std::domain_error("plet_log: constant term must be 1");
  Orders ord = body.orders();
  int cap = exp_cap(ord, body.max_deg());
  SymFunc t = body - SymFunc::one(ord, body.max_deg());
  SymFunc L(ord, body.max_deg()), pk = SymFunc::one(ord, body.max_deg());
  for (int k = 1; k <= cap + 1; ++k) {
    pk *= t;
    if (pk.is_zero()) break;
    if (k == cap + 1) throw std::logic_error("plet_log: logarithm tail failed to vanish");
    L += pk.scaled(RatFunc(Rational((k % 2) ? 1 : -1, k)));
  }
  SymFunc seed(ord, body.max_deg());
  for (int n = 1; n <= cap; ++n) {
    int m = mobius(n);
    if (m == 0) continue;
    SymFunc a = L.adams(n);
    if (a.is_zero() && n > body.max_deg()) break;
    seed += a.scaled(RatFunc(Rational(m, n)));
  }
  return seed;
}

SymFunc2 SymFunc2::one(Orders ord, int deg_p, int deg_pbar) {
  SymFunc2 f(ord, deg_p, deg_pbar);
  f.terms_.emplace(Key{}, QSeries::one(ord));
  return f;
}

SymFunc2 SymFunc2::outer(const SymFunc& f, const SymFunc& g) {
  SymFunc2 r(f.orders().min(g.orders()), f.max_deg(), g.max_deg());
  for (const auto& [mu, cf] : f.terms())
    for (const auto& [nu, cg] : g.terms()) r.add_term(mu, nu, cf * cg);
  return r;
}

SymFunc2 SymFunc2::from_p(const SymFunc& f, int deg_pbar) {
  SymFunc2 r(f.orders(), f.max_deg(), deg_pbar);
  for (const auto& [mu, c] : f.terms()) r.terms_.emplace(Key{mu, Partition()}, c);
  return r;
}

SymFunc2 SymFunc2::from_pbar(const SymFunc& g, int deg_p) {
  SymFunc2 r(g.orders(), deg_p, g.max_deg());
  for (const auto& [nu, c] : g.terms()) r.terms_.emplace(Key{Partition(), nu}, c);
  return r;
}

QSeries SymFunc2::coeff(const Partition& mu, const Partition& nu) const {
  auto it = terms_.find(Key{mu, nu});
  return it == terms_.end() ? QSeries(ord_) : it->second;
}

void SymFunc2::add_term(const Partition& mu, const Partition& nu, const QSeries& c) {
  if (mu.size() > deg_p_ || nu.size() > deg_pbar_ || c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(Key{mu, nu}, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SymFunc2 SymFunc2::operator-() const {
  SymFunc2 r(ord_, deg_p_, deg_pbar_);
  for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
  return r;
}

SymFunc2& SymFunc2::operator+=(const SymFunc2& o) {
  ord_ = ord_.min(o.ord_);
  deg_p_ = std::min(deg_p_, o.deg_p_);
  deg_pbar_ = std::min(deg_pbar_, o.deg_pbar_);
  auto mine = std::move(terms_);
  terms_.clear();
  for (const auto& [k, c] : mine) add_term(k.first, k.second, c.truncated(ord_));
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c.truncated(ord_));
  return *this;
}

SymFunc2& SymFunc2::operator-=(const SymFunc2& o) { return *this += -o; }

SymFunc2 operator*(const SymFunc2& a, const SymFunc2& b) {
  SymFunc2 r(a.ord_.min(b.ord_), std::min(a.deg_p_, b.deg_p_),
             std::min(a.deg_pbar_, b.deg_pbar_));
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) {
      if (ka.first.size() + kb.first.size() > r.deg_p_ ||
          ka.second.size() + kb.second.size() > r.deg_pbar_)
        continue;
      r.add_term(union_parts(ka.first, kb.first), union_parts(ka.second, kb.second),
                 ca * cb);
    }
  return r;
}

SymFunc2 SymFunc2::scaled(const QSeries& c) const {
  SymFunc2 r(ord_, deg_p_, deg_pbar_);
  for (const auto& [k, v] : terms_) r.add_term(k.first, k.second, v * c);
  return r;
}

SymFunc2 SymFunc2::adams(int n) const {
  if (n < 1) throw std::domain_error("SymFunc2::adams: n must be >= 1");
  auto scale_parts = [n](const Partition& mu) {
    std::vector<int> parts;
    parts.reserve(mu.length());
    for (int p : mu.parts()) parts.push_back(n * p);
    return Partition(std::move(parts));
  };
  SymFunc2 r(ord_, deg_p_, deg_pbar_);
  for (const auto& [k, c] : terms_) {
    if (n * k.first.size() > deg_p_ || n * k.second.size() > deg_pbar_) continue;
    r.add_term(scale_parts(k.first), scale_parts(k.second), c.adams(n));
  }
  return r;
}

SymFunc2 SymFunc2::substituted_p(const Rule& rule) const {
  SymFunc2 r(ord_, deg_p_, deg_pbar_);
  for (const auto& [k, c] : terms_) {
    QSeries v = c;
    for (int p : k.first.parts()) v *= rule(p);
    r.add_term(k.first, k.second, v);
  }
  return r;
}

SymFunc2 SymFunc2::substituted_pbar(const Rule& rule) const {
  SymFunc2 r(ord_, deg_p_, deg_pbar_);
  for (const auto& [k, c] : terms_) {
    QSeries v = c;
    for (int p : k.second.parts()) v *= rule(p);
    r.add_term(k.first, k.second, v);
  }
  return r;
}

SymFunc2 SymFunc2::coeff_bar() const {
  SymFunc2 r(ord_, deg_p_, deg_pbar_);
  for (const auto& [k, c] : terms_) r.terms_.emplace(k, c.bar());
  return r;
}

SymFunc2 SymFunc2::truncated(Orders ord) const {
  SymFunc2 r(ord, deg_p_, deg_pbar_);
  for (const auto& [k, c] : terms_) {
    QSeries t = c.truncated(ord);
    if (!t.is_zero()) r.terms_.emplace(k, std::move(t));
  }
  return r;
}

SymFunc SymFunc2::evaluated_pbar(const Rule& rule) const {
  SymFunc out(ord_, deg_p_);
  for (const auto& [k, c] : terms_) {
    QSeries v = c;
    for (int p : k.second.parts()) v *= rule(p);
    out.add_term(k.first, v);
  }
  return out;
}

SymFunc SymFunc2::slice_p() const {
  SymFunc out(ord_, deg_p_);
  for (const auto& [k, c] : terms_)
    if (k.second.empty()) out.add_term(k.first, c);
  return out;
}

QSeries hall2(const SymFunc2& f, const SymFunc2& g) {
  QSeries out(f.orders().min(g.orders()));
  const auto& b = g.terms();
  for (const auto& [k, ca] : f.terms()) {
    auto it = b.find(k);
    if (it == b.end()) continue;
    out += (ca * it->second).scaled(RatFunc(z_of(k.first) * z_of(k.second)));
  }
  return out;
}

SymFunc2 plet_exp(const SymFunc2& seed) {
  if (!seed.coeff(Partition(), Partition()).coeff(0, 0).is_zero())
    throw std::domain_error("plet_exp: nonzero constant term (divergent symmetric algebra)");
  Orders ord = seed.orders();
  int cap = exp_cap(ord, seed.deg_p() + seed.deg_pbar());
  SymFunc2 L(ord, seed.deg_p(), seed.deg_pbar());
  for (int n = 1; n <= cap; ++n) {
    SymFunc2 a = seed.adams(n);
    if (a.is_zero()) break;
    L += a.scaled(QSeries::constant(ord, RatFunc(Rational(1, n))));
  }
  SymFunc2 r = SymFunc2::one(ord, seed.deg_p(), seed.deg_pbar()), pk = r;
  for (int k = 1; !pk.is_zero() && k <= cap + 1; ++k) {
    pk = (pk * L).scaled(QSeries::constant(ord, RatFunc(Rational(1, k))));
    r += pk;
    if (k == cap + 1 && !pk.is_zero())
      throw std::logic_error("plet_exp: exponential tail failed to vanish");
  }
  return r;
}

SymFunc2 plet_log(const SymFunc2& body) {
  if (!body.coeff(Partition(), Partition()).coeff(0, 0).is_one())
    throw std::domain_error("plet_log: constant term must be 1");
  Orders ord = body.orders();
  int cap = exp_cap(ord, body.deg_p() + body.deg_pbar());
  SymFunc2 t = body - SymFunc2::one(ord, body.deg_p(), body.deg_pbar());
  SymFunc2 L(ord, body.deg_p(), body.deg_pbar());
  SymFunc2 pk = SymFunc2::one(ord, body.deg_p(), body.deg_pbar());
  for (int k = 1; k <= cap + 1; ++k) {
    pk *= t;
    if (pk.is_zero()) break;
    if (k == cap + 1) throw std::logic_error("plet_log: logarithm tail failed to vanish");
    L += pk.scaled(QSeries::constant(ord, RatFunc(Rational((k % 2) ? 1 : -1, k))));
  }
  SymFunc2 seed(ord, body.deg_p(), body.deg_pbar());
  for (int n = 1; n <= cap; ++n) {
    int m = mobius(n);
    if (m == 0) continue;
    SymFunc2 a = L.adams(n);
    if (a.is_zero() && n > body.deg_p() + body.deg_pbar()) break;
    seed += a.scaled(QSeries::constant(ord, RatFunc(Rational(m, n))));
  }
  return seed;
}

QSeries geom_inv(Orders ord, int a, const Monomial& m) {
  return (QSeries::one(ord) - QSeries::term(ord, a, 0, RatFunc(m))).inverse();
}

bool exp_HHd_check(const Monomial& t, int max_deg) {
  Orders ord{0, 0};
  RatFunc one_minus_tinv =
      RatFunc(1) - RatFunc(t.inverse());
  if (one_minus_tinv.is_zero())
    throw std::domain_error("exp_HHd_check: weight t must be nontrivial");
  SymFunc seed(ord, max_deg);
  seed.add_term(Partition({1}), QSeries::constant(ord, one_minus_tinv.inverse()));
  SymFunc body = plet_exp(seed);

  for (int d = 0; d <= max_deg; ++d) {
    LaurentPoly clear(Rational(1));
    for (int i = 1; i <= d; ++i) {
      LaurentPoly f(Rational(1));
      f.add_term(t.pow(-i), Rational(-1));
      clear *= f;
    }
    for (const auto& mu : enumerate_partitions(d)) {
      // direct route: p_mu coefficient is 1/(z_mu prod_j (1 - t^{-mu_j}))
      RatFunc direct = RatFunc(z_of(mu).inverse());
      for (int p : mu.parts()) {
        LaurentPoly f(Rational(1));
        f.add_term(t.pow(-p), Rational(-1));
        direct /= RatFunc(f);
      }
      if (body.coeff(mu) != QSeries::constant(ord, direct)) return false;
      // normalization: prod_{i<=d} (1 - t^{-i}) clears every denominator
      if (!(direct * RatFunc(clear)).to_polynomial().has_value()) return false;
    }
  }
  return true;
}

}  // namespace kvertex
