#pragma once

#include "json.hpp"
#include "kvertex/checks.hpp"
#include "kvertex/fock.hpp"
#include "kvertex/qseries.hpp"

namespace kvertex {

// JSON forms.  LaurentPoly is an array of [ex2, ey2, ez2, "coeff"] with
// doubled integer exponents; RatFunc wraps two of those; QSeries carries
// its orders and one record per (q, Q) bidegree with the coefficient's
// numerator/denominator in canonical text.  Round trips are bit-exact.
nlohmann::json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const nlohmann::json& j);

nlohmann::json to_json(const RatFunc& f);
RatFunc ratfunc_from_json(const nlohmann::json& j);

nlohmann::json to_json(const QSeries& s);
QSeries qseries_from_json(const nlohmann::json& j);

// Symmetric functions flatten to one record per (partition key, q-degree,
// Q-degree): {p: [parts], pbar: [parts], coeff: {q, Q, num, den}}, ordered
// by (|p|, p, |pbar|, pbar, q, Q) — the canonical partition order.  The
// one-alphabet form drops the pbar field; a kernel wraps the two-alphabet
// list with role labels for its alphabets.
nlohmann::json to_json(const SymFunc& f);
nlohmann::json to_json(const SymFunc2& f);
nlohmann::json to_json(const Kernel& k);

// one verdict record per check suite, suitable for JSON-lines output
nlohmann::json to_json(const Verdict& v);

}  // namespace kvertex
