#pragma once

#include <string>
#include <vector>

namespace kvertex {

// Outcome of one named check suite.  detail is a short deterministic
// summary (counts, pinned parameters, recorded variants) and never
// contains timings, so suite output can be compared byte-for-byte
// across runs and worker counts.
struct Verdict {
  std::string suite;
  bool passed = false;
  std::string detail;
};

// Orders a check run works at.  Every suite clamps these up to the
// minima its statement pins (e.g. the one-leg chain needs q-order 5),
// so running "all" always exercises the full criteria no matter what
// the caller passes.
struct CheckOptions {
  int nq = 4;
  int nQ = 2;
  int max_deg = 4;
};

Verdict check_hall_orthogonality(const CheckOptions& opt);
Verdict check_plethystic_exp(const CheckOptions& opt);
Verdict check_localization(const CheckOptions& opt);
Verdict check_refined_limit(const CheckOptions& opt);
Verdict check_one_leg_chain(const CheckOptions& opt);
Verdict check_two_leg_pairing(const CheckOptions& opt);
Verdict check_conifold(const CheckOptions& opt);
Verdict check_q_polynomiality(const CheckOptions& opt);

// canonical suite order, as run by "all"
const std::vector<std::string>& check_suite_names();

// Runs one named suite, or every suite for "all", on a worker pool
// sized by the KVERTEX_THREADS environment variable (default: hardware
// concurrency).  Verdicts come back in canonical order regardless of
// the pool size; a suite that throws is reported as a failed verdict.
// Unknown suite names throw std::invalid_argument.
std::vector<Verdict> run_check_suites(const std::string& suite, const CheckOptions& opt);

// "PASS <suite>: <detail>" or "FAIL <suite>: <detail>"
std::string format_verdict(const Verdict& v);

}  // namespace kvertex
