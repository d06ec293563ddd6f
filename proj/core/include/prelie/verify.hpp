#pragma once

#include <string>
#include <vector>

namespace prelie {

struct SuiteResult {
  std::string name;
  long checks = 0;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

// Pre-Lie identity, brace symmetry, brace/star consistency, Jacobi.
SuiteResult run_prelie_suite(int max_n, int threads);

// Rule d(a*b) = d(a)*b + a*d(b) + o<a,b> plus the blow-up structure checks.
SuiteResult run_leibniz_suite(int max_n, int threads);

// Commuting square: reduced coproduct after p equals p1 after delta.
SuiteResult run_square_suite(int max_n, int threads);

// Shuffle coalgebra laws, primitives, the free-Lie Lyndon route and the
// kernel characterization verdicts.
SuiteResult run_oracle_suite(int max_n, int threads);

// which: all | square | leibniz | prelie | oracle. Unknown names throw.
std::vector<SuiteResult> run_verification(const std::string& which, int max_n, int threads);

// Deterministic plain-text report, one line per suite plus an overall line.
std::string format_report(const std::vector<SuiteResult>& results);

}  // namespace prelie
