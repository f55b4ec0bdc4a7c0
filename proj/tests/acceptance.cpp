// Runs the full audit and prints one verdict line per acceptance criterion.
// Failing records are listed on stderr. Exit status 1 if any criterion fails.

#include "heis/audit.hpp"

#include <iostream>

int main() {
  using namespace heis;
  AuditReport rep = run_audit();
  for (int n = 1; n <= kCriterionCount; ++n)
    std::cout << "criterion " << n << " [PRIMARY] " << criterion_title(n) << ": "
              << verdict_name(rep.criterion_verdict(n)) << "\n";
  for (const auto& r : rep.records)
    if (r.verdict == Verdict::Fail)
      std::cerr << "  criterion " << r.criterion << " " << r.claim
                << ": expected " << r.expected << "; computed " << r.computed
                << "\n";
  return rep.any_fail() ? 1 : 0;
}
