#pragma once
// Theorem harness: runs every covering/section law the library promises
// against concrete groups and homs, and reports one verdict per (case,
// check).  PASS means the law held, FAIL means a counterexample (with the
// offending values in `detail`), BUDGET means a search gave out, SKIP means
// the case fails the check's hypotheses in a way worth surfacing (most
// vacuous cases simply PASS).

#include <string>
#include <vector>

#include "sectio/catalog.hpp"
#include "sectio/group.hpp"

namespace sectio {

enum class Verdict { Pass, Fail, Budget, Skip };

const char* verdict_name(Verdict v);

struct CheckOutcome {
  std::string subject;  // case key: hom or group name
  std::string check;    // check slug
  Verdict verdict = Verdict::Pass;
  std::string detail;
};

struct VerifyOptions {
  long long hom_budget = kDefaultHomSearchBudget;
  long long cover_budget = kDefaultCoverBudget;
  long long coboundary_budget = kDefaultCoboundaryBudget;
  int jobs = 1;
};

struct VerifyReport {
  std::vector<CheckOutcome> outcomes;  // sorted by (subject, check)
  int pass = 0;
  int fail = 0;
  int budget = 0;
  int skip = 0;
};

// All checks applicable to one hom (plus the per-group checks for its
// domain and codomain).  `name` keys the report rows.
VerifyReport verify_single(const Hom& f, const std::string& name,
                           const VerifyOptions& opts = {});

// Whole-catalog run: per-group checks, per-hom checks, and the pairwise
// laws (fibrewise/pullback/product monotonicity, kernel determination)
// over catalog homs.  Deterministic regardless of opts.jobs.
VerifyReport verify_theorems(const Catalog& catalog,
                             const VerifyOptions& opts = {});

}  // namespace sectio
