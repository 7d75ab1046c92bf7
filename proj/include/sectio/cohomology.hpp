#pragma once

// Extension 2-cocycles for epimorphisms with abelian kernel, restriction to
// subgroups, coboundary testing, and the cohomological route to sec(f).
//
// Conventions (fixed):
//   transversal   rep(h) = least preimage index, so rep(1) = 1
//   cocycle       w(x,y) = rep(x)·rep(y)·rep(xy)⁻¹, values in the kernel
//   action        h·a    = rep(h)·a·rep(h)⁻¹  (well defined: kernel abelian)
//   coboundary    (δc)(x,y) = x·c(y) − c(xy) + c(x), written additively;
//                 a cocycle is trivial iff it equals some δc with c(1) = 0.

#include <optional>
#include <vector>

#include "sectio/budget.hpp"
#include "sectio/invariants.hpp"
#include "sectio/subgroup.hpp"

namespace sectio {

struct Transversal {
  Hom f;
  std::vector<int> rep;  // codomain element → least preimage
  EmbeddedGroup kernel;
};

struct Cocycle {
  GroupPtr base;   // H, or an embedded subgroup of it after restriction
  GroupPtr coeff;  // the kernel as a group (abelian)
  ActionTable action;
  std::vector<std::vector<int>> values;  // base×base → coeff index, normalized

  // Provenance for the section-oracle fallback: the extension hom and, for a
  // restricted cocycle, the subgroup of the original codomain it lives on.
  std::optional<Hom> src_hom;
  std::optional<Subgroup> src_subgroup;
};

struct ExtensionData {
  Transversal transversal;
  Cocycle cocycle;
};

// Requires f surjective with abelian kernel (KernelNotAbelian otherwise).
ExtensionData build_cocycle(const Hom& f);
// Same, with a caller-chosen transversal (rep[1] must be 1); used to check
// that the cocycle class does not depend on the choice.
ExtensionData build_cocycle_with_transversal(const Hom& f, std::vector<int> rep);

// Restrict to L ≤ base.  Provenance survives one level of restriction.
Cocycle restrict_cocycle(const Cocycle& c, const Subgroup& l);

// Pointwise difference of two cocycles over the same base/coefficients.
Cocycle cocycle_difference(const Cocycle& a, const Cocycle& b);

struct CoboundaryResult {
  bool trivial;
  std::optional<std::vector<int>> cochain;  // c with δc = w, c(1) = 0
  bool via_section_oracle = false;
};

// Decides whether w = δc for some normalized 1-cochain.  The search space is
// the coefficient assignments on a generating sequence of the base (the
// recurrence c(xy) = x·c(y) + c(x) − w(x,y) forces the rest); if that space
// exceeds the budget, falls back to the section oracle through the recorded
// provenance, and throws SearchBudgetExceeded when there is none.
CoboundaryResult is_coboundary(const Cocycle& c,
                               long long budget = kDefaultCoboundaryBudget);

// sec(f) computed by covering the codomain with maximal subgroups on which
// the restricted cocycle becomes a coboundary.  Requires a surjective f with
// abelian kernel.  Witness subgroups only (no sections on this route).
CoverResult sec_via_cohomology(const Hom& f,
                               const SubgroupLattice* codomain_lat = nullptr,
                               long long coboundary_budget = kDefaultCoboundaryBudget,
                               long long cover_budget = kDefaultCoverBudget);

}  // namespace sectio
