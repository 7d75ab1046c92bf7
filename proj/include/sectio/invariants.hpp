#pragma once

// Covering invariants: σ(G), σ_c(G), sec(f), σ(f), the poset of sectionable
// subgroups, and exact minimum set cover underneath them all.
//
// Infinity is a first-class value with a typed reason, and every finite
// answer ships a witness that can be re-validated independently.

#include <optional>
#include <string>
#include <vector>

#include "sectio/budget.hpp"
#include "sectio/homsearch.hpp"
#include "sectio/subgroup.hpp"

namespace sectio {

// ℕ ∪ {∞} with ∞ greater than everything.
struct ExtInt {
  bool inf = true;
  int value = 0;

  static ExtInt infinity() { return ExtInt{}; }
  static ExtInt of(int v) { return ExtInt{false, v}; }

  bool is_inf() const { return inf; }
  friend bool operator==(const ExtInt& a, const ExtInt& b) {
    return a.inf == b.inf && (a.inf || a.value == b.value);
  }
  friend bool operator<(const ExtInt& a, const ExtInt& b) {
    if (a.inf) return false;
    if (b.inf) return true;
    return a.value < b.value;
  }
  friend bool operator<=(const ExtInt& a, const ExtInt& b) {
    return a == b || a < b;
  }
  friend bool operator>(const ExtInt& a, const ExtInt& b) { return b < a; }
  friend bool operator>=(const ExtInt& a, const ExtInt& b) { return b <= a; }
  std::string str() const { return inf ? "infinite" : std::to_string(value); }
};

ExtInt ext_min(const ExtInt& a, const ExtInt& b);

struct MinCover {
  int size;
  std::vector<int> chosen;  // candidate indices, sorted ascending;
                            // lexicographically least among minimum covers
};

// Exact minimum cover of `universe` by the candidate element sets.
// Returns absent iff the candidates do not cover the universe at all.
std::optional<MinCover> min_cover(const ElemMask& universe,
                                  const std::vector<ElemMask>& candidates,
                                  long long budget = kDefaultCoverBudget);

// All covers of `universe` of size exactly m, as sorted index lists in
// lexicographic order.  Sound only for m = the minimum cover size (covers
// with a redundant member cannot occur at the minimum).
std::vector<std::vector<int>> covers_of_size(
    const ElemMask& universe, const std::vector<ElemMask>& candidates, int m,
    long long budget = kDefaultCoverBudget);

enum class InfReason {
  None,
  NotSurjective,
  CodomainCyclic,
  DomainCyclicAndValueForcedInfinite,
  NotLocallySectionable,
  NoProperCoverExists,
};
const char* reason_name(InfReason r);

struct CoverResult {
  ExtInt value;
  std::vector<Subgroup> witness;
  std::vector<Hom> sections;  // aligned with witness where applicable
  InfReason reason = InfReason::None;
  std::optional<int> reason_witness;  // failing element for NotLocallySectionable
};

// Least number of proper subgroups covering G; infinite iff G is cyclic.
CoverResult sigma(const GroupPtr& g, const SubgroupLattice* lat = nullptr,
                  long long cover_budget = kDefaultCoverBudget);

struct CyclicBoundReport {
  struct Row {
    int order;           // element order d ≠ 1
    int elem_count;      // elements of that order
    int totient;         // φ(d)
    int subgroup_count;  // elem_count / φ(d)
  };
  std::vector<Row> rows;
  int bound = 0;  // = number of distinct nontrivial cyclic subgroups
};

struct SigmaCyclicResult {
  CoverResult cover;
  CyclicBoundReport report;
};

// Least number of proper cyclic subgroups covering G, plus the counting bound.
SigmaCyclicResult sigma_cyclic(const GroupPtr& g,
                               long long cover_budget = kDefaultCoverBudget);

// Proper subgroups of the codomain admitting local sections, ordered
// canonically; downward closed by restriction of sections.
struct SectionablePoset {
  Hom hom;
  std::vector<Subgroup> elements;
  std::vector<std::optional<Hom>> sections;  // aligned; present where a
                                             // section was searched directly
                                             // (in particular for all maximal
                                             // elements)
  std::vector<int> maximal;                  // indices into elements
  ExtInt cover_number;                       // min cover by maximal elements
};
SectionablePoset sectionable_poset(const Hom& f,
                                   const SubgroupLattice* lat = nullptr,
                                   long long hom_budget = kDefaultHomSearchBudget,
                                   long long cover_budget = kDefaultCoverBudget);

// Sectional number of f.  Decision ladder:
//   (a) not surjective            → infinite (NotSurjective)
//   (b) cyclic codomain           → infinite (CodomainCyclic)
//   (c) not locally sectionable   → infinite (NotLocallySectionable + witness)
//   (d) otherwise: minimum cover of the codomain by maximal sectionable
//       subgroups, with the sections as witness.
CoverResult sec(const Hom& f, const SubgroupLattice* codomain_lat = nullptr,
                const SectionablePoset* precomputed = nullptr,
                long long hom_budget = kDefaultHomSearchBudget,
                long long cover_budget = kDefaultCoverBudget);

// Covering number of a surjective f by proper subgroups that strictly contain
// the kernel and split over their image.  Witness sections s_i satisfy
// f ∘ s_i = inclusion of f(G_i) and land inside G_i.
CoverResult sigma_hom(const Hom& f, const SubgroupLattice* domain_lat = nullptr,
                      long long hom_budget = kDefaultHomSearchBudget,
                      long long cover_budget = kDefaultCoverBudget);

struct CategoricalCovers {
  ExtInt sigma_value;
  std::vector<std::vector<Subgroup>> covers;  // every minimum cover by proper
                                              // subgroups (not only maximal)
};
// Pre: |G| ≤ 24 (explosion guard).  Infinite sigma yields no covers.
CategoricalCovers enumerate_minimum_covers(const GroupPtr& g,
                                           const SubgroupLattice* lat = nullptr,
                                           long long cover_budget = kDefaultCoverBudget);

}  // namespace sectio
