#pragma once

// Backtracking enumeration of homomorphisms and everything built on it:
// local/global sections, local sectionability, fibrewise morphisms,
// hom-groups into abelian targets, evaluation maps, H-points, isomorphisms.
//
// The search assigns images to a canonical generating sequence (greedy by
// descending element order, ties broken by index), extending each partial
// assignment over the closure of the prefix and validating multiplicativity
// incrementally.  Candidates are tried in ascending index order, so the first
// solution is the lexicographically least generator-image tuple.

#include <optional>
#include <utility>
#include <vector>

#include "sectio/budget.hpp"
#include "sectio/subgroup.hpp"

namespace sectio {

struct FiberConstraint {
  Hom through;  // from the query codomain
  Hom target;   // from the query domain, into through.codomain
};

struct HomQuery {
  GroupPtr domain;
  GroupPtr codomain;
  std::vector<std::pair<int, int>> pinned;  // element → required image
  std::optional<FiberConstraint> fiber;     // through ∘ s = target
  std::optional<int> limit;                 // stop after this many solutions
  long long budget = kDefaultHomSearchBudget;
  bool require_injective = false;
};

// All homs matching the query, in lexicographic generator-image order.
// Inconsistent pins (image order not dividing element order) simply yield
// no solutions.
std::vector<Hom> enumerate_homs(const HomQuery& query);

// Greedy generating sequence: repeatedly the element of largest order
// (smallest index on ties) outside the closure so far.
std::vector<int> canonical_generators(const GroupTable& g);

// The unique hom extending the given images of canonical_generators(domain),
// if those images define one.
std::optional<Hom> hom_from_generator_images(const GroupPtr& domain,
                                             const GroupPtr& codomain,
                                             const std::vector<int>& images,
                                             long long budget = kDefaultHomSearchBudget);

struct LocalSection {
  EmbeddedGroup emb;  // L as a group, with inclusion into H
  Hom section;        // L-group → G, satisfying f ∘ section = emb.incl
};

// Least local section of f over L ≤ codomain(f), if any.
std::optional<LocalSection> exists_local_section(
    const Hom& f, const Subgroup& l, long long budget = kDefaultHomSearchBudget);

// Section of all of f: s with f ∘ s = id.
std::optional<Hom> exists_global_section(const Hom& f,
                                         long long budget = kDefaultHomSearchBudget);

struct Sectionability {
  bool ok;
  std::vector<int> lift;  // per codomain element, a preimage of equal order (-1 if none)
  int failing = -1;       // least codomain element with no equal-order preimage
};

// Order-matching-lift criterion: f is locally sectionable iff every codomain
// element has a preimage of the same order.
Sectionability is_locally_sectionable(const Hom& f);

// Definitional form (every non-identity b lies in some subgroup over which a
// local section exists); used to cross-check the criterion on small inputs.
bool is_locally_sectionable_definitional(const Hom& f,
                                         long long budget = kDefaultHomSearchBudget);

// ψ: domain(f) → domain(f2) with f2 ∘ ψ = f, for f, f2 over the same codomain.
std::optional<Hom> exists_fibrewise_morphism(const Hom& f, const Hom& f2,
                                             long long budget = kDefaultHomSearchBudget);

// Hom(G, A) for abelian A as a group under pointwise product.  Element homs
// are sorted by image table, so the trivial hom is index 0 (the identity).
struct HomGroup {
  GroupPtr base;
  GroupPtr source;  // G
  GroupPtr target;  // A
  std::vector<Hom> element_homs;
};
HomGroup hom_group(const GroupPtr& g, const GroupPtr& a,
                   int order_cap = kDefaultOrderCap,
                   long long budget = kDefaultHomSearchBudget);

// Evaluation at a: HomGroup base → A, f ↦ f(a).
Hom evaluation_hom(const HomGroup& hg, int a);

// Whether every element of H is hit at `a` by some hom G → H.
bool is_h_point(const GroupPtr& g, const GroupPtr& h, int a,
                long long budget = kDefaultHomSearchBudget);

std::optional<Hom> find_isomorphism(const GroupPtr& g, const GroupPtr& h,
                                    long long budget = kDefaultHomSearchBudget);

}  // namespace sectio
