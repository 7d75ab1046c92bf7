#pragma once
// Deterministic test-bed of small groups and canonical homomorphisms.
//
// Groups are generated family by family (Z, E, D, Q8, S, A, semidirects,
// then pairwise products of everything before the products) and deduplicated
// by multiplication-table value: the first constructor to produce a table
// names it.  A deduplicated product still contributes its projection maps,
// re-targeted at the canonical instance, so e.g. proj(Z(2)xZ(2),0) exists
// even though the group itself is listed as E(2,2).
//
// Homs, in order: quotients by every nontrivial proper normal subgroup
// (generators spelled as the subgroup's non-identity members), product
// projections, and trivial maps onto Z(2) and E(2,2).

#include <string>
#include <vector>

#include "sectio/expr.hpp"
#include "sectio/group.hpp"

namespace sectio {

struct CatalogEntry {
  GroupExpr expr;
  std::string name;  // to_string(expr)
  GroupPtr group;
};

struct CatalogHom {
  HomSpec spec;
  std::string name;  // to_string(spec)
  Hom hom;
};

struct Catalog {
  int max_order = 0;
  std::vector<CatalogEntry> groups;
  std::vector<CatalogHom> homs;
};

// All catalog groups have order <= max_order (and <= order_cap).
Catalog build_catalog(int max_order, int order_cap = kDefaultOrderCap);

}  // namespace sectio
