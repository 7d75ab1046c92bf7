#pragma once

// Subgroups of a fixed parent group, their lattice, and the group
// constructions that consume subgroups (quotients, fiber products,
// subgroup-as-group embeddings).
//
// Canonical form everywhere: a subgroup is its sorted member list (index 0,
// the identity, always first); lists of subgroups are sorted by size and then
// lexicographically by member list.

#include <optional>
#include <string>
#include <vector>

#include "sectio/group.hpp"

namespace sectio {

struct Subgroup {
  GroupPtr parent;
  std::vector<int> members;  // sorted ascending, members[0] == 0
  ElemMask mask;
  bool normal = false;  // computed at construction

  int size() const { return static_cast<int>(members.size()); }
  bool is_proper() const { return size() < parent->order(); }
  bool is_trivial() const { return size() == 1; }
  bool contains(int a) const { return mask.test(a); }
  bool subset_of(const Subgroup& other) const {
    return (mask & ~other.mask).none();
  }
  bool same_set(const Subgroup& other) const { return mask == other.mask; }
};

// Validates closure; throws InvalidParameter otherwise.
Subgroup subgroup_from_members(const GroupPtr& g, std::vector<int> members);
Subgroup subgroup_from_mask(const GroupPtr& g, const ElemMask& mask);
Subgroup generated_subgroup(const GroupPtr& g, const std::vector<int>& seed);
Subgroup trivial_subgroup(const GroupPtr& g);
Subgroup full_subgroup(const GroupPtr& g);

// members-lex order used for all canonical subgroup lists
bool subgroup_less(const Subgroup& a, const Subgroup& b);

struct SubgroupLattice {
  GroupPtr parent;
  std::vector<Subgroup> subgroups;   // canonical order (size, then lex)
  std::vector<int> maximal_proper;   // indices into subgroups

  bool leq(int i, int j) const {
    return subgroups[i].subset_of(subgroups[j]);
  }
  int index_of(const ElemMask& mask) const;
};

// All subgroups, computed as the join-closure of the cyclic subgroups.
SubgroupLattice all_subgroups(const GroupPtr& g);

struct CyclicSubgroups {
  std::vector<Subgroup> subgroups;   // canonical order, includes the trivial one
  std::vector<bool> maximal_cyclic;  // aligned: maximal among cyclic subgroups
};
CyclicSubgroups cyclic_subgroups(const GroupPtr& g);

Subgroup image_subgroup(const Hom& f, const Subgroup& l);
Subgroup image_subgroup(const Hom& f);  // image of the whole domain
Subgroup preimage_subgroup(const Hom& f, const Subgroup& m);
Subgroup kernel(const Hom& f);

// A subgroup reindexed as a group of its own, with the inclusion hom.
// member i of the embedded group is emb.incl.images[i] in the parent.
struct EmbeddedGroup {
  GroupPtr group;
  Hom incl;
};
EmbeddedGroup as_group(const Subgroup& s);

struct StructureInfo {
  bool abelian;
  bool cyclic;
  int exponent;
  Subgroup center;
  std::vector<int> elem_orders;
};
StructureInfo structure(const GroupPtr& g);

struct QuotientGroup {
  GroupPtr group;  // cosets ordered by minimal representative
  Hom q;
};
QuotientGroup quotient(const GroupPtr& g, const Subgroup& n);

// Pullback of f: G→H and g: K→H inside K×G: pairs (a, b) with g(a) = f(b).
struct FiberProduct {
  ProductGroup ambient;  // K×G
  Subgroup sub;
  EmbeddedGroup fiber;
  Hom to_k;  // fiber → K
  Hom to_g;  // fiber → G; satisfies f ∘ to_g = g ∘ to_k
};
FiberProduct fiber_product(const Hom& f, const Hom& g);

std::vector<int> members_of_mask(const ElemMask& mask);
ElemMask mask_of_members(const std::vector<int>& members);

}  // namespace sectio
