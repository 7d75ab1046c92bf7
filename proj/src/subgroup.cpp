// Subgroup enumeration works by closing the set of cyclic subgroups under
// joins.  Every subgroup is the join of the cyclic subgroups it contains, so
// repeatedly joining known subgroups with cyclic atoms reaches everything.

#include "sectio/subgroup.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace sectio {

namespace {

bool closed_under_mul(const GroupTable& g, const std::vector<int>& members,
                      const ElemMask& mask) {
  for (int a : members)
    for (int b : members)
      if (!mask.test(g.mul(a, b))) return false;
  return true;
}

bool mask_is_normal(const GroupTable& g, const std::vector<int>& members,
                    const ElemMask& mask) {
  for (int x = 0; x < g.order(); ++x)
    for (int a : members)
      if (!mask.test(g.mul(g.mul(x, a), g.inv(x)))) return false;
  return true;
}

ElemMask close_mask(const GroupTable& g, ElemMask seed) {
  seed.set(0);
  std::vector<int> all;
  for (int a = 0; a < g.order(); ++a)
    if (seed.test(a)) all.push_back(a);
  for (std::size_t i = 0; i < all.size(); ++i) {
    int inv = g.inv(all[i]);
    if (!seed.test(inv)) {
      seed.set(inv);
      all.push_back(inv);
    }
    for (std::size_t j = 0; j <= i; ++j)
      for (int c : {g.mul(all[i], all[j]), g.mul(all[j], all[i])}) {
        if (!seed.test(c)) {
          seed.set(c);
          all.push_back(c);
        }
      }
  }
  return seed;
}

ElemMask cyclic_mask(const GroupTable& g, int a) {
  ElemMask m;
  m.set(0);
  int p = a;
  while (p != 0) {
    m.set(p);
    p = g.mul(p, a);
  }
  return m;
}

}  // namespace

std::vector<int> members_of_mask(const ElemMask& mask) {
  std::vector<int> out;
  for (int a = 0; a < kMaxOrderCap; ++a)
    if (mask.test(a)) out.push_back(a);
  return out;
}

ElemMask mask_of_members(const std::vector<int>& members) {
  ElemMask m;
  for (int a : members) m.set(a);
  return m;
}

Subgroup subgroup_from_members(const GroupPtr& g, std::vector<int> members) {
  if (!g) throw InvalidParameter("subgroup: null parent");
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (members.empty() || members[0] != 0)
    throw InvalidParameter("subgroup: must contain the identity (index 0)");
  for (int a : members)
    if (a < 0 || a >= g->order())
      throw InvalidParameter("subgroup: member out of range");
  ElemMask mask = mask_of_members(members);
  for (int a : members)
    if (!mask.test(g->inv(a)))
      throw InvalidParameter("subgroup: not closed under inverses");
  if (!closed_under_mul(*g, members, mask))
    throw InvalidParameter("subgroup: not closed under multiplication");
  Subgroup s;
  s.parent = g;
  s.normal = mask_is_normal(*g, members, mask);
  s.members = std::move(members);
  s.mask = mask;
  return s;
}

Subgroup subgroup_from_mask(const GroupPtr& g, const ElemMask& mask) {
  return subgroup_from_members(g, members_of_mask(mask));
}

Subgroup generated_subgroup(const GroupPtr& g, const std::vector<int>& seed) {
  ElemMask m;
  for (int a : seed) {
    if (a < 0 || a >= g->order())
      throw InvalidParameter("generated subgroup: generator out of range");
    m.set(a);
  }
  return subgroup_from_members(g, members_of_mask(close_mask(*g, m)));
}

Subgroup trivial_subgroup(const GroupPtr& g) {
  return subgroup_from_members(g, {0});
}

Subgroup full_subgroup(const GroupPtr& g) {
  std::vector<int> all(g->order());
  std::iota(all.begin(), all.end(), 0);
  return subgroup_from_members(g, std::move(all));
}

bool subgroup_less(const Subgroup& a, const Subgroup& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.members < b.members;
}

int SubgroupLattice::index_of(const ElemMask& mask) const {
  for (std::size_t i = 0; i < subgroups.size(); ++i)
    if (subgroups[i].mask == mask) return static_cast<int>(i);
  return -1;
}

SubgroupLattice all_subgroups(const GroupPtr& g) {
  int n = g->order();
  std::set<std::vector<int>> seen;
  std::vector<Subgroup> found;
  std::vector<ElemMask> atoms;  // cyclic subgroups, the join generators

  for (int a = 0; a < n; ++a) {
    ElemMask m = cyclic_mask(*g, a);
    std::vector<int> mem = members_of_mask(m);
    if (seen.insert(mem).second) {
      atoms.push_back(m);
      found.push_back(subgroup_from_members(g, std::move(mem)));
    }
  }

  // join-close against atoms only: any subgroup is a join of cyclic atoms,
  // so growing one atom at a time reaches the full lattice
  std::vector<ElemMask> work;
  for (const auto& s : found) work.push_back(s.mask);
  while (!work.empty()) {
    std::vector<ElemMask> next;
    for (const auto& m : work)
      for (const auto& atom : atoms) {
        if ((atom & ~m).none()) continue;
        ElemMask joined = close_mask(*g, m | atom);
        std::vector<int> mem = members_of_mask(joined);
        if (seen.insert(mem).second) {
          next.push_back(joined);
          found.push_back(subgroup_from_members(g, std::move(mem)));
        }
      }
    work = std::move(next);
  }

  std::sort(found.begin(), found.end(), subgroup_less);

  SubgroupLattice lat;
  lat.parent = g;
  lat.subgroups = std::move(found);

  int count = static_cast<int>(lat.subgroups.size());
  for (int i = 0; i < count; ++i) {
    if (!lat.subgroups[i].is_proper()) continue;
    bool maximal = true;
    for (int j = 0; j < count && maximal; ++j)
      if (j != i && lat.subgroups[j].is_proper() &&
          lat.subgroups[i].subset_of(lat.subgroups[j]) &&
          lat.subgroups[i].size() < lat.subgroups[j].size())
        maximal = false;
    if (maximal) lat.maximal_proper.push_back(i);
  }
  return lat;
}

CyclicSubgroups cyclic_subgroups(const GroupPtr& g) {
  int n = g->order();
  std::set<std::vector<int>> seen;
  CyclicSubgroups out;
  for (int a = 0; a < n; ++a) {
    std::vector<int> mem = members_of_mask(cyclic_mask(*g, a));
    if (seen.insert(mem).second)
      out.subgroups.push_back(subgroup_from_members(g, std::move(mem)));
  }
  std::sort(out.subgroups.begin(), out.subgroups.end(), subgroup_less);
  int count = static_cast<int>(out.subgroups.size());
  out.maximal_cyclic.assign(count, true);
  for (int i = 0; i < count; ++i)
    for (int j = 0; j < count; ++j)
      if (j != i && out.subgroups[i].subset_of(out.subgroups[j]) &&
          out.subgroups[i].size() < out.subgroups[j].size()) {
        out.maximal_cyclic[i] = false;
        break;
      }
  return out;
}

Subgroup image_subgroup(const Hom& f, const Subgroup& l) {
  if (!l.parent->same_table(*f.domain))
    throw ParentMismatch("image: subgroup lives in a different group");
  ElemMask m;
  for (int a : l.members) m.set(f.images[a]);
  return subgroup_from_members(f.codomain, members_of_mask(m));
}

Subgroup image_subgroup(const Hom& f) {
  ElemMask m;
  for (int v : f.images) m.set(v);
  return subgroup_from_members(f.codomain, members_of_mask(m));
}

Subgroup preimage_subgroup(const Hom& f, const Subgroup& m) {
  if (!m.parent->same_table(*f.codomain))
    throw ParentMismatch("preimage: subgroup lives in a different group");
  std::vector<int> mem;
  for (int a = 0; a < f.domain->order(); ++a)
    if (m.mask.test(f.images[a])) mem.push_back(a);
  return subgroup_from_members(f.domain, std::move(mem));
}

Subgroup kernel(const Hom& f) {
  std::vector<int> mem;
  for (int a = 0; a < f.domain->order(); ++a)
    if (f.images[a] == 0) mem.push_back(a);
  return subgroup_from_members(f.domain, std::move(mem));
}

EmbeddedGroup as_group(const Subgroup& s) {
  int n = s.size();
  std::vector<int> local_of(s.parent->order(), -1);
  for (int i = 0; i < n; ++i) local_of[s.members[i]] = i;
  std::vector<int> mul(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      mul[static_cast<std::size_t>(i) * n + j] =
          local_of[s.parent->mul(s.members[i], s.members[j])];
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) names[i] = s.parent->name(s.members[i]);
  GroupPtr g = GroupTable::create("sub(" + s.parent->label() + ")", n,
                                  std::move(mul), std::move(names),
                                  kMaxOrderCap);
  EmbeddedGroup out;
  out.group = g;
  out.incl = Hom::make(g, s.parent, s.members);
  return out;
}

StructureInfo structure(const GroupPtr& g) {
  StructureInfo info;
  info.abelian = g->is_abelian();
  info.cyclic = g->is_cyclic();
  info.exponent = g->exponent();
  info.elem_orders.reserve(g->order());
  for (int a = 0; a < g->order(); ++a)
    info.elem_orders.push_back(g->elem_order(a));
  std::vector<int> central;
  for (int a = 0; a < g->order(); ++a) {
    bool ok = true;
    for (int b = 0; b < g->order(); ++b)
      if (g->mul(a, b) != g->mul(b, a)) {
        ok = false;
        break;
      }
    if (ok) central.push_back(a);
  }
  info.center = subgroup_from_members(g, std::move(central));
  return info;
}

QuotientGroup quotient(const GroupPtr& g, const Subgroup& n) {
  if (!n.parent->same_table(*g))
    throw ParentMismatch("quotient: subgroup lives in a different group");
  if (!n.normal) throw NotNormal("quotient: subgroup is not normal");
  int order = g->order();
  // coset of x represented by its least member; visiting x in increasing
  // order means the first unassigned x is the least member of its coset
  std::vector<int> coset_rep(order, -1);
  std::vector<int> reps;
  for (int x = 0; x < order; ++x) {
    if (coset_rep[x] >= 0) continue;
    for (int a : n.members) coset_rep[g->mul(x, a)] = x;
    reps.push_back(x);
  }
  int q = static_cast<int>(reps.size());
  std::vector<int> index_of_rep(order, -1);
  for (int i = 0; i < q; ++i) index_of_rep[reps[i]] = i;
  std::vector<int> proj(order);
  for (int x = 0; x < order; ++x) proj[x] = index_of_rep[coset_rep[x]];
  std::vector<int> mul(static_cast<std::size_t>(q) * q);
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j)
      mul[static_cast<std::size_t>(i) * q + j] = proj[g->mul(reps[i], reps[j])];
  std::vector<std::string> names(q);
  for (int i = 0; i < q; ++i) names[i] = "[" + g->name(reps[i]) + "]";
  GroupPtr qg = GroupTable::create("quot(" + g->label() + ")", q,
                                   std::move(mul), std::move(names),
                                   kMaxOrderCap);
  QuotientGroup out;
  out.group = qg;
  out.q = Hom::make(g, qg, std::move(proj));
  return out;
}

FiberProduct fiber_product(const Hom& f, const Hom& g) {
  if (!f.codomain->same_table(*g.codomain))
    throw CodomainMismatch("fiber product: maps must share a codomain");
  FiberProduct out;
  out.ambient = make_product(g.domain, f.domain, kMaxOrderCap);
  int ng = f.domain->order();
  std::vector<int> mem;
  for (int x = 0; x < out.ambient.group->order(); ++x)
    if (g.images[x / ng] == f.images[x % ng]) mem.push_back(x);
  out.sub = subgroup_from_members(out.ambient.group, std::move(mem));
  out.fiber = as_group(out.sub);
  out.to_k = compose(out.ambient.pi1, out.fiber.incl);
  out.to_g = compose(out.ambient.pi2, out.fiber.incl);
  return out;
}

}  // namespace sectio
