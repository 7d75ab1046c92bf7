// Conventions (must match the header):
//   rep(h)  least preimage, rep(1) = 1
//   w(x,y)  = rep(x)·rep(y)·rep(xy)⁻¹, stored as kernel-local indices
//   h·a     = rep(h)·a·rep(h)⁻¹ (independent of the rep choice: two reps
//             differ by a kernel element, which centralizes the abelian kernel)
//   δc(x,y) = x·c(y) − c(xy) + c(x), additively in the kernel group
//
// is_coboundary enumerates kernel values on a generating sequence of the
// base; δc = w forces c(xy) = x·c(y) + c(x) − w(x,y), so each assignment
// determines the whole cochain, which is then checked against w on all pairs.

#include "sectio/cohomology.hpp"

#include <algorithm>
#include <array>

namespace sectio {

namespace {

void validate_cocycle(const Cocycle& c) {
  const GroupTable& h = *c.base;
  const GroupTable& a = *c.coeff;
  int nh = h.order();
  for (int x = 0; x < nh; ++x)
    if (c.values[0][x] != 0 || c.values[x][0] != 0)
      throw Error("cocycle: normalization failed");
  for (int x = 0; x < nh; ++x)
    for (int y = 0; y < nh; ++y)
      for (int z = 0; z < nh; ++z) {
        // x·w(y,z) + w(x,yz) == w(xy,z) + w(x,y)
        int lhs = a.mul(c.action(x, c.values[y][z]), c.values[x][h.mul(y, z)]);
        int rhs = a.mul(c.values[h.mul(x, y)][z], c.values[x][y]);
        if (lhs != rhs) throw Error("cocycle: identity failed");
      }
}

std::vector<int> local_index_of(const EmbeddedGroup& emb, int parent_order) {
  std::vector<int> local(parent_order, -1);
  for (int i = 0; i < emb.group->order(); ++i) local[emb.incl.images[i]] = i;
  return local;
}

// derivation schedule: (product, left, right) triples that reach every base
// element from the generating sequence, in dependency order
struct CochainPlan {
  std::vector<int> gens;
  std::vector<std::array<int, 3>> steps;
};

CochainPlan build_cochain_plan(const GroupTable& g) {
  CochainPlan plan;
  plan.gens = canonical_generators(g);
  int n = g.order();
  std::vector<char> have(n, 0);
  have[0] = 1;
  std::vector<int> known{0};
  std::size_t gen_next = 0;
  while (static_cast<int>(known.size()) < n) {
    have[plan.gens[gen_next]] = 1;
    known.push_back(plan.gens[gen_next]);
    ++gen_next;
    for (std::size_t i = 0; i < known.size(); ++i)
      for (std::size_t j = 0; j < known.size(); ++j) {
        int z = g.mul(known[i], known[j]);
        if (!have[z]) {
          have[z] = 1;
          plan.steps.push_back({z, known[i], known[j]});
          known.push_back(z);
        }
      }
  }
  return plan;
}

}  // namespace

ExtensionData build_cocycle_with_transversal(const Hom& f,
                                             std::vector<int> rep) {
  if (!f.is_surjective())
    throw NotSurjective("cocycle: the map must be surjective");
  const GroupTable& g = *f.domain;
  int nh = f.codomain->order();
  if (static_cast<int>(rep.size()) != nh)
    throw InvalidParameter("cocycle: transversal has wrong size");
  for (int h = 0; h < nh; ++h) {
    if (rep[h] < 0 || rep[h] >= g.order() || f.images[rep[h]] != h)
      throw InvalidParameter("cocycle: transversal entry is not a preimage");
  }
  if (rep[0] != 0)
    throw InvalidParameter("cocycle: transversal must map identity to identity");

  Subgroup ker = kernel(f);
  for (int a : ker.members)
    for (int b : ker.members)
      if (g.mul(a, b) != g.mul(b, a))
        throw KernelNotAbelian("cocycle: the kernel is not abelian");
  EmbeddedGroup kg = as_group(ker);
  std::vector<int> local = local_index_of(kg, g.order());

  std::vector<std::vector<int>> act(nh, std::vector<int>(kg.group->order()));
  for (int h = 0; h < nh; ++h)
    for (int i = 0; i < kg.group->order(); ++i)
      act[h][i] =
          local[g.mul(g.mul(rep[h], kg.incl.images[i]), g.inv(rep[h]))];

  Cocycle w;
  w.base = f.codomain;
  w.coeff = kg.group;
  w.action = ActionTable::make(f.codomain, kg.group, std::move(act));
  w.values.assign(nh, std::vector<int>(nh));
  for (int x = 0; x < nh; ++x)
    for (int y = 0; y < nh; ++y) {
      int prod = g.mul(rep[x], rep[y]);
      int v = g.mul(prod, g.inv(rep[f.codomain->mul(x, y)]));
      w.values[x][y] = local[v];
      if (w.values[x][y] < 0)
        throw Error("cocycle: defect fell outside the kernel");
    }
  w.src_hom = f;
  validate_cocycle(w);

  ExtensionData out;
  out.transversal = Transversal{f, std::move(rep), std::move(kg)};
  out.cocycle = std::move(w);
  return out;
}

ExtensionData build_cocycle(const Hom& f) {
  std::vector<int> rep(f.codomain->order(), -1);
  for (int a = 0; a < f.domain->order(); ++a)
    if (rep[f.images[a]] < 0) rep[f.images[a]] = a;
  for (int h = 0; h < f.codomain->order(); ++h)
    if (rep[h] < 0)
      throw NotSurjective("cocycle: the map must be surjective");
  return build_cocycle_with_transversal(f, std::move(rep));
}

Cocycle restrict_cocycle(const Cocycle& c, const Subgroup& l) {
  if (!l.parent->same_table(*c.base))
    throw ParentMismatch("restriction: subgroup lives in a different group");
  EmbeddedGroup emb = as_group(l);
  int n = l.size();

  Cocycle out;
  out.base = emb.group;
  out.coeff = c.coeff;
  std::vector<std::vector<int>> act(n);
  out.values.assign(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i) {
    act[i] = c.action.act[l.members[i]];
    for (int j = 0; j < n; ++j)
      out.values[i][j] = c.values[l.members[i]][l.members[j]];
  }
  out.action = ActionTable::make(emb.group, c.coeff, std::move(act));
  // provenance survives one level: a restriction of the original extension
  // cocycle still knows which subgroup of the original codomain it covers
  if (c.src_hom && !c.src_subgroup) {
    out.src_hom = c.src_hom;
    out.src_subgroup = l;
  }
  return out;
}

Cocycle cocycle_difference(const Cocycle& a, const Cocycle& b) {
  if (!a.base->same_table(*b.base) || !a.coeff->same_table(*b.coeff))
    throw InvalidParameter("cocycle difference: mismatched base or coefficients");
  if (a.action.act != b.action.act)
    throw InvalidParameter("cocycle difference: mismatched actions");
  Cocycle out;
  out.base = a.base;
  out.coeff = a.coeff;
  out.action = a.action;
  int n = a.base->order();
  out.values.assign(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      out.values[x][y] =
          a.coeff->mul(a.values[x][y], a.coeff->inv(b.values[x][y]));
  validate_cocycle(out);
  return out;
}

CoboundaryResult is_coboundary(const Cocycle& c, long long budget) {
  const GroupTable& h = *c.base;
  const GroupTable& a = *c.coeff;
  int nh = h.order(), na = a.order();

  CochainPlan plan = build_cochain_plan(h);
  int k = static_cast<int>(plan.gens.size());

  // |A|^k assignments; overflowing the budget triggers the section oracle
  long long space = 1;
  bool too_big = false;
  for (int i = 0; i < k; ++i) {
    if (space > budget / std::max(na, 1)) {
      too_big = true;
      break;
    }
    space *= na;
  }

  if (too_big) {
    if (c.src_hom && c.src_subgroup) {
      bool ok = exists_local_section(*c.src_hom, *c.src_subgroup, budget)
                    .has_value();
      return CoboundaryResult{ok, std::nullopt, true};
    }
    if (c.src_hom) {
      bool ok = exists_global_section(*c.src_hom, budget).has_value();
      return CoboundaryResult{ok, std::nullopt, true};
    }
    throw SearchBudgetExceeded(
        "coboundary: assignment space exceeds the budget and the cocycle "
        "carries no section oracle");
  }

  SearchBudget nodes(budget);
  std::vector<int> assign(k, 0), cval(nh);
  for (;;) {
    nodes.tick("coboundary search");
    std::fill(cval.begin(), cval.end(), 0);
    for (int i = 0; i < k; ++i) cval[plan.gens[i]] = assign[i];
    // c(xy) = x·c(y) + c(x) − w(x,y)
    for (const auto& [z, x, y] : plan.steps)
      cval[z] = a.mul(a.mul(c.action(x, cval[y]), cval[x]),
                      a.inv(c.values[x][y]));
    bool ok = true;
    for (int x = 0; x < nh && ok; ++x)
      for (int y = 0; y < nh && ok; ++y) {
        int lhs = a.mul(a.mul(c.action(x, cval[y]), a.inv(cval[h.mul(x, y)])),
                        cval[x]);
        if (lhs != c.values[x][y]) ok = false;
      }
    if (ok) return CoboundaryResult{true, cval, false};

    int pos = k - 1;
    while (pos >= 0 && assign[pos] == na - 1) assign[pos--] = 0;
    if (pos < 0) break;
    ++assign[pos];
  }
  return CoboundaryResult{false, std::nullopt, false};
}

CoverResult sec_via_cohomology(const Hom& f,
                               const SubgroupLattice* codomain_lat,
                               long long coboundary_budget,
                               long long cover_budget) {
  ExtensionData ext = build_cocycle(f);  // checks epi + abelian kernel

  CoverResult out;
  if (f.codomain->is_cyclic()) {
    out.value = ExtInt::infinity();
    out.reason = InfReason::CodomainCyclic;
    for (int b = 0; b < f.codomain->order(); ++b)
      if (f.codomain->elem_order(b) == f.codomain->order()) {
        out.reason_witness = b;
        break;
      }
    return out;
  }

  std::optional<SubgroupLattice> storage;
  const SubgroupLattice* lat = codomain_lat;
  if (!lat) {
    storage.emplace(all_subgroups(f.codomain));
    lat = &*storage;
  } else if (!lat->parent->same_table(*f.codomain)) {
    throw ParentMismatch("cohomology: lattice belongs to a different group");
  }

  // top-down with absorption, as for the sectionable poset: if the cocycle
  // restricts to a coboundary on M ⊇ L it does on L too (restrict the cochain)
  int count = static_cast<int>(lat->subgroups.size());
  std::vector<char> trivializing(count, 0);
  for (int i = count - 1; i >= 0; --i) {
    const Subgroup& sub = lat->subgroups[i];
    if (!sub.is_proper()) continue;
    bool absorbed = false;
    for (int j = i + 1; j < count && !absorbed; ++j)
      if (trivializing[j] && sub.size() < lat->subgroups[j].size() &&
          sub.subset_of(lat->subgroups[j]))
        absorbed = true;
    if (absorbed) {
      trivializing[i] = 1;
      continue;
    }
    Cocycle restricted = restrict_cocycle(ext.cocycle, sub);
    if (is_coboundary(restricted, coboundary_budget).trivial)
      trivializing[i] = 1;
  }

  std::vector<int> family;
  for (int i = 0; i < count; ++i)
    if (trivializing[i]) family.push_back(i);
  std::vector<int> maximal;
  for (int x : family) {
    bool is_max = true;
    for (int y : family)
      if (y != x && lat->subgroups[x].size() < lat->subgroups[y].size() &&
          lat->subgroups[x].subset_of(lat->subgroups[y])) {
        is_max = false;
        break;
      }
    if (is_max) maximal.push_back(x);
  }

  ElemMask universe;
  for (int b = 1; b < f.codomain->order(); ++b) universe.set(b);
  std::vector<ElemMask> cands;
  for (int x : maximal) cands.push_back(lat->subgroups[x].mask);
  std::optional<MinCover> mc = min_cover(universe, cands, cover_budget);
  if (!mc) {
    out.value = ExtInt::infinity();
    out.reason = InfReason::NoProperCoverExists;
    ElemMask reachable;
    for (const auto& m : cands) reachable |= m;
    for (int b = 1; b < f.codomain->order(); ++b)
      if (!reachable.test(b)) {
        out.reason_witness = b;
        break;
      }
    return out;
  }
  out.value = ExtInt::of(mc->size);
  for (int ci : mc->chosen) out.witness.push_back(lat->subgroups[maximal[ci]]);
  return out;
}

}  // namespace sectio
