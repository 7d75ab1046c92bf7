// Exact minimum set cover, two phases.  Phase 1 proves the minimum size by
// branch-and-bound over dominance-reduced candidates (branching on the
// least-covered element, greedy upper bound, ceiling lower bound).  Phase 2
// re-runs over the original candidate order to extract the lexicographically
// least witness; it may prune any set that covers nothing new, which is sound
// only at the proven minimum size (a minimum cover has no redundant member).
//
// Every covering invariant (σ, σ_c, sec, σ of a hom, poset cover number)
// reduces to this kernel with the non-identity elements as the universe.

#include "sectio/invariants.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>

namespace sectio {

ExtInt ext_min(const ExtInt& a, const ExtInt& b) { return a < b ? a : b; }

const char* reason_name(InfReason r) {
  switch (r) {
    case InfReason::None:
      return "none";
    case InfReason::NotSurjective:
      return "not-surjective";
    case InfReason::CodomainCyclic:
      return "codomain-cyclic";
    case InfReason::DomainCyclicAndValueForcedInfinite:
      return "domain-cyclic-forces-infinite";
    case InfReason::NotLocallySectionable:
      return "not-locally-sectionable";
    case InfReason::NoProperCoverExists:
      return "no-proper-cover-exists";
  }
  return "unknown";
}

namespace {

struct SizeSearch {
  const std::vector<ElemMask>& cands;
  const std::vector<std::vector<int>>& holders;  // element → candidate indices
  const std::vector<int>& elems;
  int max_size;
  int best;
  SearchBudget& budget;

  void dfs(const ElemMask& uncovered, int used) {
    budget.tick("cover search");
    if (uncovered.none()) {
      if (used < best) best = used;
      return;
    }
    int unc = static_cast<int>(uncovered.count());
    if (used + (unc + max_size - 1) / max_size >= best) return;
    int elem = -1;
    std::size_t fewest = SIZE_MAX;
    for (int e : elems)
      if (uncovered.test(e) && holders[e].size() < fewest) {
        fewest = holders[e].size();
        elem = e;
      }
    for (int ci : holders[elem]) dfs(uncovered & ~cands[ci], used + 1);
  }
};

struct WitnessSearch {
  const std::vector<ElemMask>& cands;  // original order, universe-restricted
  const std::vector<ElemMask>& suffix_union;
  int m;
  SearchBudget& budget;
  std::vector<int> chosen;
  std::vector<std::vector<int>>* all_sink = nullptr;  // collect every witness
  std::optional<std::vector<int>> first;

  void dfs(int next, const ElemMask& uncovered) {
    if (static_cast<int>(chosen.size()) == m) {
      if (uncovered.none()) {
        if (all_sink)
          all_sink->push_back(chosen);
        else
          first = chosen;
      }
      return;
    }
    int slots = m - static_cast<int>(chosen.size());
    for (int i = next; i <= static_cast<int>(cands.size()) - slots; ++i) {
      if (first) return;
      budget.tick("cover witness");
      if ((uncovered & ~suffix_union[i]).any()) return;  // shrinks with i
      if ((cands[i] & uncovered).none()) continue;  // must cover something new
      chosen.push_back(i);
      dfs(i + 1, uncovered & ~cands[i]);
      chosen.pop_back();
    }
  }
};

std::vector<ElemMask> restrict_to(const std::vector<ElemMask>& candidates,
                                  const ElemMask& universe) {
  std::vector<ElemMask> out(candidates.size());
  for (std::size_t i = 0; i < candidates.size(); ++i)
    out[i] = candidates[i] & universe;
  return out;
}

bool covers_universe(const std::vector<ElemMask>& restricted,
                     const ElemMask& universe) {
  ElemMask reachable;
  for (const auto& r : restricted) reachable |= r;
  return (universe & ~reachable).none();
}

std::vector<ElemMask> suffix_unions(const std::vector<ElemMask>& restricted) {
  std::vector<ElemMask> out(restricted.size() + 1);
  for (int i = static_cast<int>(restricted.size()) - 1; i >= 0; --i)
    out[i] = out[i + 1] | restricted[i];
  return out;
}

ElemMask nonidentity_universe(const GroupTable& g) {
  ElemMask m;
  for (int a = 1; a < g.order(); ++a) m.set(a);
  return m;
}

int totient(int d) {
  int c = 0;
  for (int k = 1; k <= d; ++k)
    if (std::gcd(k, d) == 1) ++c;
  return c;
}

int least_generator(const GroupTable& g) {
  for (int a = 0; a < g.order(); ++a)
    if (g.elem_order(a) == g.order()) return a;
  return -1;
}

const SubgroupLattice& lattice_for(const GroupPtr& g,
                                   const SubgroupLattice* given,
                                   std::optional<SubgroupLattice>& storage,
                                   const char* what) {
  if (given) {
    if (!given->parent->same_table(*g))
      throw ParentMismatch(std::string(what) +
                           ": lattice belongs to a different group");
    return *given;
  }
  storage.emplace(all_subgroups(g));
  return *storage;
}

}  // namespace

std::optional<MinCover> min_cover(const ElemMask& universe,
                                  const std::vector<ElemMask>& candidates,
                                  long long budget) {
  SearchBudget nodes(budget);
  std::vector<ElemMask> restricted = restrict_to(candidates, universe);
  if (!covers_universe(restricted, universe)) return std::nullopt;
  if (universe.none()) return MinCover{0, {}};

  std::vector<int> elems = members_of_mask(universe);

  // phase 1 over dominance-reduced candidates: dropping a candidate contained
  // in another never changes the minimum size
  std::vector<ElemMask> reduced;
  int ncand = static_cast<int>(restricted.size());
  for (int i = 0; i < ncand; ++i) {
    if (restricted[i].none()) continue;
    bool dominated = false;
    for (int j = 0; j < ncand && !dominated; ++j) {
      if (j == i || (restricted[i] & ~restricted[j]).any()) continue;
      if (restricted[i] != restricted[j] || j < i) dominated = true;
    }
    if (!dominated) reduced.push_back(restricted[i]);
  }

  int max_size = 0;
  for (const auto& r : reduced)
    max_size = std::max(max_size, static_cast<int>(r.count()));

  int ub = 0;
  {
    ElemMask unc = universe;
    while (unc.any()) {
      std::size_t best_count = 0;
      int best = -1;
      for (std::size_t i = 0; i < reduced.size(); ++i) {
        std::size_t c = (reduced[i] & unc).count();
        if (c > best_count) {
          best_count = c;
          best = static_cast<int>(i);
        }
      }
      unc &= ~reduced[best];
      ++ub;
    }
  }

  std::vector<std::vector<int>> holders(kMaxOrderCap);
  for (std::size_t i = 0; i < reduced.size(); ++i)
    for (int e : elems)
      if (reduced[i].test(e)) holders[e].push_back(static_cast<int>(i));

  SizeSearch sizer{reduced, holders, elems, max_size, ub, nodes};
  sizer.dfs(universe, 0);
  int m = sizer.best;

  // phase 2: lexicographically least witness over the original order
  std::vector<ElemMask> suffix = suffix_unions(restricted);
  WitnessSearch ws{restricted, suffix, m, nodes, {}, nullptr, std::nullopt};
  ws.dfs(0, universe);
  if (!ws.first)
    throw Error("min cover: witness search failed to reproduce the minimum");
  return MinCover{m, std::move(*ws.first)};
}

std::vector<std::vector<int>> covers_of_size(
    const ElemMask& universe, const std::vector<ElemMask>& candidates, int m,
    long long budget) {
  SearchBudget nodes(budget);
  std::vector<ElemMask> restricted = restrict_to(candidates, universe);
  if (!covers_universe(restricted, universe)) return {};
  if (universe.none())
    return m == 0 ? std::vector<std::vector<int>>{{}}
                  : std::vector<std::vector<int>>{};
  std::vector<ElemMask> suffix = suffix_unions(restricted);
  std::vector<std::vector<int>> all;
  WitnessSearch ws{restricted, suffix, m, nodes, {}, &all, std::nullopt};
  ws.dfs(0, universe);
  return all;
}

CoverResult sigma(const GroupPtr& g, const SubgroupLattice* lat,
                  long long cover_budget) {
  CoverResult out;
  if (g->is_cyclic()) {
    out.value = ExtInt::infinity();
    out.reason = InfReason::CodomainCyclic;
    out.reason_witness = least_generator(*g);
    return out;
  }
  std::optional<SubgroupLattice> storage;
  const SubgroupLattice& l = lattice_for(g, lat, storage, "sigma");

  std::vector<ElemMask> cands;
  cands.reserve(l.maximal_proper.size());
  for (int i : l.maximal_proper) cands.push_back(l.subgroups[i].mask);
  std::optional<MinCover> mc =
      min_cover(nonidentity_universe(*g), cands, cover_budget);
  if (!mc) {
    out.value = ExtInt::infinity();
    out.reason = InfReason::NoProperCoverExists;
    return out;
  }
  if (mc->size < 3)
    throw Error("sigma: cover of size " + std::to_string(mc->size) +
                " contradicts the minimum of 3 for noncyclic groups");
  out.value = ExtInt::of(mc->size);
  for (int ci : mc->chosen)
    out.witness.push_back(l.subgroups[l.maximal_proper[ci]]);
  return out;
}

SigmaCyclicResult sigma_cyclic(const GroupPtr& g, long long cover_budget) {
  SigmaCyclicResult out;

  std::map<int, int> by_order;
  for (int a = 1; a < g->order(); ++a) ++by_order[g->elem_order(a)];
  for (auto [d, cnt] : by_order) {
    CyclicBoundReport::Row row;
    row.order = d;
    row.elem_count = cnt;
    row.totient = totient(d);
    row.subgroup_count = cnt / row.totient;
    out.report.bound += row.subgroup_count;
    out.report.rows.push_back(row);
  }

  if (g->is_cyclic()) {
    out.cover.value = ExtInt::infinity();
    out.cover.reason = InfReason::CodomainCyclic;
    out.cover.reason_witness = least_generator(*g);
    return out;
  }

  CyclicSubgroups cyc = cyclic_subgroups(g);
  std::vector<ElemMask> cands;
  std::vector<int> owner;
  for (std::size_t i = 0; i < cyc.subgroups.size(); ++i)
    if (cyc.maximal_cyclic[i]) {
      cands.push_back(cyc.subgroups[i].mask);
      owner.push_back(static_cast<int>(i));
    }
  std::optional<MinCover> mc =
      min_cover(nonidentity_universe(*g), cands, cover_budget);
  if (!mc) {
    out.cover.value = ExtInt::infinity();
    out.cover.reason = InfReason::NoProperCoverExists;
    return out;
  }
  out.cover.value = ExtInt::of(mc->size);
  for (int ci : mc->chosen)
    out.cover.witness.push_back(cyc.subgroups[owner[ci]]);
  return out;
}

SectionablePoset sectionable_poset(const Hom& f, const SubgroupLattice* lat,
                                   long long hom_budget,
                                   long long cover_budget) {
  std::optional<SubgroupLattice> storage;
  const SubgroupLattice& l =
      lattice_for(f.codomain, lat, storage, "sectionable poset");

  int count = static_cast<int>(l.subgroups.size());
  std::vector<char> sectionable(count, 0);
  std::vector<std::optional<Hom>> section_of(count);

  // descending canonical order = descending size; a subgroup contained in a
  // known sectionable one inherits a section by restriction and is absorbed
  // without a fresh search.  Maximal elements are never absorbed, so they
  // always carry an explicitly found section.
  for (int i = count - 1; i >= 0; --i) {
    const Subgroup& sub = l.subgroups[i];
    if (!sub.is_proper()) continue;
    bool absorbed = false;
    for (int j = i + 1; j < count && !absorbed; ++j)
      if (sectionable[j] && sub.size() < l.subgroups[j].size() &&
          sub.subset_of(l.subgroups[j]))
        absorbed = true;
    if (absorbed) {
      sectionable[i] = 1;
      continue;
    }
    std::optional<LocalSection> ls = exists_local_section(f, sub, hom_budget);
    if (ls) {
      sectionable[i] = 1;
      section_of[i] = std::move(ls->section);
    }
  }

  SectionablePoset out;
  out.hom = f;
  for (int i = 0; i < count; ++i)
    if (sectionable[i]) {
      out.elements.push_back(l.subgroups[i]);
      out.sections.push_back(std::move(section_of[i]));
    }

  int n = static_cast<int>(out.elements.size());
  for (int x = 0; x < n; ++x) {
    bool maximal = true;
    for (int y = 0; y < n && maximal; ++y)
      if (y != x && out.elements[x].size() < out.elements[y].size() &&
          out.elements[x].subset_of(out.elements[y]))
        maximal = false;
    if (maximal) out.maximal.push_back(x);
  }

  std::vector<ElemMask> cands;
  for (int x : out.maximal) cands.push_back(out.elements[x].mask);
  std::optional<MinCover> mc =
      min_cover(nonidentity_universe(*f.codomain), cands, cover_budget);
  out.cover_number = mc ? ExtInt::of(mc->size) : ExtInt::infinity();
  // a one-element codomain has an empty universe, so the empty cover would
  // win; sec pins every cyclic codomain at infinity, keep the poset in step
  if (f.codomain->order() == 1) out.cover_number = ExtInt::infinity();
  return out;
}

CoverResult sec(const Hom& f, const SubgroupLattice* codomain_lat,
                const SectionablePoset* precomputed, long long hom_budget,
                long long cover_budget) {
  CoverResult out;

  if (!f.is_surjective()) {
    out.value = ExtInt::infinity();
    out.reason = InfReason::NotSurjective;
    std::vector<char> hit(f.codomain->order(), 0);
    for (int v : f.images) hit[v] = 1;
    for (int b = 0; b < f.codomain->order(); ++b)
      if (!hit[b]) {
        out.reason_witness = b;
        break;
      }
    return out;
  }

  if (f.codomain->is_cyclic()) {
    out.value = ExtInt::infinity();
    out.reason = InfReason::CodomainCyclic;
    out.reason_witness = least_generator(*f.codomain);
    return out;
  }

  Sectionability ls = is_locally_sectionable(f);
  if (!ls.ok) {
    out.value = ExtInt::infinity();
    out.reason = InfReason::NotLocallySectionable;
    out.reason_witness = ls.failing;
    return out;
  }

  std::optional<SectionablePoset> storage;
  const SectionablePoset* pos = precomputed;
  if (!pos) {
    storage.emplace(sectionable_poset(f, codomain_lat, hom_budget, cover_budget));
    pos = &*storage;
  } else if (!pos->hom.same_map(f)) {
    throw InvalidParameter("sec: poset belongs to a different hom");
  }

  std::vector<ElemMask> cands;
  for (int x : pos->maximal) cands.push_back(pos->elements[x].mask);
  std::optional<MinCover> mc =
      min_cover(nonidentity_universe(*f.codomain), cands, cover_budget);
  if (!mc) {
    // unreachable: local sectionability plus a noncyclic codomain guarantees
    // the maximal sectionable subgroups cover everything
    out.value = ExtInt::infinity();
    out.reason = InfReason::NoProperCoverExists;
    return out;
  }
  out.value = ExtInt::of(mc->size);
  for (int ci : mc->chosen) {
    int x = pos->maximal[ci];
    if (!pos->sections[x])
      throw InvalidParameter("sec: poset lacks a section for a maximal element");
    out.witness.push_back(pos->elements[x]);
    out.sections.push_back(*pos->sections[x]);
  }
  return out;
}

CoverResult sigma_hom(const Hom& f, const SubgroupLattice* domain_lat,
                      long long hom_budget, long long cover_budget) {
  if (!f.is_surjective())
    throw NotSurjective("sigma of a hom: the map must be surjective");

  CoverResult out;
  if (f.domain->is_cyclic()) {
    out.value = ExtInt::infinity();
    out.reason = InfReason::DomainCyclicAndValueForcedInfinite;
    out.reason_witness = least_generator(*f.domain);
    return out;
  }

  std::optional<SubgroupLattice> storage;
  const SubgroupLattice& l =
      lattice_for(f.domain, domain_lat, storage, "sigma of a hom");
  Subgroup ker = kernel(f);

  // the covering family: proper subgroups strictly containing the kernel
  // whose restriction of f splits over its image
  std::vector<Subgroup> family;
  std::vector<Hom> family_sections;
  for (const Subgroup& sub : l.subgroups) {
    if (!sub.is_proper() || sub.size() <= ker.size()) continue;
    if (!ker.subset_of(sub)) continue;
    EmbeddedGroup emb_sub = as_group(sub);
    Hom f_restricted = compose(f, emb_sub.incl);
    EmbeddedGroup emb_img = as_group(image_subgroup(f, sub));
    HomQuery q;
    q.domain = emb_img.group;
    q.codomain = emb_sub.group;
    q.fiber = FiberConstraint{f_restricted, emb_img.incl};
    q.limit = 1;
    q.budget = hom_budget;
    std::vector<Hom> found = enumerate_homs(q);
    if (!found.empty()) {
      family.push_back(sub);
      family_sections.push_back(compose(emb_sub.incl, found[0]));
    }
  }

  // a minimum cover drawn from the family only needs its maximal members:
  // replacing any member by a maximal family member containing it keeps
  // both the cover and the size
  std::vector<int> maximal;
  for (std::size_t x = 0; x < family.size(); ++x) {
    bool is_max = true;
    for (std::size_t y = 0; y < family.size() && is_max; ++y)
      if (y != x && family[x].size() < family[y].size() &&
          family[x].subset_of(family[y]))
        is_max = false;
    if (is_max) maximal.push_back(static_cast<int>(x));
  }

  std::vector<ElemMask> cands;
  for (int x : maximal) cands.push_back(family[x].mask);
  std::optional<MinCover> mc =
      min_cover(nonidentity_universe(*f.domain), cands, cover_budget);
  if (!mc) {
    out.value = ExtInt::infinity();
    out.reason = InfReason::NoProperCoverExists;
    ElemMask reachable;
    for (const auto& m : cands) reachable |= m;
    for (int a = 1; a < f.domain->order(); ++a)
      if (!reachable.test(a)) {
        out.reason_witness = a;
        break;
      }
    return out;
  }
  out.value = ExtInt::of(mc->size);
  for (int ci : mc->chosen) {
    out.witness.push_back(family[maximal[ci]]);
    out.sections.push_back(family_sections[maximal[ci]]);
  }
  return out;
}

CategoricalCovers enumerate_minimum_covers(const GroupPtr& g,
                                           const SubgroupLattice* lat,
                                           long long cover_budget) {
  if (g->order() > 24)
    throw InvalidParameter("categorical covers: order " +
                           std::to_string(g->order()) + " exceeds 24");
  std::optional<SubgroupLattice> storage;
  const SubgroupLattice& l = lattice_for(g, lat, storage, "categorical covers");

  CategoricalCovers out;
  CoverResult s = sigma(g, &l, cover_budget);
  out.sigma_value = s.value;
  if (s.value.is_inf()) return out;

  std::vector<ElemMask> cands;
  std::vector<int> owner;
  for (int i = 0; i < static_cast<int>(l.subgroups.size()); ++i)
    if (l.subgroups[i].is_proper()) {
      cands.push_back(l.subgroups[i].mask);
      owner.push_back(i);
    }
  std::vector<std::vector<int>> raw = covers_of_size(
      nonidentity_universe(*g), cands, s.value.value, cover_budget);
  for (const auto& cover : raw) {
    std::vector<Subgroup> subs;
    subs.reserve(cover.size());
    for (int ci : cover) subs.push_back(l.subgroups[owner[ci]]);
    out.covers.push_back(std::move(subs));
  }
  return out;
}

}  // namespace sectio
