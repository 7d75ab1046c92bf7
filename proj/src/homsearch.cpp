// Homomorphism search assigns images to a generating sequence of the domain
// and derives everything else.  The generating sequence is chosen greedily
// (largest element order first, ties by index) so that most constraints bind
// early.  Each partial assignment is extended over the closure of the prefix,
// cutting a branch as soon as a derived product conflicts with an earlier
// derivation, a pinned value, or the fiber constraint.

#include "sectio/homsearch.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace sectio {

namespace {

// how each domain element is reached from the generators: generators and the
// identity have how_left = -1, everything else is a product of two elements
// derived earlier.
struct GenPlan {
  std::vector<int> gens;                 // generators in assignment order
  std::vector<int> derive_order;         // all elements, derivation order
  std::vector<int> how_left, how_right;  // product derivation, -1 for gens
  std::vector<int> prefix_end;           // closed prefix length after slot k
};

GenPlan build_plan(const GroupTable& g) {
  int n = g.order();
  GenPlan plan;
  plan.how_left.assign(n, -1);
  plan.how_right.assign(n, -1);

  std::vector<char> have(n, 0);
  have[0] = 1;
  plan.derive_order.push_back(0);

  std::vector<int> by_order(n);
  std::iota(by_order.begin(), by_order.end(), 0);
  std::stable_sort(by_order.begin(), by_order.end(), [&](int a, int b) {
    return g.elem_order(a) > g.elem_order(b);
  });

  while (static_cast<int>(plan.derive_order.size()) < n) {
    int pick = -1;
    for (int a : by_order)
      if (!have[a]) {
        pick = a;
        break;
      }
    plan.gens.push_back(pick);
    have[pick] = 1;
    plan.derive_order.push_back(pick);

    // close the prefix: derive products of known elements until stable
    for (std::size_t i = 0; i < plan.derive_order.size(); ++i)
      for (std::size_t j = 0; j < plan.derive_order.size(); ++j) {
        int c = g.mul(plan.derive_order[i], plan.derive_order[j]);
        if (!have[c]) {
          have[c] = 1;
          plan.how_left[c] = plan.derive_order[i];
          plan.how_right[c] = plan.derive_order[j];
          plan.derive_order.push_back(c);
        }
      }
    plan.prefix_end.push_back(static_cast<int>(plan.derive_order.size()));
  }
  return plan;
}

struct SearchState {
  GroupPtr dom_ptr, cod_ptr;
  const GroupTable* dom;
  const GroupTable* cod;
  const GenPlan* plan;
  std::vector<int> img;  // -1 = unassigned
  std::vector<int> pin;  // -1 = unconstrained
  const std::vector<int>* fiber_through = nullptr;  // through.images
  const std::vector<int>* fiber_target = nullptr;   // target.images
  bool injective = false;
  long long limit;
  SearchBudget* budget;
  std::vector<Hom>* out;

  bool value_allowed(int a, int v) const {
    if (pin[a] >= 0 && pin[a] != v) return false;
    if (fiber_through && (*fiber_through)[v] != (*fiber_target)[a])
      return false;
    return true;
  }
};

// derive images over derive_order[lo..hi); false on constraint conflict
bool derive_segment(SearchState& st, int lo, int hi) {
  for (int i = lo; i < hi; ++i) {
    int c = st.plan->derive_order[i];
    int v = st.cod->mul(st.img[st.plan->how_left[c]],
                        st.img[st.plan->how_right[c]]);
    if (!st.value_allowed(c, v)) return false;
    st.img[c] = v;
  }
  return true;
}

// multiplicativity over the assigned prefix.  Pairs entirely inside the
// previous prefix were checked at the previous slot (prefixes are closed
// under products, so their product image existed then); only pairs touching
// the new segment [lo,hi) need checking.
bool prefix_consistent(const SearchState& st, int lo, int hi) {
  for (int i = 0; i < hi; ++i) {
    int jstart = i >= lo ? 0 : lo;
    for (int j = jstart; j < hi; ++j) {
      int a = st.plan->derive_order[i], b = st.plan->derive_order[j];
      if (st.img[st.dom->mul(a, b)] != st.cod->mul(st.img[a], st.img[b]))
        return false;
    }
  }
  return true;
}

// returns true when the solution limit is reached and the search should stop
bool search(SearchState& st, int slot) {
  int ngens = static_cast<int>(st.plan->gens.size());
  if (slot == ngens) {
    if (st.injective) {
      std::vector<char> hit(st.cod->order(), 0);
      for (int v : st.img) {
        if (hit[v]) return false;
        hit[v] = 1;
      }
    }
    st.out->push_back(Hom::make(st.dom_ptr, st.cod_ptr, st.img));
    return st.out->size() >= static_cast<std::size_t>(st.limit);
  }

  int gen = st.plan->gens[slot];
  int lo = slot == 0 ? 1 : st.plan->prefix_end[slot - 1];
  int hi = st.plan->prefix_end[slot];
  int ord = st.dom->elem_order(gen);

  for (int v = 0; v < st.cod->order(); ++v) {
    st.budget->tick("hom search");
    if (ord % st.cod->elem_order(v) != 0) continue;
    if (!st.value_allowed(gen, v)) continue;

    std::vector<int> saved = st.img;
    st.img[gen] = v;
    if (derive_segment(st, lo + 1, hi) && prefix_consistent(st, lo, hi)) {
      if (search(st, slot + 1)) return true;
    }
    st.img = std::move(saved);
  }
  return false;
}

}  // namespace

std::vector<int> canonical_generators(const GroupTable& g) {
  return build_plan(g).gens;
}

std::vector<Hom> enumerate_homs(const HomQuery& query) {
  if (!query.domain || !query.codomain)
    throw InvalidParameter("hom search: null group");
  GenPlan plan = build_plan(*query.domain);

  SearchState st;
  st.dom_ptr = query.domain;
  st.cod_ptr = query.codomain;
  st.dom = query.domain.get();
  st.cod = query.codomain.get();
  st.plan = &plan;
  st.img.assign(query.domain->order(), -1);
  st.img[0] = 0;
  st.pin.assign(query.domain->order(), -1);
  for (auto [a, v] : query.pinned) {
    if (a < 0 || a >= query.domain->order() || v < 0 ||
        v >= query.codomain->order())
      throw InvalidParameter("hom search: pin out of range");
    if (st.pin[a] >= 0 && st.pin[a] != v) return {};
    st.pin[a] = v;
  }

  if (query.fiber) {
    const Hom& through = query.fiber->through;
    const Hom& target = query.fiber->target;
    if (!through.domain->same_table(*query.codomain))
      throw ParentMismatch("hom search: fiber `through` domain mismatch");
    if (!target.domain->same_table(*query.domain))
      throw ParentMismatch("hom search: fiber `target` domain mismatch");
    if (!through.codomain->same_table(*target.codomain))
      throw CodomainMismatch("hom search: fiber constraint codomain mismatch");
    st.fiber_through = &through.images;
    st.fiber_target = &target.images;
  }

  st.injective = query.require_injective;
  st.limit = query.limit ? static_cast<long long>(*query.limit)
                         : std::numeric_limits<long long>::max();
  if (st.limit <= 0) return {};
  SearchBudget budget{query.budget};
  st.budget = &budget;

  std::vector<Hom> out;
  st.out = &out;
  if (st.value_allowed(0, 0)) search(st, 0);
  return out;
}

std::optional<Hom> hom_from_generator_images(const GroupPtr& domain,
                                             const GroupPtr& codomain,
                                             const std::vector<int>& images,
                                             long long budget) {
  std::vector<int> gens = canonical_generators(*domain);
  if (gens.size() != images.size())
    throw InvalidParameter("generator images: size mismatch");
  HomQuery q;
  q.domain = domain;
  q.codomain = codomain;
  for (std::size_t i = 0; i < gens.size(); ++i)
    q.pinned.emplace_back(gens[i], images[i]);
  q.limit = 1;
  q.budget = budget;
  std::vector<Hom> found = enumerate_homs(q);
  if (found.empty()) return std::nullopt;
  return std::move(found[0]);
}

std::optional<Hom> exists_global_section(const Hom& f, long long budget) {
  if (!f.is_surjective()) return std::nullopt;
  HomQuery q;
  q.domain = f.codomain;
  q.codomain = f.domain;
  // f ∘ s = id as a fiber constraint
  FiberConstraint fc{f, identity_hom(f.codomain)};
  q.fiber = std::move(fc);
  q.limit = 1;
  q.budget = budget;
  std::vector<Hom> found = enumerate_homs(q);
  if (found.empty()) return std::nullopt;
  return std::move(found[0]);
}

std::optional<LocalSection> exists_local_section(const Hom& f,
                                                 const Subgroup& l,
                                                 long long budget) {
  if (!l.parent->same_table(*f.codomain))
    throw ParentMismatch("local section: subgroup lives in a different group");
  EmbeddedGroup emb = as_group(l);
  HomQuery q;
  q.domain = emb.group;
  q.codomain = f.domain;
  // f ∘ s = inclusion of L
  FiberConstraint fc{f, emb.incl};
  q.fiber = std::move(fc);
  q.limit = 1;
  q.budget = budget;
  std::vector<Hom> found = enumerate_homs(q);
  if (found.empty()) return std::nullopt;
  return LocalSection{std::move(emb), std::move(found[0])};
}

Sectionability is_locally_sectionable(const Hom& f) {
  int m = f.codomain->order();
  Sectionability out;
  out.lift.assign(m, -1);
  for (int a = 0; a < f.domain->order(); ++a) {
    int b = f.images[a];
    if (out.lift[b] < 0 &&
        f.domain->elem_order(a) == f.codomain->elem_order(b))
      out.lift[b] = a;
  }
  // first assignment per image wins, and a runs ascending, so each lift
  // entry is the least equal-order preimage
  out.ok = true;
  for (int b = 0; b < m; ++b)
    if (out.lift[b] < 0) {
      out.ok = false;
      out.failing = b;
      break;
    }
  return out;
}

bool is_locally_sectionable_definitional(const Hom& f, long long budget) {
  CyclicSubgroups cyc = cyclic_subgroups(f.codomain);
  // enough to check maximal cyclic subgroups: a section over L restricts to
  // any subgroup of L
  for (std::size_t i = 0; i < cyc.subgroups.size(); ++i) {
    if (!cyc.maximal_cyclic[i]) continue;
    if (!exists_local_section(f, cyc.subgroups[i], budget)) return false;
  }
  return true;
}

std::optional<Hom> exists_fibrewise_morphism(const Hom& f, const Hom& f2,
                                             long long budget) {
  if (!f.codomain->same_table(*f2.codomain))
    throw CodomainMismatch("fibrewise: maps must share a codomain");
  HomQuery q;
  q.domain = f.domain;
  q.codomain = f2.domain;
  // f2 ∘ ψ = f
  FiberConstraint fc{f2, f};
  q.fiber = std::move(fc);
  q.limit = 1;
  q.budget = budget;
  std::vector<Hom> found = enumerate_homs(q);
  if (found.empty()) return std::nullopt;
  return std::move(found[0]);
}

HomGroup hom_group(const GroupPtr& g, const GroupPtr& a, int order_cap,
                   long long budget) {
  if (!a->is_abelian())
    throw NotAbelian("hom group: coefficients must be abelian");
  HomQuery q;
  q.domain = g;
  q.codomain = a;
  q.budget = budget;
  std::vector<Hom> homs = enumerate_homs(q);
  std::sort(homs.begin(), homs.end(),
            [](const Hom& x, const Hom& y) { return x.images < y.images; });
  int n = static_cast<int>(homs.size());
  if (n > order_cap)
    throw OrderCapExceeded("hom group: order " + std::to_string(n) +
                           " exceeds the cap of " + std::to_string(order_cap));
  // pointwise products of homs into an abelian group are homs, and the
  // trivial hom (all zero) is lex-least, so it sits at index 0
  auto index_of = [&](const std::vector<int>& images) {
    int lo = 0, hi = n;
    while (lo < hi) {
      int mid = (lo + hi) / 2;
      if (homs[mid].images < images)
        lo = mid + 1;
      else
        hi = mid;
    }
    return lo;
  };
  std::vector<int> mul(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<int> sum(g->order());
      for (int x = 0; x < g->order(); ++x)
        sum[x] = a->mul(homs[i].images[x], homs[j].images[x]);
      mul[static_cast<std::size_t>(i) * n + j] = index_of(sum);
    }
  GroupPtr hg = GroupTable::create(
      "homs(" + g->label() + "," + a->label() + ")", n, std::move(mul), {},
      order_cap);
  HomGroup out;
  out.base = hg;
  out.source = g;
  out.target = a;
  out.element_homs = std::move(homs);
  return out;
}

Hom evaluation_hom(const HomGroup& hg, int a) {
  if (a < 0 || a >= hg.source->order())
    throw InvalidParameter("evaluation: point out of range");
  std::vector<int> images(hg.base->order());
  for (int i = 0; i < hg.base->order(); ++i)
    images[i] = hg.element_homs[i].images[a];
  return Hom::make(hg.base, hg.target, std::move(images));
}

bool is_h_point(const GroupPtr& g, const GroupPtr& h, int a, long long budget) {
  if (a < 0 || a >= g->order())
    throw InvalidParameter("h-point: element out of range");
  // a is an H-point iff for every b there is a hom pinned by a ↦ b
  for (int b = 0; b < h->order(); ++b) {
    HomQuery q;
    q.domain = g;
    q.codomain = h;
    q.pinned.emplace_back(a, b);
    q.limit = 1;
    q.budget = budget;
    if (enumerate_homs(q).empty()) return false;
  }
  return true;
}

std::optional<Hom> find_isomorphism(const GroupPtr& g, const GroupPtr& h,
                                    long long budget) {
  if (g->order() != h->order()) return std::nullopt;
  {
    // cheap invariants first
    if (g->is_abelian() != h->is_abelian()) return std::nullopt;
    std::vector<int> og, oh;
    for (int x = 0; x < g->order(); ++x) og.push_back(g->elem_order(x));
    for (int x = 0; x < h->order(); ++x) oh.push_back(h->elem_order(x));
    std::sort(og.begin(), og.end());
    std::sort(oh.begin(), oh.end());
    if (og != oh) return std::nullopt;
  }
  HomQuery q;
  q.domain = g;
  q.codomain = h;
  q.require_injective = true;
  q.limit = 1;
  q.budget = budget;
  std::vector<Hom> found = enumerate_homs(q);
  if (found.empty()) return std::nullopt;
  return std::move(found[0]);
}

}  // namespace sectio
