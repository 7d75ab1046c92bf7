// Catalog construction.  Determinism contract: same max_order → identical
// entry and hom order, names, and tables, independent of platform.
//
// Family order: Z, E, D, Q8, S, A, semidirects, then pairwise products of
// the kept non-product entries (i <= j, order-1 factors skipped).  The first
// table wins on duplicates; a duplicated product still contributes its two
// projections, re-seated on the canonical instance.

#include "sectio/catalog.hpp"

#include <cstdint>
#include <map>
#include <utility>

#include "sectio/subgroup.hpp"

namespace sectio {

namespace {

GroupExpr ge_basic(GroupExpr::Kind kind, int n = 0) {
  GroupExpr e;
  e.kind = kind;
  e.n = n;
  return e;
}

GroupExpr ge_cyclic(int n) { return ge_basic(GroupExpr::Kind::Cyclic, n); }

GroupExpr ge_elem(int p, int k) {
  GroupExpr e;
  e.kind = GroupExpr::Kind::ElementaryAbelian;
  e.p = p;
  e.k = k;
  return e;
}

GroupExpr ge_sd(GroupExpr a, GroupExpr h) {
  GroupExpr e;
  e.kind = GroupExpr::Kind::Semidirect;
  e.children.push_back(std::move(a));
  e.children.push_back(std::move(h));
  e.action = "inv";
  return e;
}

GroupExpr ge_product(GroupExpr a, GroupExpr b) {
  GroupExpr e;
  e.kind = GroupExpr::Kind::Product;
  e.children.push_back(std::move(a));
  e.children.push_back(std::move(b));
  return e;
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

struct Builder {
  int max_order;
  int cap;
  Catalog cat;
  std::map<std::uint64_t, std::vector<int>> by_hash;
  std::vector<CatalogHom> pending_projections;

  int find_same_table(const GroupTable& g) const {
    auto it = by_hash.find(g.table_hash());
    if (it == by_hash.end()) return -1;
    for (int idx : it->second)
      if (cat.groups[idx].group->same_table(g)) return idx;
    return -1;
  }

  // Returns the catalog index holding this table (existing or new).
  int add_group(GroupExpr expr, const GroupPtr& g) {
    int existing = find_same_table(*g);
    if (existing >= 0) return existing;
    int idx = static_cast<int>(cat.groups.size());
    by_hash[g->table_hash()].push_back(idx);
    cat.groups.push_back({expr, to_string(expr), g});
    return idx;
  }

  void add_base_families() {
    for (int n = 1; n <= max_order; ++n)
      add_group(ge_cyclic(n), make_cyclic(n, cap));
    for (int p = 2; p * p <= max_order; ++p) {
      if (!is_prime(p)) continue;
      long long size = static_cast<long long>(p) * p;
      for (int k = 2; size <= max_order; ++k, size *= p)
        add_group(ge_elem(p, k), make_elementary_abelian(p, k, cap));
    }
    for (int n = 1; 2 * n <= max_order; ++n)
      add_group(ge_basic(GroupExpr::Kind::Dihedral, n), make_dihedral(n, cap));
    if (max_order >= 8)
      add_group(ge_basic(GroupExpr::Kind::Quaternion), make_quaternion8(cap));
    for (int n = 3, size = 6; n <= 5 && size <= max_order; ++n, size *= n)
      add_group(ge_basic(GroupExpr::Kind::Symmetric, n),
                make_symmetric(n, cap));
    for (int n = 3, size = 3; n <= 5 && size <= max_order; ++n, size *= n)
      add_group(ge_basic(GroupExpr::Kind::Alternating, n),
                make_alternating(n, cap));
  }

  GroupPtr build_sd(const GroupExpr& e) {
    EvalOptions opts;
    opts.order_cap = cap;
    return eval_group(e, opts);
  }

  void add_semidirects() {
    for (int m = 3; 2 * m <= max_order; ++m) {
      GroupExpr e = ge_sd(ge_cyclic(m), ge_cyclic(2));
      add_group(e, build_sd(e));
    }
    for (int m = 3; 4 * m <= max_order; ++m) {
      GroupExpr e = ge_sd(ge_cyclic(m), ge_cyclic(4));
      add_group(e, build_sd(e));
    }
    for (int p = 3; 2 * p * p <= max_order; p += 2) {
      if (!is_prime(p)) continue;
      GroupExpr e = ge_sd(ge_elem(p, 2), ge_cyclic(2));
      add_group(e, build_sd(e));
    }
  }

  void add_products() {
    int base_count = static_cast<int>(cat.groups.size());
    for (int i = 0; i < base_count; ++i) {
      for (int j = i; j < base_count; ++j) {
        // copies: add_group below may grow cat.groups and move the entries
        GroupExpr ae = cat.groups[i].expr, be = cat.groups[j].expr;
        GroupPtr ag = cat.groups[i].group, bg = cat.groups[j].group;
        if (ag->order() < 2 || bg->order() < 2) continue;
        long long n = static_cast<long long>(ag->order()) * bg->order();
        if (n > max_order) continue;
        ProductGroup pg = make_product(ag, bg, cap);
        GroupExpr e = ge_product(ae, be);
        int idx = add_group(e, pg.group);
        GroupPtr host = cat.groups[idx].group;
        // projections always refer to the canonical instance of the table
        Hom p0 = Hom::make(host, ag, pg.pi1.images);
        Hom p1 = Hom::make(host, bg, pg.pi2.images);
        HomSpec s0, s1;
        s0.kind = s1.kind = HomSpec::Kind::Projection;
        s0.domain = s1.domain = e;
        s0.index = 0;
        s1.index = 1;
        pending_projections.push_back({s0, to_string(s0), p0});
        pending_projections.push_back({s1, to_string(s1), p1});
      }
    }
  }

  void add_quotient_homs() {
    for (const auto& entry : cat.groups) {
      SubgroupLattice lat = all_subgroups(entry.group);
      for (const auto& sub : lat.subgroups) {
        if (!sub.normal || sub.is_trivial() || !sub.is_proper()) continue;
        HomSpec s;
        s.kind = HomSpec::Kind::Quotient;
        s.domain = entry.expr;
        s.data.assign(sub.members.begin() + 1, sub.members.end());
        cat.homs.push_back({s, to_string(s), quotient(entry.group, sub).q});
      }
    }
  }

  void add_trivial_homs() {
    GroupExpr z2 = ge_cyclic(2);
    GroupExpr e22 = ge_elem(2, 2);
    std::vector<std::pair<GroupExpr, GroupPtr>> targets;
    for (const auto& t : {z2, e22}) {
      for (const auto& entry : cat.groups)
        if (entry.expr == t) {
          targets.emplace_back(t, entry.group);
          break;
        }
    }
    for (const auto& entry : cat.groups) {
      for (const auto& [texpr, tgroup] : targets) {
        HomSpec s;
        s.kind = HomSpec::Kind::Trivial;
        s.domain = entry.expr;
        s.codomain = texpr;
        cat.homs.push_back(
            {s, to_string(s), trivial_hom(entry.group, tgroup)});
      }
    }
  }

  Catalog build() {
    cat.max_order = max_order;
    add_base_families();
    add_semidirects();
    add_products();
    add_quotient_homs();
    for (auto& h : pending_projections) cat.homs.push_back(std::move(h));
    add_trivial_homs();
    return std::move(cat);
  }
};

}  // namespace

Catalog build_catalog(int max_order, int order_cap) {
  if (max_order < 1) throw InvalidParameter("catalog: max_order must be >= 1");
  if (max_order > order_cap)
    throw OrderCapExceeded("catalog: max_order " + std::to_string(max_order) +
                           " exceeds order cap " + std::to_string(order_cap));
  Builder b{max_order, order_cap, {}, {}, {}};
  return b.build();
}

}  // namespace sectio
