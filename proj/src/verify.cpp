// Theorem harness.
//
// Three phases: facts about every distinct group table (lattice, sigma,
// sigma_c, minimum covers, Klein-quotient existence), facts about every hom
// (sec, poset, sigma_hom, global section, kernel), then the checks — per
// group, per hom, and pairwise.  Facts are computed once and shared; with
// jobs > 1 the per-item facts are computed on worker threads, but rows are
// assembled in a fixed order and sorted at the end, so the report does not
// depend on the thread count.
//
// A check body returns PASS/FAIL/SKIP; budget exhaustion inside a body is
// caught and reported as BUDGET for that row alone.

#include "sectio/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "sectio/cohomology.hpp"
#include "sectio/invariants.hpp"

namespace sectio {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return "PASS";
    case Verdict::Fail:
      return "FAIL";
    case Verdict::Budget:
      return "BUDGET";
    case Verdict::Skip:
      return "SKIP";
  }
  return "?";
}

namespace {

using Res = std::pair<Verdict, std::string>;

Res pass(std::string d = "") { return {Verdict::Pass, std::move(d)}; }
Res fail(std::string d) { return {Verdict::Fail, std::move(d)}; }
Res skipped(std::string d) { return {Verdict::Skip, std::move(d)}; }

std::string two(const char* a, const ExtInt& x, const char* b,
                const ExtInt& y) {
  return std::string(a) + "=" + x.str() + ", " + b + "=" + y.str();
}

ElemMask nonidentity(const GroupPtr& g) {
  ElemMask m;
  for (int i = 1; i < g->order(); ++i) m.set(i);
  return m;
}

bool kernel_is_abelian(const GroupPtr& g, const Subgroup& ker) {
  for (int a : ker.members)
    for (int b : ker.members)
      if (g->mul(a, b) != g->mul(b, a)) return false;
  return true;
}

struct GroupFacts {
  GroupPtr g;
  SubgroupLattice lat;
  CoverResult sigma_r;
  SigmaCyclicResult sigma_c;
  std::optional<CategoricalCovers> covers;  // noncyclic, order <= 24
  bool onto_klein = false;
  std::string error;
  bool budget_error = false;
};

struct HomFacts {
  Hom f;
  std::string name;
  bool epi = false;
  Subgroup ker;
  bool ker_abelian = false;
  Sectionability ls;
  std::optional<Hom> global;
  CoverResult sec_r;
  std::optional<SectionablePoset> poset;
  std::optional<CoverResult> sighom_r;
  std::string error;
  bool budget_error = false;
};

void run_in_parallel(int n, int jobs, const std::function<void(int)>& fn) {
  jobs = std::min(jobs, n);
  if (jobs <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> workers;
  workers.reserve(jobs);
  for (int t = 0; t < jobs; ++t)
    workers.emplace_back([&] {
      for (int i = next++; i < n; i = next++) fn(i);
    });
  for (auto& w : workers) w.join();
}

struct Harness {
  VerifyOptions opt;
  // keyed by table hash; the inner vector guards against hash collisions
  std::map<std::uint64_t, std::vector<GroupFacts>> group_facts;
  std::vector<HomFacts> hom_facts;
  std::vector<CheckOutcome> rows;

  const GroupFacts* find_facts(const GroupPtr& g) const {
    auto it = group_facts.find(g->table_hash());
    if (it == group_facts.end()) return nullptr;
    for (const auto& gf : it->second)
      if (gf.g->same_table(*g)) return &gf;
    return nullptr;
  }

  // ---- facts -------------------------------------------------------------

  GroupFacts compute_group_facts(const GroupPtr& g) const {
    GroupFacts gf;
    gf.g = g;
    try {
      gf.lat = all_subgroups(g);
      gf.sigma_r = sigma(g, &gf.lat, opt.cover_budget);
      gf.sigma_c = sigma_cyclic(g, opt.cover_budget);
      if (!g->is_cyclic() && g->order() <= 24)
        gf.covers = enumerate_minimum_covers(g, &gf.lat, opt.cover_budget);
      for (const auto& n : gf.lat.subgroups) {
        if (!n.normal || 4 * n.size() != g->order()) continue;
        if (!quotient(g, n).group->is_cyclic()) {
          gf.onto_klein = true;
          break;
        }
      }
    } catch (const SearchBudgetExceeded& e) {
      gf.error = e.what();
      gf.budget_error = true;
    } catch (const std::exception& e) {
      gf.error = e.what();
    }
    return gf;
  }

  void gather_group_facts(const Catalog& cat,
                          const std::vector<std::pair<Hom, std::string>>& homs) {
    std::vector<GroupPtr> keys;
    auto want = [&](const GroupPtr& g) {
      for (const auto& k : keys)
        if (k->same_table(*g)) return;
      keys.push_back(g);
    };
    for (const auto& e : cat.groups) want(e.group);
    for (const auto& [f, name] : homs) {
      want(f.domain);
      want(f.codomain);
    }
    std::vector<GroupFacts> slots(keys.size());
    run_in_parallel(static_cast<int>(keys.size()), opt.jobs,
                    [&](int i) { slots[i] = compute_group_facts(keys[i]); });
    for (auto& gf : slots)
      group_facts[gf.g->table_hash()].push_back(std::move(gf));
  }

  HomFacts compute_hom_facts(const Hom& f, const std::string& name) const {
    HomFacts hf;
    hf.f = f;
    hf.name = name;
    try {
      hf.epi = f.is_surjective();
      hf.ker = kernel(f);
      hf.ker_abelian = kernel_is_abelian(f.domain, hf.ker);
      if (hf.epi) {
        const GroupFacts* gfh = find_facts(f.codomain);
        const GroupFacts* gfd = find_facts(f.domain);
        hf.ls = is_locally_sectionable(f);
        hf.global = exists_global_section(f, opt.hom_budget);
        hf.poset = sectionable_poset(f, gfh ? &gfh->lat : nullptr,
                                     opt.hom_budget, opt.cover_budget);
        hf.sec_r = sec(f, gfh ? &gfh->lat : nullptr, &*hf.poset,
                       opt.hom_budget, opt.cover_budget);
        hf.sighom_r = sigma_hom(f, gfd ? &gfd->lat : nullptr, opt.hom_budget,
                                opt.cover_budget);
      } else {
        hf.sec_r = sec(f, nullptr, nullptr, opt.hom_budget, opt.cover_budget);
      }
    } catch (const SearchBudgetExceeded& e) {
      hf.error = e.what();
      hf.budget_error = true;
    } catch (const std::exception& e) {
      hf.error = e.what();
    }
    return hf;
  }

  // ---- row plumbing -------------------------------------------------------

  void emit(const std::string& subject, const std::string& check, Res r) {
    rows.push_back({subject, check, r.first, std::move(r.second)});
  }

  template <class Fn>
  void run_check(const std::string& subject, const std::string& check,
                 Fn&& fn) {
    try {
      emit(subject, check, fn());
    } catch (const SearchBudgetExceeded& e) {
      emit(subject, check, {Verdict::Budget, e.what()});
    } catch (const std::exception& e) {
      emit(subject, check, fail(std::string("error: ") + e.what()));
    }
  }

  // ---- per-group checks ---------------------------------------------------

  void group_checks(const std::string& subject, const GroupFacts& gf) {
    static const char* kGroupChecks[] = {"sec-identity", "sigma-three-klein-epi",
                                         "cyclic-bound", "poset-cover"};
    if (!gf.error.empty()) {
      for (const char* c : kGroupChecks)
        emit(subject, c,
             {gf.budget_error ? Verdict::Budget : Verdict::Fail, gf.error});
      return;
    }
    const GroupPtr& g = gf.g;

    run_check(subject, "sec-identity", [&]() -> Res {
      Hom idg = identity_hom(g);
      SectionablePoset ps =
          sectionable_poset(idg, &gf.lat, opt.hom_budget, opt.cover_budget);
      CoverResult r =
          sec(idg, &gf.lat, &ps, opt.hom_budget, opt.cover_budget);
      if (r.value == gf.sigma_r.value)
        return pass(two("sec(id)", r.value, "sigma", gf.sigma_r.value));
      return fail(two("sec(id)", r.value, "sigma", gf.sigma_r.value));
    });

    run_check(subject, "poset-cover", [&]() -> Res {
      Hom idg = identity_hom(g);
      SectionablePoset ps =
          sectionable_poset(idg, &gf.lat, opt.hom_budget, opt.cover_budget);
      if (ps.cover_number == gf.sigma_r.value)
        return pass(two("poset", ps.cover_number, "sigma", gf.sigma_r.value));
      return fail(two("poset", ps.cover_number, "sigma", gf.sigma_r.value));
    });

    run_check(subject, "sigma-three-klein-epi", [&]() -> Res {
      bool three = gf.sigma_r.value == ExtInt::of(3);
      if (three == gf.onto_klein)
        return pass(std::string("sigma=") + gf.sigma_r.value.str() +
                    ", klein quotient " + (gf.onto_klein ? "yes" : "no"));
      return fail(std::string("sigma=") + gf.sigma_r.value.str() +
                  " but klein quotient " + (gf.onto_klein ? "yes" : "no"));
    });

    run_check(subject, "cyclic-bound", [&]() -> Res {
      const ExtInt& s = gf.sigma_r.value;
      const ExtInt& sc = gf.sigma_c.cover.value;
      if (g->is_cyclic()) {
        if (s.is_inf() && sc.is_inf()) return pass("cyclic, both infinite");
        return fail(two("sigma", s, "sigma_c", sc));
      }
      if (!(sc >= s)) return fail(two("sigma_c", sc, "sigma", s));
      if (!(s >= ExtInt::of(3))) return fail("sigma=" + s.str() + " < 3");
      if (sc.is_inf() || sc.value > gf.sigma_c.report.bound)
        return fail("sigma_c=" + sc.str() + " exceeds bound " +
                    std::to_string(gf.sigma_c.report.bound));
      return pass(two("sigma", s, "sigma_c", sc) + ", bound " +
                  std::to_string(gf.sigma_c.report.bound));
    });
  }

  // ---- per-hom checks -----------------------------------------------------

  void hom_checks(const HomFacts& hf) {
    const std::string& subject = hf.name;
    static const char* kHomChecks[] = {
        "sec-vs-sigma-codomain", "split-implies-sigma", "quotient-equivalence",
        "sigma-hom-equality",    "upper-bound-cyclic",  "finiteness",
        "poset-cover",           "categorical-lower-bound", "maximal-oracle",
        "coboundary-section",    "cohomology-sec"};
    if (!hf.error.empty()) {
      for (const char* c : kHomChecks)
        emit(subject, c,
             {hf.budget_error ? Verdict::Budget : Verdict::Fail, hf.error});
      return;
    }
    const GroupPtr& G = hf.f.domain;
    const GroupPtr& H = hf.f.codomain;
    const GroupFacts* gfh = find_facts(H);
    const GroupFacts* gfd = find_facts(G);
    if (!gfh || !gfd || !gfh->error.empty() || !gfd->error.empty()) {
      std::string why = "group facts unavailable";
      bool budget = (gfh && gfh->budget_error) || (gfd && gfd->budget_error);
      if (gfh && !gfh->error.empty()) why = gfh->error;
      if (gfd && !gfd->error.empty()) why = gfd->error;
      for (const char* c : kHomChecks)
        emit(subject, c, {budget ? Verdict::Budget : Verdict::Fail, why});
      return;
    }

    run_check(subject, "sec-vs-sigma-codomain", [&]() -> Res {
      if (!(hf.sec_r.value >= gfh->sigma_r.value))
        return fail(two("sec", hf.sec_r.value, "sigma(H)", gfh->sigma_r.value));
      if (hf.epi && !(gfh->sigma_r.value >= gfd->sigma_r.value))
        return fail(
            two("sigma(H)", gfh->sigma_r.value, "sigma(G)", gfd->sigma_r.value));
      return pass(two("sec", hf.sec_r.value, "sigma(H)", gfh->sigma_r.value));
    });

    if (!hf.epi) return;

    run_check(subject, "split-implies-sigma", [&]() -> Res {
      if (!hf.global) return pass("no global section");
      if (hf.sec_r.value == gfh->sigma_r.value)
        return pass(two("sec", hf.sec_r.value, "sigma(H)", gfh->sigma_r.value));
      return fail(two("sec", hf.sec_r.value, "sigma(H)", gfh->sigma_r.value));
    });

    run_check(subject, "quotient-equivalence", [&]() -> Res {
      Hom q = quotient(G, hf.ker).q;
      CoverResult rq = sec(q, nullptr, nullptr, opt.hom_budget,
                           opt.cover_budget);
      if (rq.value == hf.sec_r.value)
        return pass(two("sec(f)", hf.sec_r.value, "sec(q)", rq.value));
      return fail(two("sec(f)", hf.sec_r.value, "sec(q)", rq.value));
    });

    run_check(subject, "sigma-hom-equality", [&]() -> Res {
      const ExtInt& sh = hf.sighom_r->value;
      if (!(hf.sec_r.value >= sh))
        return fail(two("sec", hf.sec_r.value, "sigma(f)", sh));
      if (!hf.global && !(hf.sec_r.value == sh))
        return fail("no global section but " +
                    two("sec", hf.sec_r.value, "sigma(f)", sh));
      return pass(two("sec", hf.sec_r.value, "sigma(f)", sh));
    });

    run_check(subject, "upper-bound-cyclic", [&]() -> Res {
      if (!hf.ls.ok) return pass("not locally sectionable");
      const ExtInt& sc = gfh->sigma_c.cover.value;
      if (!(hf.sec_r.value <= sc))
        return fail(two("sec", hf.sec_r.value, "sigma_c(H)", sc));
      if (gfh->sigma_r.value == sc && !(hf.sec_r.value == gfh->sigma_r.value))
        return fail("sigma(H)=sigma_c(H) but " +
                    two("sec", hf.sec_r.value, "sigma(H)", gfh->sigma_r.value));
      return pass(two("sec", hf.sec_r.value, "sigma_c(H)", sc));
    });

    run_check(subject, "finiteness", [&]() -> Res {
      bool finite = !hf.sec_r.value.is_inf();
      bool expect = !H->is_cyclic() && hf.ls.ok;
      if (finite == expect)
        return pass(std::string("sec ") + (finite ? "finite" : "infinite"));
      return fail(std::string("sec=") + hf.sec_r.value.str() +
                  " but codomain " + (H->is_cyclic() ? "cyclic" : "noncyclic") +
                  ", " + (hf.ls.ok ? "LS" : "not LS"));
    });

    run_check(subject, "poset-cover", [&]() -> Res {
      if (!(hf.poset->cover_number == hf.sec_r.value))
        return fail(
            two("poset", hf.poset->cover_number, "sec", hf.sec_r.value));
      if (!hf.sec_r.value.is_inf()) {
        if (static_cast<int>(hf.sec_r.witness.size()) != hf.sec_r.value.value)
          return fail("witness size mismatch");
        if (hf.sec_r.sections.size() != hf.sec_r.witness.size())
          return fail("sections not aligned with witness");
      }
      return pass(two("poset", hf.poset->cover_number, "sec", hf.sec_r.value));
    });

    run_check(subject, "categorical-lower-bound", [&]() -> Res {
      if (H->is_cyclic() || H->order() > 24 || !gfh->covers)
        return pass("not applicable");
      std::vector<ElemMask> sectionable;
      for (const auto& e : hf.poset->elements) sectionable.push_back(e.mask);
      auto is_sectionable = [&](const ElemMask& m) {
        return std::find(sectionable.begin(), sectionable.end(), m) !=
               sectionable.end();
      };
      bool every_cover_blocked = true;
      for (const auto& cover : gfh->covers->covers) {
        bool blocked = false;
        for (const auto& s : cover)
          if (!is_sectionable(s.mask)) {
            blocked = true;
            break;
          }
        if (!blocked) {
          every_cover_blocked = false;
          break;
        }
      }
      bool strict = hf.sec_r.value > gfh->sigma_r.value;
      if (strict == every_cover_blocked)
        return pass(std::string("sec>sigma ") + (strict ? "yes" : "no") +
                    ", blocked covers " + (every_cover_blocked ? "yes" : "no"));
      return fail(std::string("sec>sigma ") + (strict ? "yes" : "no") +
                  " but every minimum cover blocked " +
                  (every_cover_blocked ? "yes" : "no"));
    });

    run_check(subject, "maximal-oracle", [&]() -> Res {
      if (H->order() > 16) return pass("not applicable");
      std::vector<ElemMask> cands;
      for (const auto& e : hf.poset->elements) cands.push_back(e.mask);
      auto mc = min_cover(nonidentity(H), cands, opt.cover_budget);
      ExtInt oracle = mc ? ExtInt::of(mc->size) : ExtInt::infinity();
      // empty universe: the poset pins a one-element codomain at infinity
      if (H->order() == 1) oracle = ExtInt::infinity();
      if (oracle == hf.sec_r.value)
        return pass(two("all-sectionable", oracle, "sec", hf.sec_r.value));
      return fail(two("all-sectionable", oracle, "sec", hf.sec_r.value));
    });

    if (!hf.ker_abelian || H->order() > 24) return;

    run_check(subject, "coboundary-section", [&]() -> Res {
      ExtensionData ed = build_cocycle(hf.f);
      std::vector<ElemMask> sectionable;
      for (const auto& e : hf.poset->elements) sectionable.push_back(e.mask);
      int compared = 0, oracled = 0;
      for (const auto& l : gfh->lat.subgroups) {
        bool full = !l.is_proper();
        CoboundaryResult cb =
            full ? is_coboundary(ed.cocycle, opt.coboundary_budget)
                 : is_coboundary(restrict_cocycle(ed.cocycle, l),
                                 opt.coboundary_budget);
        bool has_section =
            full ? hf.global.has_value()
                 : std::find(sectionable.begin(), sectionable.end(), l.mask) !=
                       sectionable.end();
        if (cb.via_section_oracle) {
          ++oracled;
          continue;
        }
        if (cb.trivial != has_section)
          return fail("subgroup of size " + std::to_string(l.size()) +
                      ": coboundary " + (cb.trivial ? "yes" : "no") +
                      ", section " + (has_section ? "yes" : "no"));
        ++compared;
      }
      if (compared == 0)
        return {Verdict::Budget,
                "coboundary search over budget on all subgroups"};
      std::string d = std::to_string(compared) + " subgroups";
      if (oracled) d += ", " + std::to_string(oracled) + " skipped (oracle)";
      return pass(d);
    });

    run_check(subject, "cohomology-sec", [&]() -> Res {
      CoverResult r = sec_via_cohomology(hf.f, &gfh->lat,
                                         opt.coboundary_budget,
                                         opt.cover_budget);
      if (r.value == hf.sec_r.value)
        return pass(two("cohomology", r.value, "sec", hf.sec_r.value));
      return fail(two("cohomology", r.value, "sec", hf.sec_r.value));
    });
  }

  // ---- pairwise checks ----------------------------------------------------

  void pair_checks() {
    // same-codomain pairs: fibrewise and pullback monotonicity
    for (std::size_t i = 0; i < hom_facts.size(); ++i) {
      const HomFacts& a = hom_facts[i];
      if (!a.error.empty() || !a.epi) continue;
      if (a.f.codomain->is_cyclic()) continue;  // both sides infinite
      for (std::size_t j = 0; j < hom_facts.size(); ++j) {
        const HomFacts& b = hom_facts[j];
        if (!b.error.empty() || !b.epi) continue;
        if (!a.f.codomain->same_table(*b.f.codomain)) continue;
        if (i != j) {
          run_check(a.name + " | " + b.name, "fibrewise-monotone",
                    [&]() -> Res {
            auto psi =
                exists_fibrewise_morphism(a.f, b.f, opt.hom_budget);
            if (!psi) return pass("no fibrewise morphism");
            if (a.sec_r.value >= b.sec_r.value)
              return pass(two("sec(f)", a.sec_r.value, "sec(f')",
                              b.sec_r.value));
            return fail("fibrewise morphism exists but " +
                        two("sec(f)", a.sec_r.value, "sec(f')",
                            b.sec_r.value));
          });
        }
        run_check(a.name + " | " + b.name, "pullback-monotone", [&]() -> Res {
          FiberProduct fp = fiber_product(a.f, b.f);
          const GroupFacts* gk = find_facts(b.f.domain);
          CoverResult r = sec(fp.to_k, gk ? &gk->lat : nullptr, nullptr,
                              opt.hom_budget, opt.cover_budget);
          if (r.value <= a.sec_r.value)
            return pass(
                two("sec(pullback)", r.value, "sec(f)", a.sec_r.value));
          return fail(
              two("sec(pullback)", r.value, "sec(f)", a.sec_r.value));
        });
      }
    }

    // per-hom product probes
    for (const HomFacts& hf : hom_facts) {
      if (!hf.error.empty() || !hf.epi) continue;
      run_check(hf.name, "product-monotone",
                [&]() -> Res { return product_probe(hf); });
    }

    // same-domain, same-kernel pairs
    for (std::size_t i = 0; i < hom_facts.size(); ++i) {
      const HomFacts& a = hom_facts[i];
      if (!a.error.empty() || !a.epi) continue;
      for (std::size_t j = i + 1; j < hom_facts.size(); ++j) {
        const HomFacts& b = hom_facts[j];
        if (!b.error.empty() || !b.epi) continue;
        if (!a.f.domain->same_table(*b.f.domain)) continue;
        if (a.ker.mask != b.ker.mask) continue;
        run_check(a.name + " | " + b.name, "kernel-determines-sec",
                  [&]() -> Res {
          if (a.sec_r.value == b.sec_r.value)
            return pass(two("sec(f)", a.sec_r.value, "sec(f')", b.sec_r.value));
          return fail("equal kernels but " +
                      two("sec(f)", a.sec_r.value, "sec(f')", b.sec_r.value));
        });
      }
    }
  }

  Res product_probe(const HomFacts& hf) {
    const GroupPtr& G = hf.f.domain;
    const GroupPtr& H = hf.f.codomain;
    int probes = 0;
    for (int kn : {2, 3}) {
      if (static_cast<long long>(G->order()) * kn > kDefaultOrderCap) continue;
      if (static_cast<long long>(H->order()) * kn > kDefaultOrderCap) continue;
      GroupPtr K = make_cyclic(kn, kDefaultOrderCap);
      ProductGroup dp = make_product(G, K, kDefaultOrderCap);
      ProductGroup cp = make_product(H, K, kDefaultOrderCap);
      std::vector<int> img(dp.group->order());
      for (int g = 0; g < G->order(); ++g)
        for (int k = 0; k < kn; ++k)
          img[g * kn + k] = hf.f.images[g] * kn + k;
      Hom fk = Hom::make(dp.group, cp.group, std::move(img));
      CoverResult r =
          sec(fk, nullptr, nullptr, opt.hom_budget, opt.cover_budget);
      if (!(r.value <= hf.sec_r.value))
        return fail("Z(" + std::to_string(kn) + ") probe: " +
                    two("sec(fxid)", r.value, "sec(f)", hf.sec_r.value));
      if (!hf.global && !(r.value == hf.sec_r.value))
        return fail("no global section, Z(" + std::to_string(kn) +
                    ") probe: " +
                    two("sec(fxid)", r.value, "sec(f)", hf.sec_r.value));
      ++probes;
    }
    long long g2 = static_cast<long long>(G->order()) * G->order();
    long long h2 = static_cast<long long>(H->order()) * H->order();
    // sec(f) <= sec(fxf) needs f section-free: a split f with cyclic codomain
    // has sec(f) infinite while the square's codomain may be noncyclic, and
    // even split f with finite sec can shrink the square's covering number
    // (a second prime's Sylow factor can turn noncyclic in the square)
    if (g2 <= kDefaultOrderCap && h2 <= kDefaultOrderCap && !hf.global) {
      ProductGroup dp = make_product(G, G, kDefaultOrderCap);
      ProductGroup cp = make_product(H, H, kDefaultOrderCap);
      std::vector<int> img(dp.group->order());
      int nh = H->order();
      for (int x = 0; x < G->order(); ++x)
        for (int y = 0; y < G->order(); ++y)
          img[x * G->order() + y] =
              hf.f.images[x] * nh + hf.f.images[y];
      Hom ff = Hom::make(dp.group, cp.group, std::move(img));
      CoverResult r =
          sec(ff, nullptr, nullptr, opt.hom_budget, opt.cover_budget);
      if (!(hf.sec_r.value <= r.value))
        return fail("square probe: " +
                    two("sec(f)", hf.sec_r.value, "sec(fxf)", r.value));
      ++probes;
    }
    if (!probes) return skipped("no probe fits the order cap");
    return pass(std::to_string(probes) + " probes");
  }

  // ---- driver ---------------------------------------------------------

  VerifyReport run(const Catalog* cat,
                   const std::vector<std::pair<Hom, std::string>>& homs,
                   const std::vector<std::pair<GroupPtr, std::string>>&
                       named_groups) {
    gather_group_facts(cat ? *cat : Catalog{}, homs);

    hom_facts.resize(homs.size());
    run_in_parallel(static_cast<int>(homs.size()), opt.jobs, [&](int i) {
      hom_facts[i] = compute_hom_facts(homs[i].first, homs[i].second);
    });

    for (const auto& [g, name] : named_groups) {
      const GroupFacts* gf = find_facts(g);
      if (gf) group_checks(name, *gf);
    }
    for (const auto& hf : hom_facts) hom_checks(hf);
    pair_checks();

    std::stable_sort(rows.begin(), rows.end(),
                     [](const CheckOutcome& a, const CheckOutcome& b) {
                       if (a.subject != b.subject) return a.subject < b.subject;
                       return a.check < b.check;
                     });
    VerifyReport rep;
    rep.outcomes = std::move(rows);
    for (const auto& r : rep.outcomes) {
      switch (r.verdict) {
        case Verdict::Pass:
          ++rep.pass;
          break;
        case Verdict::Fail:
          ++rep.fail;
          break;
        case Verdict::Budget:
          ++rep.budget;
          break;
        case Verdict::Skip:
          ++rep.skip;
          break;
      }
    }
    return rep;
  }
};

}  // namespace

VerifyReport verify_single(const Hom& f, const std::string& name,
                           const VerifyOptions& opts) {
  Harness h;
  h.opt = opts;
  std::vector<std::pair<Hom, std::string>> homs{{f, name}};
  std::vector<std::pair<GroupPtr, std::string>> groups;
  groups.emplace_back(f.domain, "domain " + f.domain->label());
  if (!f.domain->same_table(*f.codomain))
    groups.emplace_back(f.codomain, "codomain " + f.codomain->label());
  return h.run(nullptr, homs, groups);
}

VerifyReport verify_theorems(const Catalog& catalog,
                             const VerifyOptions& opts) {
  Harness h;
  h.opt = opts;
  std::vector<std::pair<Hom, std::string>> homs;
  for (const auto& ch : catalog.homs) homs.emplace_back(ch.hom, ch.name);
  std::vector<std::pair<GroupPtr, std::string>> groups;
  for (const auto& e : catalog.groups) groups.emplace_back(e.group, e.name);
  return h.run(&catalog, homs, groups);
}

}  // namespace sectio
