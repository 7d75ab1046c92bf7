#include <doctest.h>

#include <set>
#include <string>

#include "sectio/catalog.hpp"
#include "sectio/expr.hpp"
#include "sectio/group.hpp"

using namespace sectio;

TEST_SUITE("catalog") {

TEST_CASE("two builds agree exactly") {
  Catalog a = build_catalog(16);
  Catalog b = build_catalog(16);
  REQUIRE(a.groups.size() == b.groups.size());
  REQUIRE(a.homs.size() == b.homs.size());
  for (std::size_t i = 0; i < a.groups.size(); ++i) {
    CHECK(a.groups[i].name == b.groups[i].name);
    CHECK(a.groups[i].group->same_table(*b.groups[i].group));
  }
  for (std::size_t i = 0; i < a.homs.size(); ++i) {
    CHECK(a.homs[i].name == b.homs[i].name);
    CHECK(a.homs[i].hom.images == b.homs[i].hom.images);
  }
}

TEST_CASE("orders respect the bound and tables are deduplicated") {
  Catalog cat = build_catalog(12);
  std::set<std::string> names;
  for (const auto& e : cat.groups) {
    CHECK(e.group->order() <= 12);
    CHECK(e.name == to_string(e.expr));
    CHECK(names.insert(e.name).second);  // names unique
  }
  for (std::size_t i = 0; i < cat.groups.size(); ++i)
    for (std::size_t j = i + 1; j < cat.groups.size(); ++j)
      CHECK_FALSE(cat.groups[i].group->same_table(*cat.groups[j].group));
}

TEST_CASE("expected members are present") {
  Catalog cat = build_catalog(16);
  auto has = [&](const char* name) {
    for (const auto& e : cat.groups)
      if (e.name == name) return true;
    return false;
  };
  CHECK(has("Z(2)"));
  CHECK(has("Z(16)"));
  CHECK(has("E(2,2)"));
  CHECK(has("E(2,4)"));
  CHECK(has("D(4)"));
  CHECK(has("Q8"));
  CHECK(has("S(3)"));
  CHECK(has("A(4)"));
  CHECK(has("sd(Z(3),Z(4),inv)"));  // dicyclic of order 12
  // V4 canonicalizes to E(2,2); later spellings of the same table vanish
  CHECK_FALSE(has("Z(2)xZ(2)"));
  CHECK_FALSE(has("D(2)"));
  // D(3) and S(3) are isomorphic but have different tables; both stay
  CHECK(has("D(3)"));
  CHECK(has("S(3)"));
}

TEST_CASE("hom entries are well formed") {
  Catalog cat = build_catalog(12);
  CHECK(!cat.homs.empty());
  auto catalog_instance = [&](const GroupPtr& g) {
    for (const auto& e : cat.groups)
      if (e.group.get() == g.get()) return true;
    return false;
  };
  for (const auto& ch : cat.homs) {
    CHECK(ch.name == to_string(ch.spec));
    // domains are always the canonical catalog instance, not a stray copy
    CHECK(catalog_instance(ch.hom.domain));
    switch (ch.spec.kind) {
      case HomSpec::Kind::Quotient:
        // codomain is the freshly built coset group
        CHECK(ch.hom.is_surjective());
        CHECK(ch.hom.codomain->order() < ch.hom.domain->order());
        CHECK(ch.hom.domain->order() % ch.hom.codomain->order() == 0);
        break;
      case HomSpec::Kind::Projection:
        CHECK(ch.hom.is_surjective());
        CHECK(catalog_instance(ch.hom.codomain));
        break;
      case HomSpec::Kind::Trivial:
        CHECK(catalog_instance(ch.hom.codomain));
        CHECK(ch.hom.codomain->order() <= 4);
        break;
      default:
        FAIL("unexpected catalog hom kind");
    }
  }
}

TEST_CASE("deduplicated products keep their projections") {
  Catalog cat = build_catalog(8);
  bool p0 = false, p1 = false;
  for (const auto& ch : cat.homs) {
    if (ch.name == "proj(Z(2)xZ(2),0)") p0 = true;
    if (ch.name == "proj(Z(2)xZ(2),1)") p1 = true;
  }
  CHECK(p0);
  CHECK(p1);
}

TEST_CASE("quotient homs match their specs") {
  Catalog cat = build_catalog(8);
  int quotients = 0;
  for (const auto& ch : cat.homs) {
    if (ch.spec.kind != HomSpec::Kind::Quotient) continue;
    ++quotients;
    Hom re = eval_hom(ch.spec);
    CHECK(re.domain->same_table(*ch.hom.domain));
    CHECK(re.codomain->same_table(*ch.hom.codomain));
    CHECK(re.images == ch.hom.images);
  }
  CHECK(quotients > 10);
}

TEST_CASE("small bound still yields a catalog") {
  Catalog cat = build_catalog(2);
  REQUIRE(cat.groups.size() >= 2);  // Z(1), Z(2)
  for (const auto& e : cat.groups) CHECK(e.group->order() <= 2);
  CHECK(cat.max_order == 2);
}

}  // TEST_SUITE
