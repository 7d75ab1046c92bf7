#include <doctest.h>

#include <algorithm>

#include "sectio/errors.hpp"
#include "sectio/group.hpp"
#include "sectio/subgroup.hpp"
#include "support/oracles.hpp"

using namespace sectio;

namespace {

std::vector<std::vector<int>> member_lists(const SubgroupLattice& l) {
  std::vector<std::vector<int>> out;
  for (const auto& s : l.subgroups) out.push_back(s.members);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_SUITE("subgroup") {

TEST_CASE("lattice counts") {
  CHECK(all_subgroups(make_elementary_abelian(2, 2)).subgroups.size() == 5);
  CHECK(all_subgroups(make_quaternion8()).subgroups.size() == 6);
  CHECK(all_subgroups(make_elementary_abelian(3, 2)).subgroups.size() == 6);
  CHECK(all_subgroups(make_symmetric(3)).subgroups.size() == 6);
  CHECK(all_subgroups(make_dihedral(4)).subgroups.size() == 10);
  CHECK(all_subgroups(make_alternating(4)).subgroups.size() == 10);
  CHECK(all_subgroups(make_elementary_abelian(2, 3)).subgroups.size() == 16);
  CHECK(all_subgroups(make_elementary_abelian(2, 4)).subgroups.size() == 67);
  CHECK(all_subgroups(make_symmetric(4)).subgroups.size() == 30);
  CHECK(all_subgroups(make_product(make_cyclic(4), make_cyclic(2)).group)
            .subgroups.size() == 8);
}

TEST_CASE("lattice agrees with subset-scan oracle") {
  for (const GroupPtr& g :
       {make_cyclic(12), make_quaternion8(), make_dihedral(4),
        make_symmetric(3), make_alternating(4), make_elementary_abelian(2, 4),
        make_dihedral(8), make_semidirect(make_cyclic(4), make_cyclic(4),
                                          inversion_action(make_cyclic(4),
                                                           make_cyclic(4)))
                              .group}) {
    auto got = member_lists(all_subgroups(g));
    auto want = oracles::all_subgroups_brute(g);
    CHECK(got == want);
  }
}

TEST_CASE("normality flags") {
  GroupPtr s3 = make_symmetric(3);
  SubgroupLattice l = all_subgroups(s3);
  int normal = 0, proper_nontrivial_normal = 0;
  for (const auto& s : l.subgroups) {
    if (!s.normal) continue;
    ++normal;
    if (s.is_proper() && !s.is_trivial()) ++proper_nontrivial_normal;
  }
  CHECK(normal == 3);  // 1, A3, S3
  CHECK(proper_nontrivial_normal == 1);
  // every subgroup of Q8 is normal
  for (const auto& s : all_subgroups(make_quaternion8()).subgroups)
    CHECK(s.normal);
}

TEST_CASE("maximal proper subgroups") {
  SubgroupLattice q8 = all_subgroups(make_quaternion8());
  CHECK(q8.maximal_proper.size() == 3);
  for (int i : q8.maximal_proper) CHECK(q8.subgroups[i].size() == 4);
  SubgroupLattice z12 = all_subgroups(make_cyclic(12));
  CHECK(z12.maximal_proper.size() == 2);  // index 2 and index 3
}

TEST_CASE("generated subgroup and membership") {
  GroupPtr q8 = make_quaternion8();
  Subgroup si = generated_subgroup(q8, {1});
  CHECK(si.members == std::vector<int>{0, 1, 4, 5});
  CHECK(si.normal);
  CHECK(si.contains(4));
  CHECK_FALSE(si.contains(2));
  CHECK(generated_subgroup(q8, {1, 2}).size() == 8);
  CHECK(trivial_subgroup(q8).size() == 1);
  CHECK(full_subgroup(q8).size() == 8);
  CHECK_THROWS_AS(subgroup_from_members(q8, {0, 1}), InvalidParameter);
}

TEST_CASE("quotients") {
  GroupPtr q8 = make_quaternion8();
  QuotientGroup v = quotient(q8, generated_subgroup(q8, {4}));
  CHECK(v.group->order() == 4);
  CHECK(v.group->exponent() == 2);  // Q8 / center is Klein
  CHECK_FALSE(v.group->is_cyclic());
  CHECK(v.q.is_surjective());
  CHECK(kernel(v.q).members == std::vector<int>{0, 4});

  GroupPtr d4 = make_dihedral(4);
  QuotientGroup dv = quotient(d4, generated_subgroup(d4, {2}));
  CHECK(dv.group->order() == 4);
  CHECK(dv.group->exponent() == 2);  // D4 / center is Klein too

  GroupPtr z4 = make_cyclic(4);
  QuotientGroup z2 = quotient(z4, generated_subgroup(z4, {2}));
  CHECK(z2.group->is_cyclic());
  CHECK(z2.group->order() == 2);

  GroupPtr s3 = make_symmetric(3);
  // element 1 is the transposition (1 2); its subgroup is not normal
  CHECK(s3->elem_order(1) == 2);
  CHECK_THROWS_AS(quotient(s3, generated_subgroup(s3, {1})), NotNormal);
}

TEST_CASE("images preimages kernel") {
  GroupPtr q8 = make_quaternion8();
  QuotientGroup v = quotient(q8, generated_subgroup(q8, {4}));
  Subgroup im = image_subgroup(v.q, generated_subgroup(q8, {1}));
  CHECK(im.size() == 2);
  Subgroup pre = preimage_subgroup(v.q, im);
  CHECK(pre.members == std::vector<int>{0, 1, 4, 5});
  CHECK(image_subgroup(v.q).size() == 4);
}

TEST_CASE("embedded subgroup as group") {
  GroupPtr q8 = make_quaternion8();
  EmbeddedGroup e = as_group(generated_subgroup(q8, {1}));
  CHECK(e.group->order() == 4);
  CHECK(e.group->is_cyclic());
  // inclusion maps the abstract elements back onto the members
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y)
      CHECK(e.incl.images[e.group->mul(x, y)] ==
            q8->mul(e.incl.images[x], e.incl.images[y]));
}

TEST_CASE("structure info") {
  StructureInfo st = structure(make_quaternion8());
  CHECK_FALSE(st.abelian);
  CHECK_FALSE(st.cyclic);
  CHECK(st.exponent == 4);
  CHECK(st.center.members == std::vector<int>{0, 4});
  CHECK(structure(make_symmetric(3)).center.size() == 1);
}

TEST_CASE("fiber product") {
  GroupPtr q8 = make_quaternion8();
  Hom f = quotient(q8, generated_subgroup(q8, {4})).q;
  FiberProduct fp = fiber_product(f, f);
  CHECK(fp.fiber.group->order() == 16);
  // square commutes: f∘to_g = f∘to_k
  for (int x = 0; x < 16; ++x)
    CHECK(f.images[fp.to_g.images[x]] == f.images[fp.to_k.images[x]]);
  CHECK(fp.to_k.is_surjective());
  CHECK(fp.to_g.is_surjective());
}

TEST_CASE("cyclic subgroups") {
  CyclicSubgroups c = cyclic_subgroups(make_quaternion8());
  CHECK(c.subgroups.size() == 5);  // 1, <-1>, <i>, <j>, <k>
  CyclicSubgroups e = cyclic_subgroups(make_elementary_abelian(2, 3));
  CHECK(e.subgroups.size() == 8);  // 1 and seven order-2
}

}  // TEST_SUITE
