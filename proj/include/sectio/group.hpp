#pragma once

// Finite groups as validated multiplication tables.  Elements are the indices
// 0..order-1 and index 0 is always the identity; every constructor arranges
// its canonical ordering so that this holds.  Tables are immutable after
// creation and shared through GroupPtr.

#include <bitset>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "sectio/errors.hpp"

namespace sectio {

inline constexpr int kDefaultOrderCap = 64;
inline constexpr int kMaxOrderCap = 256;
inline constexpr int kExhaustiveAssocLimit = 64;
inline constexpr long long kAssocSampleTriples = 100'000;
inline constexpr std::uint64_t kDefaultSeed = 0x5ec71000c0c0aULL;

using ElemMask = std::bitset<kMaxOrderCap>;

class GroupTable;
using GroupPtr = std::shared_ptr<const GroupTable>;

class GroupTable {
 public:
  // Validates: cap, identity at index 0, two-sided inverses, associativity
  // (exhaustive up to kExhaustiveAssocLimit, sampled with `seed` above that).
  // Empty `names` auto-fills with decimal index strings.
  static GroupPtr create(std::string label, int order, std::vector<int> mul,
                         std::vector<std::string> names = {},
                         int order_cap = kDefaultOrderCap,
                         std::uint64_t seed = kDefaultSeed);

  int order() const { return order_; }
  int mul(int a, int b) const { return mul_[a * order_ + b]; }
  int inv(int a) const { return inv_[a]; }
  int elem_order(int a) const { return elem_order_[a]; }
  int power(int a, long long k) const;

  bool is_abelian() const { return abelian_; }
  bool is_cyclic() const { return cyclic_; }
  int exponent() const { return exponent_; }

  const std::string& label() const { return label_; }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int a) const { return names_[a]; }

  bool same_table(const GroupTable& other) const {
    return order_ == other.order_ && mul_ == other.mul_;
  }
  std::uint64_t table_hash() const { return hash_; }

  GroupTable(const GroupTable&) = delete;
  GroupTable& operator=(const GroupTable&) = delete;

 private:
  GroupTable() = default;

  std::string label_;
  int order_ = 0;
  std::vector<int> mul_;
  std::vector<int> inv_;
  std::vector<int> elem_order_;
  std::vector<std::string> names_;
  bool abelian_ = false;
  bool cyclic_ = false;
  int exponent_ = 1;
  std::uint64_t hash_ = 0;
};

// Group homomorphism as a full image table, validated at construction
// (identity preserved, multiplicative on all pairs; element orders of images
// divide the source orders as a consequence, re-checked cheaply).
struct Hom {
  GroupPtr domain;
  GroupPtr codomain;
  std::vector<int> images;

  static Hom make(GroupPtr domain, GroupPtr codomain, std::vector<int> images);

  int operator()(int a) const { return images[a]; }
  bool is_surjective() const;
  bool is_injective() const;
  bool same_map(const Hom& other) const;
};

Hom identity_hom(const GroupPtr& g);
Hom trivial_hom(const GroupPtr& domain, const GroupPtr& codomain);
// outer ∘ inner; requires inner.codomain and outer.domain to share one table.
Hom compose(const Hom& outer, const Hom& inner);

// Left action of `actor` on `target` by automorphisms:
// act[h] is an automorphism of target, act[1] = id and
// act[h1·h2] = act[h1] ∘ act[h2].  Validated at construction.
struct ActionTable {
  GroupPtr actor;
  GroupPtr target;
  std::vector<std::vector<int>> act;

  static ActionTable make(GroupPtr actor, GroupPtr target,
                          std::vector<std::vector<int>> act);

  int operator()(int h, int a) const { return act[h][a]; }
};

ActionTable trivial_action(const GroupPtr& actor, const GroupPtr& target);
// Odd-index elements of a cyclic even-order actor invert an abelian target.
ActionTable inversion_action(const GroupPtr& actor, const GroupPtr& target);

GroupPtr make_cyclic(int n, int order_cap = kDefaultOrderCap);

struct ProductGroup {
  GroupPtr group;  // index of (g, k) is g·|K| + k
  Hom pi1, pi2;
  Hom iota1, iota2;
};
ProductGroup make_product(const GroupPtr& g, const GroupPtr& k,
                          int order_cap = kDefaultOrderCap);

GroupPtr make_dihedral(int n, int order_cap = kDefaultOrderCap);
GroupPtr make_quaternion8(int order_cap = kDefaultOrderCap);
GroupPtr make_symmetric(int n, int order_cap = kDefaultOrderCap);
GroupPtr make_alternating(int n, int order_cap = kDefaultOrderCap);
GroupPtr make_elementary_abelian(int p, int k, int order_cap = kDefaultOrderCap);

struct SemidirectGroup {
  GroupPtr group;  // underlying set A×H, index of (a, h) is a·|H| + h
  Hom pi2;         // projection onto H
  Hom iota2;       // section of pi2, h ↦ (1, h)
};
// (a1,h1)·(a2,h2) = (a1 · act(h1)(a2), h1·h2)
SemidirectGroup make_semidirect(const GroupPtr& a, const GroupPtr& h,
                                const ActionTable& act,
                                int order_cap = kDefaultOrderCap);

}  // namespace sectio
