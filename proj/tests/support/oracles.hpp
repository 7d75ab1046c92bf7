#pragma once

// Brute-force reference implementations for cross-checking the library.
// Deliberately independent of the library's algorithms: subgroups come from
// a full subset scan, covers from combination search, homs and sections from
// full image-table enumeration.  Everything here is exponential and meant
// for tiny inputs only.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "sectio/group.hpp"
#include "sectio/subgroup.hpp"

namespace oracles {

using sectio::ElemMask;
using sectio::GroupPtr;
using sectio::Hom;

// Every subgroup of g as a sorted member list, found by scanning all subsets
// that contain the identity and checking closure under multiplication (a
// finite subset closed under the product is a subgroup).  |G| <= 20.
inline std::vector<std::vector<int>> all_subgroups_brute(const GroupPtr& g) {
  int n = g->order();
  std::vector<std::vector<int>> out;
  for (std::uint32_t bits = 0; bits < (1u << (n - 1)); ++bits) {
    std::vector<int> members{0};
    for (int i = 0; i + 1 < n; ++i)
      if (bits & (1u << i)) members.push_back(i + 1);
    bool closed = true;
    for (std::size_t x = 0; x < members.size() && closed; ++x)
      for (std::size_t y = 0; y < members.size() && closed; ++y) {
        int p = g->mul(members[x], members[y]);
        closed = std::binary_search(members.begin(), members.end(), p);
      }
    if (closed) out.push_back(std::move(members));
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool cover_exists(const ElemMask& universe,
                         const std::vector<ElemMask>& cands, int k,
                         std::size_t start, const ElemMask& acc) {
  if ((universe & ~acc).none()) return true;
  if (k == 0) return false;
  for (std::size_t i = start; i < cands.size(); ++i) {
    ElemMask next = acc | cands[i];
    if (next == acc) continue;
    if (cover_exists(universe, cands, k - 1, i + 1, next)) return true;
  }
  return false;
}

// Least k with some k candidates unioning to the universe; nullopt if even
// all of them together fall short.
inline std::optional<int> min_cover_brute(const ElemMask& universe,
                                          const std::vector<ElemMask>& cands) {
  ElemMask all;
  for (const auto& c : cands) all |= c;
  if ((universe & ~all).any()) return std::nullopt;
  for (int k = 0; k <= static_cast<int>(cands.size()); ++k)
    if (cover_exists(universe, cands, k, 0, ElemMask{})) return k;
  return std::nullopt;
}

inline ElemMask nonidentity_mask(const GroupPtr& g) {
  ElemMask m;
  for (int a = 1; a < g->order(); ++a) m.set(a);
  return m;
}

// All homomorphisms g → l as full image tables, by trying every map that
// fixes the identity.  |L|^(|G|-1) tables, so both groups must be tiny.
inline std::vector<std::vector<int>> all_homs_brute(const GroupPtr& g,
                                                    const GroupPtr& l) {
  int n = g->order(), m = l->order();
  std::vector<std::vector<int>> out;
  std::vector<int> img(n, 0);
  while (true) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b)
        ok = img[g->mul(a, b)] == l->mul(img[a], img[b]);
    if (ok) out.push_back(img);
    int i = 1;
    while (i < n && img[i] == m - 1) img[i++] = 0;
    if (i == n) break;
    ++img[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Whether f admits a local section over the subgroup of the codomain given
// by `members`: tries every choice of preimage for each member and checks
// multiplicativity.  Product of fiber sizes must stay small.
inline bool has_section_brute(const Hom& f, const std::vector<int>& members) {
  const GroupPtr& g = f.domain;
  const GroupPtr& h = f.codomain;
  std::vector<std::vector<int>> fibers(members.size());
  for (std::size_t i = 0; i < members.size(); ++i)
    for (int a = 0; a < g->order(); ++a)
      if (f.images[a] == members[i]) fibers[i].push_back(a);
  std::vector<std::size_t> pick(members.size(), 0);
  auto member_pos = [&](int x) {
    return std::lower_bound(members.begin(), members.end(), x) -
           members.begin();
  };
  while (true) {
    bool ok = true;
    for (std::size_t i = 0; i < members.size() && ok; ++i)
      for (std::size_t j = 0; j < members.size() && ok; ++j) {
        int prod = h->mul(members[i], members[j]);
        std::size_t k = member_pos(prod);
        ok = g->mul(fibers[i][pick[i]], fibers[j][pick[j]]) ==
             fibers[k][pick[k]];
      }
    if (ok) return true;
    std::size_t i = 0;
    while (i < pick.size() && pick[i] + 1 == fibers[i].size()) pick[i++] = 0;
    if (i == pick.size()) return false;
    ++pick[i];
  }
}

// sec straight from the definition: all proper subgroups of the codomain
// that admit a section, then the least cover by them.  nullopt = infinite.
inline std::optional<int> sec_brute(const Hom& f) {
  if (!f.is_surjective()) return std::nullopt;
  std::vector<ElemMask> sectionable;
  for (const auto& members : all_subgroups_brute(f.codomain)) {
    if (static_cast<int>(members.size()) == f.codomain->order()) continue;
    if (has_section_brute(f, members))
      sectionable.push_back(sectio::mask_of_members(members));
  }
  return min_cover_brute(nonidentity_mask(f.codomain), sectionable);
}

}  // namespace oracles
