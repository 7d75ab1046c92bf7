#include "sectio/group.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <utility>

namespace sectio {

namespace {

std::uint64_t fnv1a(std::uint64_t h, std::uint64_t v) {
  h ^= v;
  return h * 0x100000001b3ULL;
}

void check_cap(int order, int order_cap, const std::string& what) {
  if (order_cap < 1 || order_cap > kMaxOrderCap)
    throw InvalidParameter("order cap must be between 1 and " +
                           std::to_string(kMaxOrderCap));
  if (order > order_cap)
    throw OrderCapExceeded(what + ": order " + std::to_string(order) +
                           " exceeds the cap of " + std::to_string(order_cap));
}

long long lcm_ll(long long a, long long b) { return a / std::gcd(a, b) * b; }

}  // namespace

GroupPtr GroupTable::create(std::string label, int order, std::vector<int> mul,
                            std::vector<std::string> names, int order_cap,
                            std::uint64_t seed) {
  if (order < 1) throw InvalidParameter("group order must be positive");
  check_cap(order, order_cap, label);
  if (static_cast<int>(mul.size()) != order * order)
    throw InvalidParameter(label + ": multiplication table has wrong size");
  for (int v : mul)
    if (v < 0 || v >= order)
      throw InvalidParameter(label + ": table entry out of range");

  auto at = [&](int a, int b) { return mul[a * order + b]; };

  for (int a = 0; a < order; ++a)
    if (at(0, a) != a || at(a, 0) != a)
      throw InvalidParameter(label + ": index 0 is not a two-sided identity");

  std::vector<int> inv(order, -1);
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b)
      if (at(a, b) == 0) {
        inv[a] = b;
        break;
      }
    if (inv[a] < 0 || at(inv[a], a) != 0)
      throw InvalidParameter(label + ": element " + std::to_string(a) +
                             " has no two-sided inverse");
  }

  if (order <= kExhaustiveAssocLimit) {
    for (int a = 0; a < order; ++a)
      for (int b = 0; b < order; ++b)
        for (int c = 0; c < order; ++c)
          if (at(at(a, b), c) != at(a, at(b, c)))
            throw InvalidParameter(label + ": multiplication not associative");
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, order - 1);
    for (long long i = 0; i < kAssocSampleTriples; ++i) {
      int a = pick(rng), b = pick(rng), c = pick(rng);
      if (at(at(a, b), c) != at(a, at(b, c)))
        throw InvalidParameter(label + ": multiplication not associative");
    }
  }

  std::vector<int> elem_order(order, 1);
  for (int a = 0; a < order; ++a) {
    int p = a, k = 1;
    while (p != 0) {
      p = at(p, a);
      ++k;
      if (k > order + 1)
        throw InvalidParameter(label + ": element power chain does not close");
    }
    elem_order[a] = k;
  }

  bool abelian = true;
  for (int a = 0; a < order && abelian; ++a)
    for (int b = a + 1; b < order; ++b)
      if (at(a, b) != at(b, a)) {
        abelian = false;
        break;
      }

  long long expo = 1;
  bool cyclic = false;
  for (int a = 0; a < order; ++a) {
    expo = lcm_ll(expo, elem_order[a]);
    if (elem_order[a] == order) cyclic = true;
  }

  if (names.empty()) {
    names.reserve(order);
    for (int a = 0; a < order; ++a) names.push_back(std::to_string(a));
  }
  if (static_cast<int>(names.size()) != order)
    throw InvalidParameter(label + ": name list has wrong size");

  std::uint64_t h = fnv1a(0xcbf29ce484222325ULL, static_cast<std::uint64_t>(order));
  for (int v : mul) h = fnv1a(h, static_cast<std::uint64_t>(v));

  auto g = std::shared_ptr<GroupTable>(new GroupTable());
  g->label_ = std::move(label);
  g->order_ = order;
  g->mul_ = std::move(mul);
  g->inv_ = std::move(inv);
  g->elem_order_ = std::move(elem_order);
  g->names_ = std::move(names);
  g->abelian_ = abelian;
  g->cyclic_ = cyclic;
  g->exponent_ = static_cast<int>(expo);
  g->hash_ = h;
  return g;
}

int GroupTable::power(int a, long long k) const {
  k %= elem_order_[a];
  if (k < 0) k += elem_order_[a];
  int r = 0, p = a;
  while (k > 0) {
    if (k & 1) r = mul(r, p);
    p = mul(p, p);
    k >>= 1;
  }
  return r;
}

Hom Hom::make(GroupPtr domain, GroupPtr codomain, std::vector<int> images) {
  if (!domain || !codomain) throw InvalidParameter("hom: null group");
  int n = domain->order(), m = codomain->order();
  if (static_cast<int>(images.size()) != n)
    throw InvalidParameter("hom: image table has wrong size");
  for (int v : images)
    if (v < 0 || v >= m) throw InvalidParameter("hom: image out of range");
  if (images[0] != 0)
    throw InvalidParameter("hom: identity not mapped to identity");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (images[domain->mul(a, b)] != codomain->mul(images[a], images[b]))
        throw InvalidParameter("hom: map is not multiplicative");
  for (int a = 0; a < n; ++a)
    if (domain->elem_order(a) % codomain->elem_order(images[a]) != 0)
      throw InvalidParameter("hom: image order does not divide element order");
  Hom f;
  f.domain = std::move(domain);
  f.codomain = std::move(codomain);
  f.images = std::move(images);
  return f;
}

bool Hom::is_surjective() const {
  std::vector<char> hit(codomain->order(), 0);
  int count = 0;
  for (int v : images)
    if (!hit[v]) {
      hit[v] = 1;
      ++count;
    }
  return count == codomain->order();
}

bool Hom::is_injective() const {
  std::vector<char> hit(codomain->order(), 0);
  for (int v : images) {
    if (hit[v]) return false;
    hit[v] = 1;
  }
  return true;
}

bool Hom::same_map(const Hom& other) const {
  return domain->same_table(*other.domain) &&
         codomain->same_table(*other.codomain) && images == other.images;
}

Hom identity_hom(const GroupPtr& g) {
  std::vector<int> images(g->order());
  std::iota(images.begin(), images.end(), 0);
  return Hom::make(g, g, std::move(images));
}

Hom trivial_hom(const GroupPtr& domain, const GroupPtr& codomain) {
  return Hom::make(domain, codomain, std::vector<int>(domain->order(), 0));
}

Hom compose(const Hom& outer, const Hom& inner) {
  if (inner.codomain.get() != outer.domain.get() &&
      !inner.codomain->same_table(*outer.domain))
    throw CodomainMismatch("compose: inner codomain differs from outer domain");
  std::vector<int> images(inner.domain->order());
  for (int a = 0; a < inner.domain->order(); ++a)
    images[a] = outer.images[inner.images[a]];
  return Hom::make(inner.domain, outer.codomain, std::move(images));
}

ActionTable ActionTable::make(GroupPtr actor, GroupPtr target,
                              std::vector<std::vector<int>> act) {
  if (!actor || !target) throw InvalidAction("action: null group");
  int nh = actor->order(), na = target->order();
  if (static_cast<int>(act.size()) != nh)
    throw InvalidAction("action: table has wrong actor size");
  for (const auto& row : act) {
    if (static_cast<int>(row.size()) != na)
      throw InvalidAction("action: table has wrong target size");
    std::vector<char> hit(na, 0);
    for (int v : row) {
      if (v < 0 || v >= na || hit[v])
        throw InvalidAction("action: row is not a permutation");
      hit[v] = 1;
    }
    for (int a = 0; a < na; ++a)
      for (int b = 0; b < na; ++b)
        if (row[target->mul(a, b)] != target->mul(row[a], row[b]))
          throw InvalidAction("action: row is not an automorphism");
  }
  for (int a = 0; a < na; ++a)
    if (act[0][a] != a) throw InvalidAction("action: identity must act trivially");
  for (int h1 = 0; h1 < nh; ++h1)
    for (int h2 = 0; h2 < nh; ++h2)
      for (int a = 0; a < na; ++a)
        if (act[actor->mul(h1, h2)][a] != act[h1][act[h2][a]])
          throw InvalidAction("action: not a left action (composition fails)");
  ActionTable t;
  t.actor = std::move(actor);
  t.target = std::move(target);
  t.act = std::move(act);
  return t;
}

ActionTable trivial_action(const GroupPtr& actor, const GroupPtr& target) {
  std::vector<int> id(target->order());
  std::iota(id.begin(), id.end(), 0);
  std::vector<std::vector<int>> act(actor->order(), id);
  return ActionTable::make(actor, target, std::move(act));
}

ActionTable inversion_action(const GroupPtr& actor, const GroupPtr& target) {
  if (!target->is_abelian())
    throw InvalidAction("inversion action: target must be abelian");
  if (!actor->is_cyclic() || actor->order() % 2 != 0)
    throw InvalidAction("inversion action: actor must be cyclic of even order");
  // actor is Z(2k) in its canonical indexing, so index parity is the mod-2 hom
  std::vector<std::vector<int>> act(actor->order());
  for (int h = 0; h < actor->order(); ++h) {
    act[h].resize(target->order());
    for (int a = 0; a < target->order(); ++a)
      act[h][a] = (h % 2 == 1) ? target->inv(a) : a;
  }
  return ActionTable::make(actor, target, std::move(act));
}

GroupPtr make_cyclic(int n, int order_cap) {
  if (n < 1) throw InvalidParameter("Z(n): n must be positive");
  check_cap(n, order_cap, "Z(" + std::to_string(n) + ")");
  std::vector<int> mul(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) mul[a * n + b] = (a + b) % n;
  return GroupTable::create("Z(" + std::to_string(n) + ")", n, std::move(mul),
                            {}, order_cap);
}

ProductGroup make_product(const GroupPtr& g, const GroupPtr& k, int order_cap) {
  long long n = static_cast<long long>(g->order()) * k->order();
  std::string label = g->label() + "x" + k->label();
  if (n > kMaxOrderCap)
    throw OrderCapExceeded(label + ": order " + std::to_string(n) +
                           " exceeds the cap of " + std::to_string(order_cap));
  check_cap(static_cast<int>(n), order_cap, label);
  int ng = g->order(), nk = k->order(), np = static_cast<int>(n);
  std::vector<int> mul(static_cast<std::size_t>(np) * np);
  for (int a = 0; a < np; ++a)
    for (int b = 0; b < np; ++b) {
      int ga = a / nk, ka = a % nk, gb = b / nk, kb = b % nk;
      mul[static_cast<std::size_t>(a) * np + b] =
          g->mul(ga, gb) * nk + k->mul(ka, kb);
    }
  std::vector<std::string> names(np);
  for (int a = 0; a < np; ++a)
    names[a] = "(" + g->name(a / nk) + "," + k->name(a % nk) + ")";
  GroupPtr p = GroupTable::create(label, np, std::move(mul), std::move(names),
                                  order_cap);
  std::vector<int> pi1(np), pi2(np), i1(ng), i2(nk);
  for (int a = 0; a < np; ++a) {
    pi1[a] = a / nk;
    pi2[a] = a % nk;
  }
  for (int a = 0; a < ng; ++a) i1[a] = a * nk;
  for (int a = 0; a < nk; ++a) i2[a] = a;
  ProductGroup out{p, Hom::make(p, g, std::move(pi1)),
                   Hom::make(p, k, std::move(pi2)),
                   Hom::make(g, p, std::move(i1)),
                   Hom::make(k, p, std::move(i2))};
  return out;
}

GroupPtr make_dihedral(int n, int order_cap) {
  if (n < 1) throw InvalidParameter("D(n): n must be positive");
  std::string label = "D(" + std::to_string(n) + ")";
  check_cap(2 * n, order_cap, label);
  int np = 2 * n;
  // index b·n + a means r^a s^b; s r^a s = r^-a
  auto idx = [&](int a, int b) { return b * n + a; };
  std::vector<int> mul(np * np);
  for (int a1 = 0; a1 < n; ++a1)
    for (int b1 = 0; b1 < 2; ++b1)
      for (int a2 = 0; a2 < n; ++a2)
        for (int b2 = 0; b2 < 2; ++b2) {
          int a = b1 == 0 ? (a1 + a2) % n : (a1 - a2 % n + n) % n;
          mul[idx(a1, b1) * np + idx(a2, b2)] = idx(a, b1 ^ b2);
        }
  std::vector<std::string> names(np);
  for (int a = 0; a < n; ++a) {
    names[idx(a, 0)] = a == 0 ? "1" : "r^" + std::to_string(a);
    names[idx(a, 1)] = a == 0 ? "s" : "s·r^" + std::to_string(a);
  }
  return GroupTable::create(label, np, std::move(mul), std::move(names),
                            order_cap);
}

GroupPtr make_quaternion8(int order_cap) {
  check_cap(8, order_cap, "Q8");
  // base quaternions e,i,j,k at 0..3; index s·4 + b means (−1)^s · base b
  // products of bases: (sign, base)
  static const int sign_tbl[4][4] = {
      {0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  static const int base_tbl[4][4] = {
      {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  std::vector<int> mul(64);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int s1 = a / 4, b1 = a % 4, s2 = b / 4, b2 = b % 4;
      int s = s1 ^ s2 ^ sign_tbl[b1][b2];
      mul[a * 8 + b] = s * 4 + base_tbl[b1][b2];
    }
  std::vector<std::string> names = {"1", "i", "j", "k", "-1", "-i", "-j", "-k"};
  return GroupTable::create("Q8", 8, std::move(mul), std::move(names),
                            order_cap);
}

namespace {

std::vector<std::vector<int>> permutations_lex(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

bool perm_even(const std::vector<int>& p) {
  int inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inversions;
  return inversions % 2 == 0;
}

std::string cycle_name(const std::vector<int>& p) {
  int n = static_cast<int>(p.size());
  std::vector<char> seen(n, 0);
  std::string out;
  for (int i = 0; i < n; ++i) {
    if (seen[i] || p[i] == i) continue;
    out += "(";
    int j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = 1;
      if (!first) out += " ";
      out += std::to_string(j);
      first = false;
      j = p[j];
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

GroupPtr perm_group(std::string label, std::vector<std::vector<int>> perms,
                    int order_cap) {
  int n = static_cast<int>(perms.size());
  check_cap(n, order_cap, label);
  std::vector<std::vector<int>> sorted = perms;  // already lex sorted by build
  std::vector<int> mul(static_cast<std::size_t>(n) * n);
  auto index_of = [&](const std::vector<int>& p) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), p);
    return static_cast<int>(it - sorted.begin());
  };
  int deg = static_cast<int>(perms[0].size());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::vector<int> c(deg);
      for (int x = 0; x < deg; ++x) c[x] = perms[a][perms[b][x]];
      mul[static_cast<std::size_t>(a) * n + b] = index_of(c);
    }
  std::vector<std::string> names(n);
  for (int a = 0; a < n; ++a) names[a] = cycle_name(perms[a]);
  return GroupTable::create(std::move(label), n, std::move(mul),
                            std::move(names), order_cap);
}

}  // namespace

GroupPtr make_symmetric(int n, int order_cap) {
  if (n < 1 || n > 5)
    throw InvalidParameter("S(n): n must be between 1 and 5");
  return perm_group("S(" + std::to_string(n) + ")", permutations_lex(n),
                    order_cap);
}

GroupPtr make_alternating(int n, int order_cap) {
  if (n < 1 || n > 5)
    throw InvalidParameter("A(n): n must be between 1 and 5");
  std::vector<std::vector<int>> perms;
  for (auto& p : permutations_lex(n))
    if (perm_even(p)) perms.push_back(std::move(p));
  return perm_group("A(" + std::to_string(n) + ")", std::move(perms),
                    order_cap);
}

GroupPtr make_elementary_abelian(int p, int k, int order_cap) {
  if (p < 2) throw InvalidParameter("E(p,k): p must be prime");
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) throw InvalidParameter("E(p,k): p must be prime");
  if (k < 1) throw InvalidParameter("E(p,k): k must be positive");
  long long n = 1;
  std::string label = "E(" + std::to_string(p) + "," + std::to_string(k) + ")";
  for (int i = 0; i < k; ++i) {
    n *= p;
    if (n > kMaxOrderCap)
      throw OrderCapExceeded(label + ": order exceeds the cap");
  }
  check_cap(static_cast<int>(n), order_cap, label);
  int np = static_cast<int>(n);
  std::vector<int> mul(static_cast<std::size_t>(np) * np);
  for (int a = 0; a < np; ++a)
    for (int b = 0; b < np; ++b) {
      int r = 0, x = a, y = b, base = 1;
      for (int i = 0; i < k; ++i) {
        r += (x % p + y % p) % p * base;
        x /= p;
        y /= p;
        base *= p;
      }
      mul[static_cast<std::size_t>(a) * np + b] = r;
    }
  std::vector<std::string> names(np);
  for (int a = 0; a < np; ++a) {
    std::string s = "(";
    int x = a;
    std::vector<int> digits(k);
    for (int i = 0; i < k; ++i) {
      digits[i] = x % p;
      x /= p;
    }
    // most significant digit first, matching the index formula
    for (int i = k - 1; i >= 0; --i) {
      s += std::to_string(digits[i]);
      if (i > 0) s += ",";
    }
    names[a] = s + ")";
  }
  return GroupTable::create(label, np, std::move(mul), std::move(names),
                            order_cap);
}

SemidirectGroup make_semidirect(const GroupPtr& a, const GroupPtr& h,
                                const ActionTable& act, int order_cap) {
  if (!act.actor->same_table(*h) || !act.target->same_table(*a))
    throw InvalidAction("semidirect: action does not match the factors");
  long long n = static_cast<long long>(a->order()) * h->order();
  std::string label = "sd(" + a->label() + "," + h->label() + ")";
  if (n > kMaxOrderCap)
    throw OrderCapExceeded(label + ": order exceeds the cap");
  check_cap(static_cast<int>(n), order_cap, label);
  int na = a->order(), nh = h->order(), np = static_cast<int>(n);
  auto idx = [&](int x, int y) { return x * nh + y; };
  std::vector<int> mul(static_cast<std::size_t>(np) * np);
  for (int a1 = 0; a1 < na; ++a1)
    for (int h1 = 0; h1 < nh; ++h1)
      for (int a2 = 0; a2 < na; ++a2)
        for (int h2 = 0; h2 < nh; ++h2)
          mul[static_cast<std::size_t>(idx(a1, h1)) * np + idx(a2, h2)] =
              idx(a->mul(a1, act.act[h1][a2]), h->mul(h1, h2));
  std::vector<std::string> names(np);
  for (int x = 0; x < na; ++x)
    for (int y = 0; y < nh; ++y)
      names[idx(x, y)] = "(" + a->name(x) + "|" + h->name(y) + ")";
  GroupPtr p = GroupTable::create(label, np, std::move(mul), std::move(names),
                                  order_cap);
  std::vector<int> pi2(np), i2(nh);
  for (int x = 0; x < np; ++x) pi2[x] = x % nh;
  for (int y = 0; y < nh; ++y) i2[y] = y;
  return SemidirectGroup{p, Hom::make(p, h, std::move(pi2)),
                         Hom::make(h, p, std::move(i2))};
}

}  // namespace sectio
