#pragma once
// Textual constructor language for groups and homomorphisms.
//
//   expr   := term ('x' term)*
//   term   := 'Z(' int ')' | 'D(' int ')' | 'Q8' | 'S(' int ')' | 'A(' int ')'
//           | 'E(' int ',' int ')'
//           | 'sd(' expr ',' expr ',' action ')'      action: 'inv' | 'trivial'
//           | 'quot(' expr ',' '[' int-list ']' ')'
//           | '(' expr ')'
//
//   hom    := 'id(' expr ')'
//           | 'quot(' expr ',' '[' int-list ']' ')'
//           | 'proj(' expr ',' int ')'                0-based factor index
//           | 'incl(' expr ',' int ')'
//           | 'map(' expr ',' expr ',' '[' int-list ']' ')'
//           | 'ev(' expr ',' expr ',' int ')'
//           | 'triv(' expr ',' expr ')'
//
// Whitespace is insignificant.  Parse failures throw SyntaxError with the
// byte offset of the offending character.  Structural problems that only
// show up during evaluation (non-normal quotient generators, images that
// fail to extend to a hom, ...) throw ElaborationError; order-cap breaches
// keep their own type.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sectio/budget.hpp"
#include "sectio/group.hpp"
#include "sectio/subgroup.hpp"

namespace sectio {

struct GroupExpr {
  enum class Kind {
    Cyclic,             // Z(n)           n
    Dihedral,           // D(n)           n
    Quaternion,         // Q8
    Symmetric,          // S(n)           n
    Alternating,        // A(n)           n
    ElementaryAbelian,  // E(p,k)         p, k
    Product,            // t1 x t2 x ...  children (flattened, length >= 2)
    Semidirect,         // sd(a, h, act)  children = {a, h}, action
    Quotient,           // quot(g, [..])  children = {g}, gens
  };

  Kind kind = Kind::Cyclic;
  int n = 0;
  int p = 0;
  int k = 0;
  std::vector<GroupExpr> children;
  std::vector<int> gens;
  std::string action;

  bool operator==(const GroupExpr&) const = default;
};

struct HomSpec {
  enum class Kind {
    Identity,   // id(g)
    Quotient,   // quot(g, [gens])
    Projection, // proj(g, i)      g must be a product; onto factor i
    Inclusion,  // incl(g, i)      factor i into the product g
    Map,        // map(dom, cod, [images])  images for dom's canonical generators
    Evaluation, // ev(g, a, elt)   Hom(g,a) → a at elt; a must be abelian
    Trivial,    // triv(dom, cod)  everything to the identity
  };

  Kind kind = Kind::Identity;
  GroupExpr domain;
  std::optional<GroupExpr> codomain;
  std::vector<int> data;  // quotient gens or generator images
  int index = -1;         // factor index or evaluation element

  bool operator==(const HomSpec&) const = default;
};

// Parsers reject inputs longer than kMaxInputBytes up front.
inline constexpr std::size_t kMaxInputBytes = 4096;

GroupExpr parse_group(const std::string& text);
HomSpec parse_hom(const std::string& text);

// Canonical printing; parse_group(to_string(e)) == e and likewise for homs.
std::string to_string(const GroupExpr& e);
std::string to_string(const HomSpec& s);

struct EvalOptions {
  int order_cap = kDefaultOrderCap;
  long long hom_budget = kDefaultHomSearchBudget;
};

GroupPtr eval_group(const GroupExpr& e, const EvalOptions& opts = {});
Hom eval_hom(const HomSpec& s, const EvalOptions& opts = {});

}  // namespace sectio
