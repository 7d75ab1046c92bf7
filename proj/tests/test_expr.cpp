#include <doctest.h>

#include <string>

#include "sectio/errors.hpp"
#include "sectio/expr.hpp"
#include "sectio/group.hpp"
#include "sectio/subgroup.hpp"

using namespace sectio;

TEST_SUITE("expr") {

TEST_CASE("group round trips") {
  for (const char* text :
       {"Z(6)", "Q8", "D(4)", "S(3)", "A(4)", "E(2,3)",
        "Z(2)xZ(3)xZ(4)", "sd(Z(3),Z(2),inv)", "sd(E(3,2),Z(2),inv)",
        "quot(Q8,[4])", "quot(Z(2)xZ(4),[2,4,6])",
        "sd(Z(5),Z(4),inv)xZ(2)"}) {
    GroupExpr e = parse_group(text);
    CHECK(to_string(e) == text);
    CHECK(parse_group(to_string(e)) == e);
  }
}

TEST_CASE("whitespace and parens are sugar") {
  CHECK(parse_group(" Z( 12 ) ") == parse_group("Z(12)"));
  CHECK(parse_group("(Z(2)xZ(3))xZ(4)") == parse_group("Z(2)xZ(3)xZ(4)"));
  CHECK(parse_group("Z(2)x(Z(3)xZ(4))") == parse_group("Z(2)xZ(3)xZ(4)"));
  CHECK(parse_group("quot( Q8 , [ 4 ] )") == parse_group("quot(Q8,[4])"));
  CHECK(to_string(parse_group("( Q8 )")) == "Q8");
}

TEST_CASE("syntax errors carry byte offsets") {
  auto offset_of = [](const char* text) -> std::size_t {
    try {
      parse_group(text);
    } catch (const SyntaxError& e) {
      return e.offset;
    }
    return static_cast<std::size_t>(-1);
  };
  CHECK(offset_of("Z(x)") == 2);
  CHECK(offset_of("Z(4") == 3);
  CHECK(offset_of("Z(4)xx") == 5);
  CHECK(offset_of("W(4)") == 0);
  CHECK(offset_of("Z(4) junk") == 5);
  CHECK(offset_of("sd(Z(3),Z(2),flip)") == 13);
  CHECK(offset_of("quot(Q8,4)") == 8);
}

TEST_CASE("input size is capped") {
  std::string big = "Z(2)";
  while (big.size() < 5000) big += "xZ(2)";
  CHECK_THROWS_AS(parse_group(big), InvalidParameter);
}

TEST_CASE("hom round trips") {
  for (const char* text :
       {"id(Q8)", "quot(Q8,[4])", "proj(Z(2)xZ(2),0)", "incl(Z(2)xZ(2),1)",
        "map(Z(4),Z(2),[1])", "ev(E(2,2),E(2,2),2)", "triv(Q8,Z(2))",
        "proj(Z(2)xZ(3)xZ(4),2)"}) {
    HomSpec s = parse_hom(text);
    CHECK(to_string(s) == text);
    CHECK(parse_hom(to_string(s)) == s);
  }
}

TEST_CASE("group evaluation") {
  EvalOptions opt;
  CHECK(eval_group(parse_group("Z(6)"), opt)->order() == 6);
  CHECK(eval_group(parse_group("E(2,3)"), opt)->exponent() == 2);
  GroupPtr flat = eval_group(parse_group("Z(2)xZ(3)xZ(4)"), opt);
  CHECK(flat->order() == 24);
  CHECK(flat->is_cyclic() == false);  // gcd(2,4) != 1
  GroupPtr sd = eval_group(parse_group("sd(Z(3),Z(2),inv)"), opt);
  CHECK(sd->order() == 6);
  CHECK_FALSE(sd->is_abelian());
  GroupPtr tr = eval_group(parse_group("sd(Z(3),Z(2),trivial)"), opt);
  CHECK(tr->is_abelian());
  GroupPtr quo = eval_group(parse_group("quot(Q8,[4])"), opt);
  CHECK(quo->order() == 4);
  CHECK(quo->exponent() == 2);
  CHECK_THROWS_AS(eval_group(parse_group("Z(100)"), opt), OrderCapExceeded);
  // a non-normal generator set fails elaboration, not parsing
  CHECK_THROWS_AS(eval_group(parse_group("quot(S(3),[1])"), opt),
                  ElaborationError);
}

TEST_CASE("hom evaluation") {
  EvalOptions opt;
  Hom id = eval_hom(parse_hom("id(Q8)"), opt);
  CHECK(id.is_injective());
  CHECK(id.domain->order() == 8);

  Hom q = eval_hom(parse_hom("quot(Q8,[4])"), opt);
  CHECK(q.is_surjective());
  CHECK(q.codomain->order() == 4);

  Hom p0 = eval_hom(parse_hom("proj(Z(2)xZ(3),0)"), opt);
  CHECK(p0.domain->order() == 6);
  CHECK(p0.codomain->order() == 2);
  // index of (g,k) is g*|K|+k, so element 4 = (1,1) projects to 1 and 1
  Hom p1 = eval_hom(parse_hom("proj(Z(2)xZ(3),1)"), opt);
  CHECK(p0.images[4] == 1);
  CHECK(p1.images[4] == 1);
  CHECK(p1.images[2] == 2);  // (0,2) ↦ 2

  Hom i1 = eval_hom(parse_hom("incl(Z(2)xZ(3),1)"), opt);
  CHECK(i1.domain->order() == 3);
  for (int a = 0; a < 3; ++a) CHECK(p1.images[i1.images[a]] == a);

  // middle factor of a triple product
  Hom pm = eval_hom(parse_hom("proj(Z(2)xZ(3)xZ(4),1)"), opt);
  CHECK(pm.domain->order() == 24);
  CHECK(pm.codomain->order() == 3);
  Hom im = eval_hom(parse_hom("incl(Z(2)xZ(3)xZ(4),1)"), opt);
  for (int a = 0; a < 3; ++a) CHECK(pm.images[im.images[a]] == a);

  Hom m = eval_hom(parse_hom("map(Z(4),Z(2),[1])"), opt);
  CHECK(m.images == std::vector<int>{0, 1, 0, 1});
  CHECK_THROWS_AS(eval_hom(parse_hom("map(Z(4),Z(3),[1])"), opt),
                  ElaborationError);  // 3 does not divide 4, cannot extend

  Hom ev = eval_hom(parse_hom("ev(E(2,2),E(2,2),2)"), opt);
  CHECK(ev.domain->order() == 16);
  CHECK(ev.is_surjective());

  Hom tv = eval_hom(parse_hom("triv(Q8,Z(2))"), opt);
  CHECK_FALSE(tv.is_surjective());

  CHECK_THROWS_AS(eval_hom(parse_hom("proj(Z(2)xZ(2),2)"), opt),
                  ElaborationError);
  CHECK_THROWS_AS(eval_hom(parse_hom("proj(Q8,0)"), opt), ElaborationError);
  CHECK_THROWS_AS(eval_hom(parse_hom("ev(Z(4),S(3),0)"), opt),
                  ElaborationError);
}

TEST_CASE("hom spec parse errors") {
  CHECK_THROWS_AS(parse_hom("id"), SyntaxError);
  CHECK_THROWS_AS(parse_hom("frob(Z(2))"), SyntaxError);
  CHECK_THROWS_AS(parse_hom("proj(Z(2)xZ(2))"), SyntaxError);
  CHECK_THROWS_AS(parse_hom("map(Z(4),Z(2),[1,2,3,4,5)"), SyntaxError);
}

}  // TEST_SUITE
