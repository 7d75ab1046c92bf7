// Recursive-descent parser and evaluator for the constructor language.
//
// Tokens are matched directly off the byte string with whitespace skipped
// between lexical units, so offsets in SyntaxError are exact byte positions.
// Products are flattened at parse time: parentheses only group, they never
// change the resulting table (mixed-radix indexing is associative), so
// (AxB)xC, Ax(BxC) and AxBxC all parse to one flat product whose factors are
// what proj/incl indices address.

#include "sectio/expr.hpp"

#include <cctype>
#include <cstring>
#include <string>
#include <utility>
#include <vector>

#include "sectio/homsearch.hpp"

namespace sectio {

namespace {

struct Parser {
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }

  [[noreturn]] void fail(const std::string& expected) {
    throw SyntaxError(pos, expected);
  }

  bool lit(const char* w) {
    skip_ws();
    std::size_t n = std::strlen(w);
    if (s.compare(pos, n, w) == 0) {
      pos += n;
      return true;
    }
    return false;
  }

  void expect(const char* w, const char* what) {
    if (!lit(w)) fail(what);
  }

  bool peek(char c) {
    skip_ws();
    return pos < s.size() && s[pos] == c;
  }

  int integer() {
    skip_ws();
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
      fail("integer");
    long v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      v = v * 10 + (s[pos] - '0');
      if (v > 1'000'000) fail("integer below 1000000");
      ++pos;
    }
    return static_cast<int>(v);
  }

  std::vector<int> int_list() {
    expect("[", "'['");
    std::vector<int> out;
    if (lit("]")) return out;
    out.push_back(integer());
    while (lit(",")) out.push_back(integer());
    expect("]", "',' or ']'");
    return out;
  }

  std::string action_name() {
    if (lit("trivial")) return "trivial";
    if (lit("inv")) return "inv";
    fail("'inv' or 'trivial'");
  }

  GroupExpr term() {
    GroupExpr e;
    if (lit("quot")) {
      expect("(", "'('");
      e.kind = GroupExpr::Kind::Quotient;
      e.children.push_back(expr());
      expect(",", "','");
      e.gens = int_list();
      expect(")", "')'");
    } else if (lit("sd")) {
      expect("(", "'('");
      e.kind = GroupExpr::Kind::Semidirect;
      e.children.push_back(expr());
      expect(",", "','");
      e.children.push_back(expr());
      expect(",", "','");
      e.action = action_name();
      expect(")", "')'");
    } else if (lit("Q8")) {
      e.kind = GroupExpr::Kind::Quaternion;
    } else if (lit("Z")) {
      expect("(", "'('");
      e.kind = GroupExpr::Kind::Cyclic;
      e.n = integer();
      expect(")", "')'");
    } else if (lit("D")) {
      expect("(", "'('");
      e.kind = GroupExpr::Kind::Dihedral;
      e.n = integer();
      expect(")", "')'");
    } else if (lit("S")) {
      expect("(", "'('");
      e.kind = GroupExpr::Kind::Symmetric;
      e.n = integer();
      expect(")", "')'");
    } else if (lit("A")) {
      expect("(", "'('");
      e.kind = GroupExpr::Kind::Alternating;
      e.n = integer();
      expect(")", "')'");
    } else if (lit("E")) {
      expect("(", "'('");
      e.kind = GroupExpr::Kind::ElementaryAbelian;
      e.p = integer();
      expect(",", "','");
      e.k = integer();
      expect(")", "')'");
    } else if (lit("(")) {
      e = expr();
      expect(")", "')'");
    } else {
      fail("group expression");
    }
    return e;
  }

  static void append_factor(GroupExpr& prod, GroupExpr&& child) {
    if (child.kind == GroupExpr::Kind::Product) {
      for (auto& c : child.children) prod.children.push_back(std::move(c));
    } else {
      prod.children.push_back(std::move(child));
    }
  }

  GroupExpr expr() {
    GroupExpr first = term();
    if (!peek('x')) return first;
    GroupExpr prod;
    prod.kind = GroupExpr::Kind::Product;
    append_factor(prod, std::move(first));
    while (lit("x")) append_factor(prod, term());
    return prod;
  }

  HomSpec hom() {
    HomSpec h;
    if (lit("id")) {
      expect("(", "'('");
      h.kind = HomSpec::Kind::Identity;
      h.domain = expr();
      expect(")", "')'");
    } else if (lit("quot")) {
      expect("(", "'('");
      h.kind = HomSpec::Kind::Quotient;
      h.domain = expr();
      expect(",", "','");
      h.data = int_list();
      expect(")", "')'");
    } else if (lit("proj")) {
      expect("(", "'('");
      h.kind = HomSpec::Kind::Projection;
      h.domain = expr();
      expect(",", "','");
      h.index = integer();
      expect(")", "')'");
    } else if (lit("incl")) {
      expect("(", "'('");
      h.kind = HomSpec::Kind::Inclusion;
      h.domain = expr();
      expect(",", "','");
      h.index = integer();
      expect(")", "')'");
    } else if (lit("map")) {
      expect("(", "'('");
      h.kind = HomSpec::Kind::Map;
      h.domain = expr();
      expect(",", "','");
      h.codomain = expr();
      expect(",", "','");
      h.data = int_list();
      expect(")", "')'");
    } else if (lit("ev")) {
      expect("(", "'('");
      h.kind = HomSpec::Kind::Evaluation;
      h.domain = expr();
      expect(",", "','");
      h.codomain = expr();
      expect(",", "','");
      h.index = integer();
      expect(")", "')'");
    } else if (lit("triv")) {
      expect("(", "'('");
      h.kind = HomSpec::Kind::Trivial;
      h.domain = expr();
      expect(",", "','");
      h.codomain = expr();
      expect(")", "')'");
    } else {
      fail("homomorphism spec");
    }
    return h;
  }
};

void check_length(const std::string& text) {
  if (text.size() > kMaxInputBytes)
    throw InvalidParameter("input exceeds " + std::to_string(kMaxInputBytes) +
                           " bytes");
}

std::string join_ints(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out;
}

// Rewraps construction failures so callers can tell "the expression is
// wrong" (exit 2) from genuine search exhaustion; cap breaches stay
// themselves.
template <class F>
auto elaborate(const char* what, F&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const OrderCapExceeded&) {
    throw;
  } catch (const SearchBudgetExceeded&) {
    throw;
  } catch (const ElaborationError&) {
    throw;
  } catch (const Error& e) {
    throw ElaborationError(std::string(what) + ": " + e.what());
  }
}

struct ProductChain {
  std::vector<GroupPtr> factors;
  std::vector<GroupPtr> prefix;      // prefix[j] = f0 x ... x fj
  std::vector<ProductGroup> steps;   // steps[j]: prefix[j-1] × factors[j], j >= 1
};

ProductChain build_chain(const GroupExpr& e, const EvalOptions& opts) {
  ProductChain ch;
  for (const auto& c : e.children) ch.factors.push_back(eval_group(c, opts));
  ch.prefix.resize(ch.factors.size());
  ch.steps.resize(ch.factors.size());
  ch.prefix[0] = ch.factors[0];
  for (std::size_t j = 1; j < ch.factors.size(); ++j) {
    ch.steps[j] = elaborate("product", [&] {
      return make_product(ch.prefix[j - 1], ch.factors[j], opts.order_cap);
    });
    ch.prefix[j] = ch.steps[j].group;
  }
  return ch;
}

}  // namespace

GroupExpr parse_group(const std::string& text) {
  check_length(text);
  Parser p{text};
  GroupExpr e = p.expr();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("end of input");
  return e;
}

HomSpec parse_hom(const std::string& text) {
  check_length(text);
  Parser p{text};
  HomSpec h = p.hom();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("end of input");
  return h;
}

std::string to_string(const GroupExpr& e) {
  using K = GroupExpr::Kind;
  switch (e.kind) {
    case K::Cyclic:
      return "Z(" + std::to_string(e.n) + ")";
    case K::Dihedral:
      return "D(" + std::to_string(e.n) + ")";
    case K::Quaternion:
      return "Q8";
    case K::Symmetric:
      return "S(" + std::to_string(e.n) + ")";
    case K::Alternating:
      return "A(" + std::to_string(e.n) + ")";
    case K::ElementaryAbelian:
      return "E(" + std::to_string(e.p) + "," + std::to_string(e.k) + ")";
    case K::Product: {
      std::string out;
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        if (i) out += "x";
        out += to_string(e.children[i]);
      }
      return out;
    }
    case K::Semidirect:
      return "sd(" + to_string(e.children[0]) + "," +
             to_string(e.children[1]) + "," + e.action + ")";
    case K::Quotient:
      return "quot(" + to_string(e.children[0]) + ",[" + join_ints(e.gens) +
             "])";
  }
  throw Error("unreachable group expression kind");
}

std::string to_string(const HomSpec& s) {
  using K = HomSpec::Kind;
  switch (s.kind) {
    case K::Identity:
      return "id(" + to_string(s.domain) + ")";
    case K::Quotient:
      return "quot(" + to_string(s.domain) + ",[" + join_ints(s.data) + "])";
    case K::Projection:
      return "proj(" + to_string(s.domain) + "," + std::to_string(s.index) +
             ")";
    case K::Inclusion:
      return "incl(" + to_string(s.domain) + "," + std::to_string(s.index) +
             ")";
    case K::Map:
      return "map(" + to_string(s.domain) + "," + to_string(*s.codomain) +
             ",[" + join_ints(s.data) + "])";
    case K::Evaluation:
      return "ev(" + to_string(s.domain) + "," + to_string(*s.codomain) + "," +
             std::to_string(s.index) + ")";
    case K::Trivial:
      return "triv(" + to_string(s.domain) + "," + to_string(*s.codomain) +
             ")";
  }
  throw Error("unreachable hom spec kind");
}

GroupPtr eval_group(const GroupExpr& e, const EvalOptions& opts) {
  using K = GroupExpr::Kind;
  switch (e.kind) {
    case K::Cyclic:
      return elaborate("Z", [&] { return make_cyclic(e.n, opts.order_cap); });
    case K::Dihedral:
      return elaborate("D", [&] { return make_dihedral(e.n, opts.order_cap); });
    case K::Quaternion:
      return elaborate("Q8", [&] { return make_quaternion8(opts.order_cap); });
    case K::Symmetric:
      return elaborate("S", [&] { return make_symmetric(e.n, opts.order_cap); });
    case K::Alternating:
      return elaborate("A",
                       [&] { return make_alternating(e.n, opts.order_cap); });
    case K::ElementaryAbelian:
      return elaborate("E", [&] {
        return make_elementary_abelian(e.p, e.k, opts.order_cap);
      });
    case K::Product: {
      GroupPtr acc = eval_group(e.children[0], opts);
      for (std::size_t i = 1; i < e.children.size(); ++i) {
        GroupPtr next = eval_group(e.children[i], opts);
        acc = elaborate("product", [&] {
          return make_product(acc, next, opts.order_cap).group;
        });
      }
      return acc;
    }
    case K::Semidirect: {
      GroupPtr a = eval_group(e.children[0], opts);
      GroupPtr h = eval_group(e.children[1], opts);
      return elaborate("sd", [&] {
        ActionTable act = e.action == "inv" ? inversion_action(h, a)
                                            : trivial_action(h, a);
        return make_semidirect(a, h, act, opts.order_cap).group;
      });
    }
    case K::Quotient: {
      GroupPtr g = eval_group(e.children[0], opts);
      return elaborate("quot", [&] {
        Subgroup n = generated_subgroup(g, e.gens);
        return quotient(g, n).group;
      });
    }
  }
  throw Error("unreachable group expression kind");
}

Hom eval_hom(const HomSpec& s, const EvalOptions& opts) {
  using K = HomSpec::Kind;
  switch (s.kind) {
    case K::Identity:
      return identity_hom(eval_group(s.domain, opts));
    case K::Quotient: {
      GroupPtr g = eval_group(s.domain, opts);
      return elaborate("quot", [&] {
        Subgroup n = generated_subgroup(g, s.data);
        return quotient(g, n).q;
      });
    }
    case K::Projection:
    case K::Inclusion: {
      const bool proj = s.kind == K::Projection;
      const char* what = proj ? "proj" : "incl";
      if (s.domain.kind != GroupExpr::Kind::Product)
        throw ElaborationError(std::string(what) +
                               ": expression is not a product");
      int m = static_cast<int>(s.domain.children.size());
      if (s.index < 0 || s.index >= m)
        throw ElaborationError(std::string(what) + ": factor index " +
                               std::to_string(s.index) + " out of range (" +
                               std::to_string(m) + " factors)");
      ProductChain ch = build_chain(s.domain, opts);
      int i = s.index;
      if (proj) {
        Hom cur = identity_hom(ch.prefix.back());
        for (int j = m - 1; j > i; --j) cur = compose(ch.steps[j].pi1, cur);
        if (i > 0) cur = compose(ch.steps[i].pi2, cur);
        return cur;
      }
      Hom cur = i == 0 ? identity_hom(ch.factors[0]) : ch.steps[i].iota2;
      for (int j = std::max(i, 0) + 1; j < m; ++j)
        cur = compose(ch.steps[j].iota1, cur);
      return cur;
    }
    case K::Map: {
      GroupPtr dom = eval_group(s.domain, opts);
      GroupPtr cod = eval_group(*s.codomain, opts);
      std::vector<int> gens = canonical_generators(*dom);
      if (s.data.size() != gens.size())
        throw ElaborationError(
            "map: domain has " + std::to_string(gens.size()) +
            " canonical generators, got " + std::to_string(s.data.size()) +
            " images");
      for (int v : s.data)
        if (v < 0 || v >= cod->order())
          throw ElaborationError("map: image " + std::to_string(v) +
                                 " out of range");
      auto h = hom_from_generator_images(dom, cod, s.data, opts.hom_budget);
      if (!h)
        throw ElaborationError(
            "map: images do not extend to a homomorphism");
      return *h;
    }
    case K::Evaluation: {
      GroupPtr g = eval_group(s.domain, opts);
      GroupPtr a = eval_group(*s.codomain, opts);
      if (s.index < 0 || s.index >= g->order())
        throw ElaborationError("ev: element " + std::to_string(s.index) +
                               " out of range");
      return elaborate("ev", [&] {
        HomGroup hg = hom_group(g, a, opts.order_cap, opts.hom_budget);
        return evaluation_hom(hg, s.index);
      });
    }
    case K::Trivial: {
      GroupPtr dom = eval_group(s.domain, opts);
      GroupPtr cod = eval_group(*s.codomain, opts);
      return trivial_hom(dom, cod);
    }
  }
  throw Error("unreachable hom spec kind");
}

}  // namespace sectio
