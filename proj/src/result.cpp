// Result documents and their from-scratch revalidation.
//
// Revalidation re-evaluates the input expressions recorded in the document
// and re-checks every claim a witness makes: member lists are closed
// subgroups, unions cover, sections are multiplicative and satisfy
// f ∘ s = incl, cochains actually cobound.  It does not re-run any search,
// so it cannot confirm minimality or non-existence — those are the engine's
// theorems, exercised by the verify harness instead.

#include "sectio/result.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "sectio/cohomology.hpp"

namespace sectio {

namespace {

[[noreturn]] void bad(const std::string& msg) {
  throw Error("revalidate: " + msg);
}

void req(bool ok, const std::string& msg) {
  if (!ok) bad(msg);
}

std::vector<int> int_vector(const Json& j) {
  std::vector<int> out;
  for (const auto& v : j) out.push_back(v.get<int>());
  return out;
}

ExtInt ext_from_json(const Json& j) {
  if (j.is_string()) {
    req(j.get<std::string>() == "infinite", "unknown extended value");
    return ExtInt::infinity();
  }
  return ExtInt::of(j.get<int>());
}

EvalOptions doc_eval_options(const Json& doc, const EvalOptions& fallback) {
  if (!doc.contains("config")) return fallback;
  const Json& c = doc["config"];
  EvalOptions o = fallback;
  if (c.contains("max_order")) o.order_cap = c["max_order"].get<int>();
  if (c.contains("hom_budget")) o.hom_budget = c["hom_budget"].get<long long>();
  return o;
}

// members lists must be closed subgroups of g; returns them.
std::vector<Subgroup> check_subgroup_list(const GroupPtr& g, const Json& arr) {
  std::vector<Subgroup> out;
  for (const auto& m : arr) out.push_back(subgroup_from_members(g, int_vector(m)));
  return out;
}

ElemMask union_mask(const std::vector<Subgroup>& subs) {
  ElemMask u;
  for (const auto& s : subs) u |= s.mask;
  return u;
}

ElemMask full_mask(const GroupPtr& g) {
  ElemMask u;
  for (int i = 0; i < g->order(); ++i) u.set(i);
  return u;
}

// {"members": [...], "images": [...]} as a multiplicative section of f over
// the subgroup with those members; images must additionally stay inside
// `inside` when provided.
void check_section(const Hom& f, const Json& js,
                   const std::vector<int>& expected_members,
                   const ElemMask* inside) {
  std::vector<int> members = int_vector(js["members"]);
  req(members == expected_members, "section members do not match its subgroup");
  std::vector<int> images = int_vector(js["images"]);
  req(images.size() == members.size(), "section images length mismatch");
  Subgroup sub = subgroup_from_members(f.codomain, members);
  EmbeddedGroup emb = as_group(sub);
  Hom s = Hom::make(emb.group, f.domain, images);  // validates multiplicativity
  for (std::size_t i = 0; i < members.size(); ++i) {
    req(f.images[s.images[i]] == members[i], "section does not invert the hom");
    if (inside) req(inside->test(s.images[i]), "section leaves its subgroup");
  }
}

void check_group_cover(const GroupPtr& g, const Json& payload,
                       bool require_cyclic) {
  ExtInt value = ext_from_json(payload.at("value"));
  if (value.is_inf()) {
    req(!payload.contains("witness") || payload["witness"].is_null(),
        "infinite value with a witness");
    return;
  }
  auto subs = check_subgroup_list(g, payload.at("witness"));
  req(static_cast<int>(subs.size()) == value.value,
      "witness size differs from value");
  for (const auto& s : subs) {
    req(s.is_proper(), "cover member is the whole group");
    if (require_cyclic) {
      bool cy = false;
      for (int m : s.members) cy = cy || g->elem_order(m) == s.size();
      req(cy, "cover member is not cyclic");
    }
  }
  req(union_mask(subs) == full_mask(g), "union does not cover the group");
}

void check_sec_result(const Hom& f, const Json& payload) {
  ExtInt value = ext_from_json(payload.at("value"));
  if (value.is_inf()) return;
  auto subs = check_subgroup_list(f.codomain, payload.at("witness"));
  req(static_cast<int>(subs.size()) == value.value,
      "witness size differs from value");
  req(union_mask(subs) == full_mask(f.codomain),
      "union does not cover the codomain");
  const Json& sections = payload.at("sections");
  req(sections.size() == subs.size(), "one section per cover member required");
  for (std::size_t i = 0; i < subs.size(); ++i) {
    req(subs[i].is_proper(), "cover member is the whole codomain");
    check_section(f, sections[i], subs[i].members, nullptr);
  }
}

void check_sigma_hom_result(const Hom& f, const Json& payload) {
  ExtInt value = ext_from_json(payload.at("value"));
  if (value.is_inf()) return;
  const GroupPtr& g = f.domain;
  auto subs = check_subgroup_list(g, payload.at("witness"));
  req(static_cast<int>(subs.size()) == value.value,
      "witness size differs from value");
  req(union_mask(subs) == full_mask(g), "union does not cover the domain");
  Subgroup ker = kernel(f);
  const Json& sections = payload.at("sections");
  req(sections.size() == subs.size(), "one section per cover member required");
  for (std::size_t i = 0; i < subs.size(); ++i) {
    const auto& s = subs[i];
    req(s.is_proper(), "cover member is the whole domain");
    req(ker.subset_of(s) && s.size() > ker.size(),
        "cover member does not strictly contain the kernel");
    Subgroup img = image_subgroup(f, s);
    check_section(f, sections[i], img.members, &s.mask);
  }
}

void check_poset(const Hom& f, const Json& payload) {
  const GroupPtr& h = f.codomain;
  const Json& elements = payload.at("elements");
  std::vector<Subgroup> subs;
  for (const auto& el : elements)
    subs.push_back(subgroup_from_members(h, int_vector(el.at("members"))));
  ElemMask max_union;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    req(subs[i].is_proper(), "poset element is the whole codomain");
    bool maximal = true;
    for (std::size_t j = 0; j < subs.size(); ++j)
      if (i != j && subs[i].subset_of(subs[j]) && !subs[i].same_set(subs[j]))
        maximal = false;
    req(elements[i].at("maximal").get<bool>() == maximal,
        "maximality flag is wrong");
    if (maximal) max_union |= subs[i].mask;
    const Json& sect = elements[i].at("section");
    if (!sect.is_null()) check_section(f, sect, subs[i].members, nullptr);
  }
  ExtInt cover_number = ext_from_json(payload.at("cover_number"));
  req(cover_number.is_inf() != (max_union == full_mask(h)),
      "cover_number finiteness contradicts the maximal elements' union");
}

void check_cocycle_doc(const Hom& f, const Json& doc) {
  ExtensionData ed = build_cocycle(f);
  Cocycle c = ed.cocycle;
  const Json& input = doc.at("input");
  if (input.contains("subgroup") && !input["subgroup"].is_null()) {
    Subgroup l =
        generated_subgroup(f.codomain, int_vector(input["subgroup"]));
    c = restrict_cocycle(ed.cocycle, l);
  }
  const Json& payload = doc.at("cocycle");
  req(int_vector(payload.at("kernel")) == ed.transversal.kernel.incl.images,
      "kernel members changed");
  const Json& values = payload.at("values");
  int n = c.base->order();
  req(static_cast<int>(values.size()) == n, "values row count changed");
  for (int x = 0; x < n; ++x)
    req(int_vector(values[x]) == c.values[x], "cocycle values changed");
  const Json& cb = doc.at("coboundary");
  if (cb.at("trivial").get<bool>() && !cb.at("cochain").is_null()) {
    std::vector<int> cochain = int_vector(cb["cochain"]);
    req(static_cast<int>(cochain.size()) == n, "cochain length mismatch");
    req(cochain[0] == 0, "cochain not normalized");
    const GroupTable& a = *c.coeff;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        int xy = c.base->mul(x, y);
        int lhs = a.mul(a.mul(c.action(x, cochain[y]), a.inv(cochain[xy])),
                        cochain[x]);
        req(lhs == c.values[x][y], "cochain does not cobound the cocycle");
      }
  }
}

}  // namespace

Json document_skeleton(const std::string& command, const Json& input,
                       const RunConfig& cfg) {
  Json d;
  d["schema"] = kSchemaName;
  d["command"] = command;
  d["input"] = input;
  Json c;
  c["max_order"] = cfg.max_order;
  c["hom_budget"] = cfg.hom_budget;
  c["cover_budget"] = cfg.cover_budget;
  c["coboundary_budget"] = cfg.coboundary_budget;
  c["seed"] = cfg.seed;
  c["jobs"] = cfg.jobs;
  d["config"] = c;
  return d;
}

void finish_document(Json& doc, const std::string& status, long long timing_us) {
  doc["status"] = status;
  doc["timing_us"] = timing_us;
}

Json ext_to_json(const ExtInt& v) {
  if (v.is_inf()) return Json("infinite");
  return Json(v.value);
}

Json subgroup_members_json(const Subgroup& s) { return Json(s.members); }

Json cover_json(const std::vector<Subgroup>& cover) {
  Json arr = Json::array();
  for (const auto& s : cover) arr.push_back(subgroup_members_json(s));
  return arr;
}

Json section_json(const std::vector<int>& members, const Hom& s) {
  Json j;
  j["members"] = members;
  j["images"] = s.images;
  return j;
}

Json cover_result_json(const CoverResult& r) {
  Json j;
  j["value"] = ext_to_json(r.value);
  j["reason"] = reason_name(r.reason);
  if (r.reason_witness) j["reason_witness"] = *r.reason_witness;
  if (!r.value.is_inf()) {
    j["witness"] = cover_json(r.witness);
    if (!r.sections.empty()) {
      Json arr = Json::array();
      for (std::size_t i = 0; i < r.sections.size(); ++i)
        arr.push_back(section_json(r.witness[i].members, r.sections[i]));
      j["sections"] = arr;
    }
  }
  return j;
}

Json hom_cover_result_json(const Hom& f, const CoverResult& r) {
  Json j;
  j["value"] = ext_to_json(r.value);
  j["reason"] = reason_name(r.reason);
  if (r.reason_witness) j["reason_witness"] = *r.reason_witness;
  if (!r.value.is_inf()) {
    j["witness"] = cover_json(r.witness);
    Json arr = Json::array();
    for (std::size_t i = 0; i < r.sections.size(); ++i) {
      Subgroup img = image_subgroup(f, r.witness[i]);
      arr.push_back(section_json(img.members, r.sections[i]));
    }
    j["sections"] = arr;
  }
  return j;
}

std::string serialize_document(const Json& doc) { return doc.dump(2) + "\n"; }

Json parse_document(const std::string& text) {
  return Json::parse(text);
}

void revalidate_document(const Json& doc, const EvalOptions& opts) {
  req(doc.at("schema").get<std::string>() == kSchemaName, "unknown schema");
  if (doc.contains("status") && doc["status"].get<std::string>() != "ok")
    return;  // error documents carry no witnesses
  std::string cmd = doc.at("command").get<std::string>();
  EvalOptions eopts = doc_eval_options(doc, opts);
  const Json& input = doc.at("input");

  if (cmd == "sigma" || cmd == "sigma-cyclic" || cmd == "covers") {
    GroupPtr g =
        eval_group(parse_group(input.at("group").get<std::string>()), eopts);
    if (cmd == "covers") {
      ExtInt sig = ext_from_json(doc.at("sigma"));
      const Json& covers = doc.at("covers");
      if (sig.is_inf()) {
        req(covers.empty(), "infinite sigma with covers listed");
        return;
      }
      for (const auto& cov : covers) {
        auto subs = check_subgroup_list(g, cov);
        req(static_cast<int>(subs.size()) == sig.value,
            "cover size differs from sigma");
        for (const auto& s : subs)
          req(s.is_proper(), "cover member is the whole group");
        req(union_mask(subs) == full_mask(g), "union does not cover");
      }
      return;
    }
    check_group_cover(g, doc, cmd == "sigma-cyclic");
    return;
  }

  if (cmd == "sec" || cmd == "sigma-hom" || cmd == "poset" ||
      cmd == "cocycle") {
    Hom f = eval_hom(parse_hom(input.at("hom").get<std::string>()), eopts);
    if (cmd == "sec") check_sec_result(f, doc);
    else if (cmd == "sigma-hom") check_sigma_hom_result(f, doc);
    else if (cmd == "poset") check_poset(f, doc);
    else check_cocycle_doc(f, doc);
    return;
  }

  // describe / hpoint / verify / verify-batch / search carry no witnesses
}

}  // namespace sectio
