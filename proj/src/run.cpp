// CLI dispatch.  Every command produces a result document; --json prints the
// document, otherwise a human summary of the same content.  Exit codes:
// 0 success, 1 computational failure (budget exhausted, or verification
// reported FAIL rows), 2 usage/parse/elaboration errors.

#include "sectio/run.hpp"

#include <algorithm>
#include <chrono>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "sectio/catalog.hpp"
#include "sectio/cohomology.hpp"
#include "sectio/verify.hpp"

namespace sectio {

namespace {

struct Outcome {
  Json doc;
  std::string text;
  int exit_code = 0;
};

std::string members_text(const GroupPtr& g, const std::vector<int>& members) {
  std::string out = "{ ";
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i) out += ", ";
    out += g->name(members[i]);
  }
  return out + " }";
}

std::string value_line(const std::string& what, const CoverResult& r,
                       const GroupPtr& named) {
  std::string out = what + " = " + r.value.str();
  if (r.value.is_inf()) {
    out += "  (" + std::string(reason_name(r.reason));
    if (r.reason_witness)
      out += "; witness element " + named->name(*r.reason_witness);
    out += ")";
  }
  out += "\n";
  return out;
}

std::string cover_text(const GroupPtr& g, const std::vector<Subgroup>& cover) {
  std::string out;
  for (const auto& s : cover) out += "  " + members_text(g, s.members) + "\n";
  return out;
}

std::vector<int> parse_int_list_flag(const std::string& raw) {
  std::string s = raw;
  s.erase(std::remove_if(s.begin(), s.end(),
                         [](unsigned char c) { return std::isspace(c); }),
          s.end());
  if (!s.empty() && s.front() == '[') {
    if (s.back() != ']') throw InvalidParameter("subgroup list: missing ']'");
    s = s.substr(1, s.size() - 2);
  }
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t comma = s.find(',', pos);
    std::string piece = s.substr(pos, comma == std::string::npos
                                          ? std::string::npos
                                          : comma - pos);
    if (piece.empty() || piece.find_first_not_of("0123456789") !=
                             std::string::npos)
      throw InvalidParameter("subgroup list: expected comma-separated "
                             "element indices");
    out.push_back(std::stoi(piece));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

Json verdict_summary(const VerifyReport& rep) {
  Json s;
  s["pass"] = rep.pass;
  s["fail"] = rep.fail;
  s["budget"] = rep.budget;
  s["skip"] = rep.skip;
  return s;
}

Json outcomes_json(const VerifyReport& rep) {
  Json arr = Json::array();
  for (const auto& o : rep.outcomes) {
    Json row;
    row["subject"] = o.subject;
    row["check"] = o.check;
    row["verdict"] = verdict_name(o.verdict);
    row["detail"] = o.detail;
    arr.push_back(row);
  }
  return arr;
}

std::string outcomes_text(const VerifyReport& rep) {
  std::string out;
  for (const auto& o : rep.outcomes) {
    out += std::string(verdict_name(o.verdict)) + " " + o.subject + " :: " +
           o.check;
    if (!o.detail.empty()) out += "  [" + o.detail + "]";
    out += "\n";
  }
  out += "pass " + std::to_string(rep.pass) + ", fail " +
         std::to_string(rep.fail) + ", budget " + std::to_string(rep.budget) +
         ", skip " + std::to_string(rep.skip) + "\n";
  return out;
}

VerifyOptions verify_options(const RunConfig& cfg) {
  VerifyOptions v;
  v.hom_budget = cfg.hom_budget;
  v.cover_budget = cfg.cover_budget;
  v.coboundary_budget = cfg.coboundary_budget;
  v.jobs = cfg.jobs;
  return v;
}

// ---- command bodies --------------------------------------------------------

Outcome cmd_sigma(const RunConfig& cfg, const std::string& arg) {
  GroupExpr e = parse_group(arg);
  GroupPtr g = eval_group(e, cfg.eval());
  CoverResult r = sigma(g, nullptr, cfg.cover_budget);
  Json input;
  input["group"] = to_string(e);
  Outcome o;
  o.doc = document_skeleton("sigma", input, cfg);
  o.doc.update(cover_result_json(r));
  o.text = value_line("sigma(" + to_string(e) + ")", r, g);
  if (!r.value.is_inf()) o.text += cover_text(g, r.witness);
  return o;
}

Outcome cmd_sigma_cyclic(const RunConfig& cfg, const std::string& arg) {
  GroupExpr e = parse_group(arg);
  GroupPtr g = eval_group(e, cfg.eval());
  SigmaCyclicResult r = sigma_cyclic(g, cfg.cover_budget);
  Json input;
  input["group"] = to_string(e);
  Outcome o;
  o.doc = document_skeleton("sigma-cyclic", input, cfg);
  o.doc.update(cover_result_json(r.cover));
  Json rows = Json::array();
  for (const auto& row : r.report.rows) {
    Json jr;
    jr["order"] = row.order;
    jr["elem_count"] = row.elem_count;
    jr["totient"] = row.totient;
    jr["subgroup_count"] = row.subgroup_count;
    rows.push_back(jr);
  }
  Json rep;
  rep["rows"] = rows;
  rep["bound"] = r.report.bound;
  o.doc["report"] = rep;
  o.text = value_line("sigma_c(" + to_string(e) + ")", r.cover, g);
  if (!r.cover.value.is_inf()) o.text += cover_text(g, r.cover.witness);
  o.text += "cyclic-subgroup bound: " + std::to_string(r.report.bound) + "\n";
  for (const auto& row : r.report.rows)
    o.text += "  order " + std::to_string(row.order) + ": " +
              std::to_string(row.elem_count) + " elements, phi=" +
              std::to_string(row.totient) + ", " +
              std::to_string(row.subgroup_count) + " subgroups\n";
  return o;
}

Outcome cmd_sec(const RunConfig& cfg, const std::string& arg) {
  HomSpec s = parse_hom(arg);
  Hom f = eval_hom(s, cfg.eval());
  CoverResult r = sec(f, nullptr, nullptr, cfg.hom_budget, cfg.cover_budget);
  Json input;
  input["hom"] = to_string(s);
  Outcome o;
  o.doc = document_skeleton("sec", input, cfg);
  o.doc.update(cover_result_json(r));
  o.text = value_line("sec(" + to_string(s) + ")", r, f.codomain);
  if (!r.value.is_inf()) o.text += cover_text(f.codomain, r.witness);
  return o;
}

Outcome cmd_sigma_hom(const RunConfig& cfg, const std::string& arg) {
  HomSpec s = parse_hom(arg);
  Hom f = eval_hom(s, cfg.eval());
  CoverResult r =
      sigma_hom(f, nullptr, cfg.hom_budget, cfg.cover_budget);
  Json input;
  input["hom"] = to_string(s);
  Outcome o;
  o.doc = document_skeleton("sigma-hom", input, cfg);
  o.doc.update(hom_cover_result_json(f, r));
  o.text = value_line("sigma(" + to_string(s) + ")", r, f.domain);
  if (!r.value.is_inf()) o.text += cover_text(f.domain, r.witness);
  return o;
}

Outcome cmd_poset(const RunConfig& cfg, const std::string& arg) {
  HomSpec s = parse_hom(arg);
  Hom f = eval_hom(s, cfg.eval());
  SectionablePoset p =
      sectionable_poset(f, nullptr, cfg.hom_budget, cfg.cover_budget);
  Json input;
  input["hom"] = to_string(s);
  Outcome o;
  o.doc = document_skeleton("poset", input, cfg);
  Json elements = Json::array();
  std::vector<bool> is_max(p.elements.size(), false);
  for (int i : p.maximal) is_max[i] = true;
  for (std::size_t i = 0; i < p.elements.size(); ++i) {
    Json el;
    el["members"] = p.elements[i].members;
    el["maximal"] = static_cast<bool>(is_max[i]);
    if (p.sections[i])
      el["section"] =
          section_json(p.elements[i].members, *p.sections[i]);
    else
      el["section"] = nullptr;
    elements.push_back(el);
  }
  o.doc["elements"] = elements;
  o.doc["cover_number"] = ext_to_json(p.cover_number);
  o.text = "sectionable subgroups of the codomain: " +
           std::to_string(p.elements.size()) + " (" +
           std::to_string(p.maximal.size()) + " maximal)\n";
  for (std::size_t i = 0; i < p.elements.size(); ++i)
    o.text += std::string(is_max[i] ? "* " : "  ") +
              members_text(f.codomain, p.elements[i].members) + "\n";
  o.text += "cover number: " + p.cover_number.str() + "\n";
  return o;
}

Outcome cmd_cocycle(const RunConfig& cfg, const std::string& arg,
                    const std::optional<std::string>& subgroup_flag) {
  HomSpec s = parse_hom(arg);
  Hom f = eval_hom(s, cfg.eval());
  ExtensionData ed = build_cocycle(f);
  Json input;
  input["hom"] = to_string(s);
  Cocycle c = ed.cocycle;
  if (subgroup_flag) {
    std::vector<int> gens = parse_int_list_flag(*subgroup_flag);
    input["subgroup"] = gens;
    Subgroup l = generated_subgroup(f.codomain, gens);
    c = restrict_cocycle(ed.cocycle, l);
  }
  CoboundaryResult cb = is_coboundary(c, cfg.coboundary_budget);
  Outcome o;
  o.doc = document_skeleton("cocycle", input, cfg);
  Json jc;
  jc["kernel"] = ed.transversal.kernel.incl.images;
  jc["base_order"] = c.base->order();
  jc["action"] = c.action.act;
  jc["values"] = c.values;
  o.doc["cocycle"] = jc;
  Json jb;
  jb["trivial"] = cb.trivial;
  jb["via_section_oracle"] = cb.via_section_oracle;
  if (cb.cochain)
    jb["cochain"] = *cb.cochain;
  else
    jb["cochain"] = nullptr;
  o.doc["coboundary"] = jb;
  o.text = "cocycle of " + to_string(s) + " on " +
           std::to_string(c.base->order()) + " elements, kernel order " +
           std::to_string(c.coeff->order()) + "\n";
  o.text += std::string("coboundary: ") + (cb.trivial ? "yes" : "no");
  if (cb.via_section_oracle) o.text += " (via section oracle)";
  o.text += "\n";
  return o;
}

Outcome cmd_hpoint(const RunConfig& cfg, const std::string& garg,
                   const std::string& harg, int elt) {
  GroupExpr ge = parse_group(garg);
  GroupExpr he = parse_group(harg);
  GroupPtr g = eval_group(ge, cfg.eval());
  GroupPtr h = eval_group(he, cfg.eval());
  if (elt < 0 || elt >= g->order())
    throw InvalidParameter("hpoint: element index out of range");
  bool hp = is_h_point(g, h, elt, cfg.hom_budget);
  Json input;
  input["group"] = to_string(ge);
  input["target"] = to_string(he);
  input["element"] = elt;
  Outcome o;
  o.doc = document_skeleton("hpoint", input, cfg);
  o.doc["is_h_point"] = hp;
  o.text = "element " + g->name(elt) + " of " + to_string(ge) + " is " +
           (hp ? "" : "not ") + "a " + to_string(he) + "-point\n";
  if (h->is_abelian()) {
    HomGroup hg = hom_group(g, h, cfg.max_order, cfg.hom_budget);
    Hom ev = evaluation_hom(hg, elt);
    CoverResult r =
        sec(ev, nullptr, nullptr, cfg.hom_budget, cfg.cover_budget);
    Json jev;
    jev["hom_group_order"] = hg.base->order();
    jev["value"] = ext_to_json(r.value);
    jev["reason"] = reason_name(r.reason);
    o.doc["ev_sec"] = jev;
    o.text += "sec(evaluation at " + g->name(elt) +
              ") = " + r.value.str() + "\n";
  } else {
    o.doc["ev_sec"] = nullptr;
    o.text += "evaluation hom undefined (target not abelian)\n";
  }
  return o;
}

Outcome cmd_covers(const RunConfig& cfg, const std::string& arg) {
  GroupExpr e = parse_group(arg);
  GroupPtr g = eval_group(e, cfg.eval());
  CategoricalCovers cc =
      enumerate_minimum_covers(g, nullptr, cfg.cover_budget);
  Json input;
  input["group"] = to_string(e);
  Outcome o;
  o.doc = document_skeleton("covers", input, cfg);
  o.doc["sigma"] = ext_to_json(cc.sigma_value);
  Json arr = Json::array();
  for (const auto& cov : cc.covers) arr.push_back(cover_json(cov));
  o.doc["covers"] = arr;
  o.text = "sigma(" + to_string(e) + ") = " + cc.sigma_value.str() + ", " +
           std::to_string(cc.covers.size()) + " minimum cover(s)\n";
  for (std::size_t i = 0; i < cc.covers.size(); ++i) {
    o.text += "cover " + std::to_string(i + 1) + ":\n" +
              cover_text(g, cc.covers[i]);
  }
  return o;
}

Outcome cmd_describe(const RunConfig& cfg, const std::string& arg) {
  GroupExpr e = parse_group(arg);
  GroupPtr g = eval_group(e, cfg.eval());
  StructureInfo st = structure(g);
  Json input;
  input["group"] = to_string(e);
  Outcome o;
  o.doc = document_skeleton("describe", input, cfg);
  o.doc["order"] = g->order();
  o.doc["label"] = g->label();
  o.doc["abelian"] = st.abelian;
  o.doc["cyclic"] = st.cyclic;
  o.doc["exponent"] = st.exponent;
  o.doc["center"] = st.center.members;
  Json elems = Json::array();
  for (int i = 0; i < g->order(); ++i) {
    Json el;
    el["index"] = i;
    el["name"] = g->name(i);
    el["order"] = g->elem_order(i);
    elems.push_back(el);
  }
  o.doc["elements"] = elems;
  o.text = to_string(e) + ": order " + std::to_string(g->order()) +
           (st.abelian ? ", abelian" : ", nonabelian") +
           (st.cyclic ? ", cyclic" : "") +
           ", exponent " + std::to_string(st.exponent) + "\n";
  o.text += "center: " + members_text(g, st.center.members) + "\n";
  for (int i = 0; i < g->order(); ++i)
    o.text += "  " + std::to_string(i) + ": " + g->name(i) + " (order " +
              std::to_string(g->elem_order(i)) + ")\n";
  return o;
}

Outcome cmd_verify(const RunConfig& cfg, const std::string& arg) {
  HomSpec s = parse_hom(arg);
  Hom f = eval_hom(s, cfg.eval());
  VerifyReport rep = verify_single(f, to_string(s), verify_options(cfg));
  Json input;
  input["hom"] = to_string(s);
  Outcome o;
  o.doc = document_skeleton("verify", input, cfg);
  o.doc["summary"] = verdict_summary(rep);
  o.doc["outcomes"] = outcomes_json(rep);
  o.text = outcomes_text(rep);
  o.exit_code = rep.fail > 0 ? 1 : 0;
  return o;
}

Outcome cmd_verify_batch(const RunConfig& cfg) {
  Catalog cat = build_catalog(cfg.max_order, cfg.max_order);
  VerifyReport rep = verify_theorems(cat, verify_options(cfg));
  Json input;
  input["max_order"] = cfg.max_order;
  Outcome o;
  o.doc = document_skeleton("verify-batch", input, cfg);
  o.doc["groups"] = static_cast<int>(cat.groups.size());
  o.doc["homs"] = static_cast<int>(cat.homs.size());
  o.doc["summary"] = verdict_summary(rep);
  o.doc["outcomes"] = outcomes_json(rep);
  o.text = "catalog: " + std::to_string(cat.groups.size()) + " groups, " +
           std::to_string(cat.homs.size()) + " homs\n" + outcomes_text(rep);
  o.exit_code = rep.fail > 0 ? 1 : 0;
  return o;
}

Outcome cmd_search(const RunConfig& cfg, const std::string& predicate) {
  static const char* kPredicates[] = {
      "finite-sec-no-global-section", "sec-exceeds-sigma",
      "split-sigma-hom-gap", "not-locally-sectionable"};
  bool known = false;
  for (const char* p : kPredicates) known = known || predicate == p;
  if (!known) {
    std::string msg = "unknown predicate '" + predicate + "'; expected one of";
    for (const char* p : kPredicates) msg += std::string(" ") + p;
    throw InvalidParameter(msg);
  }
  Catalog cat = build_catalog(cfg.max_order, cfg.max_order);
  Json matches = Json::array();
  std::string text;
  for (const auto& ch : cat.homs) {
    const Hom& f = ch.hom;
    if (!f.is_surjective()) continue;
    if (predicate == "not-locally-sectionable") {
      Sectionability ls = is_locally_sectionable(f);
      if (ls.ok) continue;
      Json m;
      m["hom"] = ch.name;
      m["failing_element"] = ls.failing;
      matches.push_back(m);
      text += ch.name + "  (element " + f.codomain->name(ls.failing) +
              " has no equal-order preimage)\n";
      continue;
    }
    CoverResult r =
        sec(f, nullptr, nullptr, cfg.hom_budget, cfg.cover_budget);
    if (predicate == "finite-sec-no-global-section") {
      if (r.value.is_inf()) continue;
      if (exists_global_section(f, cfg.hom_budget)) continue;
      Json m;
      m["hom"] = ch.name;
      m["sec"] = ext_to_json(r.value);
      matches.push_back(m);
      text += ch.name + "  sec=" + r.value.str() + "\n";
    } else if (predicate == "sec-exceeds-sigma") {
      CoverResult sh = sigma(f.codomain, nullptr, cfg.cover_budget);
      if (!(r.value > sh.value)) continue;
      Json m;
      m["hom"] = ch.name;
      m["sec"] = ext_to_json(r.value);
      m["sigma_codomain"] = ext_to_json(sh.value);
      matches.push_back(m);
      text += ch.name + "  sec=" + r.value.str() +
              " > sigma(H)=" + sh.value.str() + "\n";
    } else {  // split-sigma-hom-gap
      if (!exists_global_section(f, cfg.hom_budget)) continue;
      CoverResult sh =
          sigma_hom(f, nullptr, cfg.hom_budget, cfg.cover_budget);
      if (!(r.value > sh.value)) continue;
      Json m;
      m["hom"] = ch.name;
      m["sec"] = ext_to_json(r.value);
      m["sigma_hom"] = ext_to_json(sh.value);
      matches.push_back(m);
      text += ch.name + "  sec=" + r.value.str() +
              " > sigma(f)=" + sh.value.str() + "\n";
    }
  }
  Json input;
  input["predicate"] = predicate;
  input["max_order"] = cfg.max_order;
  Outcome o;
  o.doc = document_skeleton("search", input, cfg);
  o.doc["matches"] = matches;
  o.text = "predicate " + predicate + ": " +
           std::to_string(matches.size()) + " match(es)\n" + text;
  return o;
}

const char* error_type(const Error& e) {
  if (dynamic_cast<const SyntaxError*>(&e)) return "syntax";
  if (dynamic_cast<const ElaborationError*>(&e)) return "elaboration";
  if (dynamic_cast<const OrderCapExceeded*>(&e)) return "order-cap";
  if (dynamic_cast<const SearchBudgetExceeded*>(&e)) return "budget";
  return "invalid-parameter";
}

}  // namespace

RunResult run_cli(const std::vector<std::string>& args) {
  RunConfig cfg;
  bool json = false;
  std::string arg_group, arg_hom, arg_target, arg_predicate;
  int arg_elt = 0;
  std::string subgroup_flag;
  long long budget_nodes = 0;

  CLI::App app{"finite-group covering and section calculator", "sectio"};
  app.require_subcommand(1);
  app.add_option("--max-order", cfg.max_order,
                 "order cap for groups (default 64)");
  app.add_option("--budget-nodes", budget_nodes,
                 "override every search budget with this node count");
  app.add_flag("--json", json, "print the result document instead of text");
  app.add_option("--seed", cfg.seed, "seed for sampled table validation");
  app.add_option("--jobs", cfg.jobs, "worker threads for batch verification");

  CLI::App* sc_sigma = app.add_subcommand("sigma", "covering number of a group");
  sc_sigma->add_option("group", arg_group)->required();
  CLI::App* sc_sigma_c =
      app.add_subcommand("sigma-cyclic", "cyclic covering number");
  sc_sigma_c->add_option("group", arg_group)->required();
  CLI::App* sc_sec = app.add_subcommand("sec", "sectional number of a hom");
  sc_sec->add_option("hom", arg_hom)->required();
  CLI::App* sc_sigma_h =
      app.add_subcommand("sigma-hom", "covering number of a surjective hom");
  sc_sigma_h->add_option("hom", arg_hom)->required();
  CLI::App* sc_poset =
      app.add_subcommand("poset", "poset of sectionable subgroups");
  sc_poset->add_option("hom", arg_hom)->required();
  CLI::App* sc_cocycle =
      app.add_subcommand("cocycle", "extension cocycle and coboundary test");
  sc_cocycle->add_option("hom", arg_hom)->required();
  sc_cocycle->add_option("--subgroup", subgroup_flag,
                         "restrict to the subgroup generated by these "
                         "codomain elements, e.g. [1,4]");
  CLI::App* sc_hpoint =
      app.add_subcommand("hpoint", "H-point test and evaluation sec");
  sc_hpoint->add_option("group", arg_group)->required();
  sc_hpoint->add_option("target", arg_target)->required();
  sc_hpoint->add_option("element", arg_elt)->required();
  CLI::App* sc_covers =
      app.add_subcommand("covers", "all minimum covers by proper subgroups");
  sc_covers->add_option("group", arg_group)->required();
  CLI::App* sc_verify =
      app.add_subcommand("verify", "run every covering law on one hom");
  sc_verify->add_option("hom", arg_hom)->required();
  CLI::App* sc_batch = app.add_subcommand(
      "verify-batch", "run every covering law across the catalog");
  CLI::App* sc_search =
      app.add_subcommand("search", "scan the catalog for a predicate");
  sc_search
      ->add_option("--predicate", arg_predicate,
                   "finite-sec-no-global-section | sec-exceeds-sigma | "
                   "split-sigma-hom-gap | not-locally-sectionable")
      ->required();
  CLI::App* sc_describe =
      app.add_subcommand("describe", "element table of a group");
  sc_describe->add_option("group", arg_group)->required();
  for (CLI::App* sc : {sc_sigma, sc_sigma_c, sc_sec, sc_sigma_h, sc_poset,
                       sc_cocycle, sc_hpoint, sc_covers, sc_verify, sc_batch,
                       sc_search, sc_describe})
    sc->fallthrough();

  RunResult rr;
  try {
    std::vector<std::string> rargs(args.rbegin(), args.rend());
    app.parse(rargs);
  } catch (const CLI::CallForHelp&) {
    rr.exit_code = 0;
    rr.text = app.help();
    return rr;
  } catch (const CLI::ParseError& e) {
    rr.exit_code = 2;
    Json doc;
    doc["schema"] = kSchemaName;
    doc["command"] = "cli";
    Json err;
    err["type"] = "usage";
    err["message"] = e.what();
    doc["error"] = err;
    finish_document(doc, "error", 0);
    rr.doc = doc;
    rr.text = json ? serialize_document(doc)
                   : std::string("error: ") + e.what() + "\n";
    return rr;
  }

  if (budget_nodes > 0) {
    cfg.hom_budget = budget_nodes;
    cfg.cover_budget = budget_nodes;
    cfg.coboundary_budget = budget_nodes;
  }
  if (cfg.jobs < 1) cfg.jobs = 1;

  std::string command = "cli";
  auto start = std::chrono::steady_clock::now();
  auto elapsed_us = [&start] {
    return std::chrono::duration_cast<std::chrono::microseconds>(
               std::chrono::steady_clock::now() - start)
        .count();
  };

  try {
    Outcome out;
    if (sc_sigma->parsed()) {
      command = "sigma";
      out = cmd_sigma(cfg, arg_group);
    } else if (sc_sigma_c->parsed()) {
      command = "sigma-cyclic";
      out = cmd_sigma_cyclic(cfg, arg_group);
    } else if (sc_sec->parsed()) {
      command = "sec";
      out = cmd_sec(cfg, arg_hom);
    } else if (sc_sigma_h->parsed()) {
      command = "sigma-hom";
      out = cmd_sigma_hom(cfg, arg_hom);
    } else if (sc_poset->parsed()) {
      command = "poset";
      out = cmd_poset(cfg, arg_hom);
    } else if (sc_cocycle->parsed()) {
      command = "cocycle";
      std::optional<std::string> sg;
      if (!subgroup_flag.empty()) sg = subgroup_flag;
      out = cmd_cocycle(cfg, arg_hom, sg);
    } else if (sc_hpoint->parsed()) {
      command = "hpoint";
      out = cmd_hpoint(cfg, arg_group, arg_target, arg_elt);
    } else if (sc_covers->parsed()) {
      command = "covers";
      out = cmd_covers(cfg, arg_group);
    } else if (sc_verify->parsed()) {
      command = "verify";
      out = cmd_verify(cfg, arg_hom);
    } else if (sc_batch->parsed()) {
      command = "verify-batch";
      out = cmd_verify_batch(cfg);
    } else if (sc_search->parsed()) {
      command = "search";
      out = cmd_search(cfg, arg_predicate);
    } else if (sc_describe->parsed()) {
      command = "describe";
      out = cmd_describe(cfg, arg_group);
    } else {
      throw InvalidParameter("no command given");
    }
    finish_document(out.doc, "ok", elapsed_us());
    rr.doc = std::move(out.doc);
    rr.exit_code = out.exit_code;
    rr.text = json ? serialize_document(rr.doc) : std::move(out.text);
    return rr;
  } catch (const Error& e) {
    Json doc;
    doc["schema"] = kSchemaName;
    doc["command"] = command;
    Json err;
    err["type"] = error_type(e);
    err["message"] = e.what();
    if (const auto* se = dynamic_cast<const SyntaxError*>(&e))
      err["offset"] = se->offset;
    doc["error"] = err;
    finish_document(doc, "error", elapsed_us());
    rr.doc = doc;
    rr.exit_code =
        dynamic_cast<const SearchBudgetExceeded*>(&e) != nullptr ? 1 : 2;
    rr.text = json ? serialize_document(doc)
                   : std::string("error: ") + e.what() + "\n";
    return rr;
  } catch (const std::exception& e) {
    Json doc;
    doc["schema"] = kSchemaName;
    doc["command"] = command;
    Json err;
    err["type"] = "internal";
    err["message"] = e.what();
    doc["error"] = err;
    finish_document(doc, "error", elapsed_us());
    rr.doc = doc;
    rr.exit_code = 2;
    rr.text = json ? serialize_document(doc)
                   : std::string("error: ") + e.what() + "\n";
    return rr;
  }
}

}  // namespace sectio
