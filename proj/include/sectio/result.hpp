#pragma once
// Machine-readable result documents, schema "sectio/1".
//
// Every CLI invocation produces one document.  Field order is fixed
// (ordered_json), so serialize → parse → serialize is byte-identical.
// Witness blocks carry plain element indices and re-validate from scratch
// against re-evaluated inputs — see revalidate_document.

#include <cstdint>
#include <string>

#include <json.hpp>

#include "sectio/expr.hpp"
#include "sectio/invariants.hpp"

namespace sectio {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaName = "sectio/1";

struct RunConfig {
  int max_order = kDefaultOrderCap;
  long long hom_budget = kDefaultHomSearchBudget;
  long long cover_budget = kDefaultCoverBudget;
  long long coboundary_budget = kDefaultCoboundaryBudget;
  std::uint64_t seed = kDefaultSeed;
  int jobs = 1;

  EvalOptions eval() const { return {max_order, hom_budget}; }
};

// Shared skeleton: schema, command, input, config.  Command payload fields
// are appended by the caller, then finish_document stamps status/timing.
Json document_skeleton(const std::string& command, const Json& input,
                       const RunConfig& cfg);
void finish_document(Json& doc, const std::string& status, long long timing_us);

// value: integer or the string "infinite".
Json ext_to_json(const ExtInt& v);

// Witness/section payload pieces.  A serialized section is
// {"members": [...in the codomain of f...], "images": [...in the domain...]}
// with the two lists aligned.
Json subgroup_members_json(const Subgroup& s);
Json cover_json(const std::vector<Subgroup>& cover);
Json section_json(const std::vector<int>& members, const Hom& s);
// For sec-style results where sections[i] is defined over witness[i].
Json cover_result_json(const CoverResult& r);
// For sigma-hom results where sections[i] is defined over f(witness[i]).
Json hom_cover_result_json(const Hom& f, const CoverResult& r);

std::string serialize_document(const Json& doc);
Json parse_document(const std::string& text);

// Re-evaluates the document's input expressions and checks every witness:
// subgroup member lists must be closed, covers must cover, sections must be
// multiplicative maps satisfying f∘s = incl.  Throws Error on any mismatch;
// returns quietly for documents without witnesses.
void revalidate_document(const Json& doc, const EvalOptions& opts = {});

}  // namespace sectio
