// End-to-end CLI behaviour: exit codes, document shapes, error reporting.

#include <doctest.h>

#include <string>
#include <vector>

#include "sectio/run.hpp"

using namespace sectio;

TEST_SUITE("run") {

TEST_CASE("sigma happy path") {
  RunResult rr = run_cli({"sigma", "E(2,2)", "--json"});
  CHECK(rr.exit_code == 0);
  CHECK(rr.doc["schema"] == "sectio/1");
  CHECK(rr.doc["command"] == "sigma");
  CHECK(rr.doc["value"] == 3);
  CHECK(rr.doc["reason"] == "none");
  CHECK(rr.doc["witness"].size() == 3);
  CHECK(rr.doc["status"] == "ok");
  // --json puts the serialized document on stdout
  CHECK(rr.text == serialize_document(rr.doc));
}

TEST_CASE("human text mode mentions the answer") {
  RunResult rr = run_cli({"sigma", "Q8"});
  CHECK(rr.exit_code == 0);
  CHECK(rr.text.find("3") != std::string::npos);
  RunResult inf = run_cli({"sigma", "Z(6)"});
  CHECK(inf.exit_code == 0);
  CHECK(inf.text.find("infinite") != std::string::npos);
  CHECK(inf.text.find("codomain-cyclic") != std::string::npos);
}

TEST_CASE("infinite sigma carries reason and witness element") {
  RunResult rr = run_cli({"sigma", "Z(6)", "--json"});
  CHECK(rr.exit_code == 0);
  CHECK(rr.doc["value"] == "infinite");
  CHECK(rr.doc["reason"] == "codomain-cyclic");
  // the recorded generator really generates
  CHECK(rr.doc["reason_witness"] == 1);
}

TEST_CASE("sec of a non-surjective map reports not-surjective") {
  RunResult rr = run_cli({"sec", "triv(Q8,Z(2))", "--json"});
  CHECK(rr.exit_code == 0);
  CHECK(rr.doc["value"] == "infinite");
  CHECK(rr.doc["reason"] == "not-surjective");
}

TEST_CASE("sigma-hom of a non-surjective map is a usage error") {
  RunResult rr = run_cli({"sigma-hom", "triv(Q8,Z(2))", "--json"});
  CHECK(rr.exit_code == 2);
  CHECK(rr.doc["status"] == "error");
  CHECK(rr.doc["error"]["type"] == "invalid-parameter");
}

TEST_CASE("syntax errors exit 2 and carry the offset") {
  RunResult rr = run_cli({"sigma", "Z(4)junk", "--json"});
  CHECK(rr.exit_code == 2);
  CHECK(rr.doc["status"] == "error");
  CHECK(rr.doc["error"]["type"] == "syntax");
  CHECK(rr.doc["error"]["offset"] == 4);
}

TEST_CASE("elaboration errors exit 2") {
  RunResult rr = run_cli({"sec", "quot(S(3),[1])", "--json"});
  CHECK(rr.exit_code == 2);
  CHECK(rr.doc["error"]["type"] == "elaboration");
}

TEST_CASE("order cap errors exit 2 and honor --max-order") {
  RunResult big = run_cli({"sigma", "Z(65)", "--json"});
  CHECK(big.exit_code == 2);
  CHECK(big.doc["error"]["type"] == "order-cap");
  RunResult small = run_cli({"sigma", "Z(10)", "--max-order", "8", "--json"});
  CHECK(small.exit_code == 2);
  CHECK(small.doc["error"]["type"] == "order-cap");
  RunResult raised = run_cli({"describe", "Z(10)", "--max-order", "16"});
  CHECK(raised.exit_code == 0);
}

TEST_CASE("budget exhaustion exits 1") {
  RunResult rr = run_cli({"sigma", "E(2,4)", "--budget-nodes", "2", "--json"});
  CHECK(rr.exit_code == 1);
  CHECK(rr.doc["status"] == "error");
  CHECK(rr.doc["error"]["type"] == "budget");
  CHECK(!rr.doc.contains("config"));  // error docs carry no config block
}

TEST_CASE("usage errors exit 2") {
  CHECK(run_cli({}).exit_code == 2);
  CHECK(run_cli({"sigma"}).exit_code == 2);            // missing group
  CHECK(run_cli({"frobnicate", "Z(2)"}).exit_code == 2);
  CHECK(run_cli({"sigma", "Z(4)", "--no-such-flag"}).exit_code == 2);
}

TEST_CASE("help exits 0") {
  RunResult rr = run_cli({"--help"});
  CHECK(rr.exit_code == 0);
  CHECK(rr.text.find("sigma") != std::string::npos);
}

TEST_CASE("describe reports structure") {
  RunResult rr = run_cli({"describe", "Q8", "--json"});
  CHECK(rr.exit_code == 0);
  CHECK(rr.doc["order"] == 8);
  CHECK(rr.doc["abelian"] == false);
  CHECK(rr.doc["cyclic"] == false);
  CHECK(rr.doc["exponent"] == 4);
  CHECK(rr.doc["center"].size() == 2);
  CHECK(rr.doc["elements"].size() == 8);
  CHECK(rr.doc["elements"][1]["name"] == "i");
  CHECK(rr.doc["elements"][1]["order"] == 4);
}

TEST_CASE("hpoint answers both ways") {
  RunResult yes = run_cli({"hpoint", "Z(4)", "Z(2)", "1", "--json"});
  CHECK(yes.exit_code == 0);
  CHECK(yes.doc["is_h_point"] == true);
  RunResult no = run_cli({"hpoint", "Z(4)", "Z(2)", "2", "--json"});
  CHECK(no.exit_code == 0);
  CHECK(no.doc["is_h_point"] == false);
  RunResult ident = run_cli({"hpoint", "Z(4)", "Z(2)", "0", "--json"});
  CHECK(ident.doc["is_h_point"] == false);
  RunResult oob = run_cli({"hpoint", "Z(4)", "Z(2)", "7", "--json"});
  CHECK(oob.exit_code == 2);
}

TEST_CASE("verify single hom passes everywhere") {
  RunResult rr = run_cli({"verify", "quot(Q8,[4])", "--json"});
  CHECK(rr.exit_code == 0);
  CHECK(rr.doc["summary"]["fail"] == 0);
  CHECK(rr.doc["summary"]["pass"].get<int>() > 10);
  for (const auto& oc : rr.doc["outcomes"])
    CHECK(oc["status"] != "FAIL");
}

TEST_CASE("verify-batch small order is clean") {
  RunResult rr = run_cli({"verify-batch", "--max-order", "6", "--json"});
  CHECK(rr.exit_code == 0);
  CHECK(rr.doc["summary"]["fail"] == 0);
  CHECK(rr.doc["groups"].get<int>() > 5);
  CHECK(rr.doc["homs"].get<int>() > 5);
}

TEST_CASE("search finds the library of counterexamples") {
  RunResult rr = run_cli({"search", "--predicate", "not-locally-sectionable",
                          "--max-order", "8", "--json"});
  CHECK(rr.exit_code == 0);
  bool quaternion_case = false;
  for (const auto& m : rr.doc["matches"])
    if (m["hom"] == "quot(Q8,[4])") quaternion_case = true;
  CHECK(quaternion_case);

  RunResult bad = run_cli({"search", "--predicate", "no-such-predicate"});
  CHECK(bad.exit_code == 2);
}

TEST_CASE("cocycle restriction via --subgroup") {
  // D(4) → D(4)/⟨r²⟩ does not split, but its restriction over ⟨s̄⟩ does:
  // the preimage {e,r²,s,r²s} is elementary abelian, s is a section
  RunResult full = run_cli({"cocycle", "quot(D(4),[2])", "--json"});
  CHECK(full.exit_code == 0);
  CHECK(full.doc["coboundary"]["trivial"] == false);
  RunResult leg = run_cli(
      {"cocycle", "quot(D(4),[2])", "--subgroup", "[2]", "--json"});
  CHECK(leg.exit_code == 0);
  CHECK(leg.doc["coboundary"]["trivial"] == true);
  // over the quaternion quotient even the restricted legs stay twisted
  RunResult q = run_cli(
      {"cocycle", "quot(Q8,[4])", "--subgroup", "[1]", "--json"});
  CHECK(q.exit_code == 0);
  CHECK(q.doc["coboundary"]["trivial"] == false);
}

}  // TEST_SUITE
