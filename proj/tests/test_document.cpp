// Round-trip and tamper tests for result documents: every witness a document
// carries must revalidate from scratch, and any corruption must be caught.

#include <doctest.h>

#include <string>
#include <vector>

#include "sectio/errors.hpp"
#include "sectio/result.hpp"
#include "sectio/run.hpp"

using namespace sectio;

namespace {

Json doc_for(std::vector<std::string> args) {
  args.push_back("--json");
  RunResult rr = run_cli(args);
  REQUIRE(rr.exit_code == 0);
  return rr.doc;
}

}  // namespace

TEST_SUITE("document") {

TEST_CASE("serialize/parse round trip is byte identical") {
  for (auto args : {std::vector<std::string>{"sigma", "E(2,2)"},
                    {"sec", "quot(E(2,3),[1])"},
                    {"poset", "id(E(2,2))"},
                    {"describe", "Q8"}}) {
    Json doc = doc_for(args);
    std::string once = serialize_document(doc);
    std::string twice = serialize_document(parse_document(once));
    CHECK(once == twice);
  }
}

TEST_CASE("documents carry the shared skeleton") {
  Json doc = doc_for({"sigma", "Q8"});
  CHECK(doc["schema"] == "sectio/1");
  CHECK(doc["command"] == "sigma");
  CHECK(doc["input"]["group"] == "Q8");
  CHECK(doc["config"]["max_order"] == 64);
  CHECK(doc["status"] == "ok");
  CHECK(doc["timing_us"].is_number());
}

TEST_CASE("fresh documents revalidate") {
  for (auto args : {std::vector<std::string>{"sigma", "E(2,2)"},
                    {"sigma", "Z(6)"},  // infinite, reason witness
                    {"sigma", "S(3)"},
                    {"sigma-cyclic", "Q8"},
                    {"sigma-cyclic", "E(3,2)"},
                    {"sec", "quot(E(2,3),[1])"},
                    {"sec", "quot(Q8,[4])"},  // infinite
                    {"sec", "id(E(2,2))"},
                    {"sigma-hom", "quot(E(2,3),[1])"},
                    {"sigma-hom", "quot(D(4),[2])"},
                    {"poset", "id(E(2,2))"},
                    {"poset", "quot(Q8,[4])"},
                    {"cocycle", "quot(E(2,2),[1])"},   // split
                    {"cocycle", "quot(Z(4),[2])"},     // not split
                    {"cocycle", "quot(Q8,[4])"},
                    {"covers", "S(3)"},
                    {"covers", "Q8"},
                    {"covers", "Z(6)"},  // infinite, no covers
                    {"describe", "D(4)"},
                    {"hpoint", "Z(4)", "Z(2)", "1"}}) {
    Json doc = doc_for(args);
    CHECK_NOTHROW(revalidate_document(doc));
  }
}

TEST_CASE("error documents revalidate quietly") {
  RunResult rr = run_cli({"sigma", "Z(", "--json"});
  CHECK(rr.exit_code == 2);
  CHECK(rr.doc["status"] == "error");
  CHECK_NOTHROW(revalidate_document(rr.doc));
}

TEST_CASE("tampered sigma value is rejected") {
  Json doc = doc_for({"sigma", "E(2,2)"});
  REQUIRE(doc["value"] == 3);
  doc["value"] = 2;
  CHECK_THROWS_AS(revalidate_document(doc), Error);
}

TEST_CASE("tampered sigma witness is rejected") {
  Json doc = doc_for({"sigma", "E(2,2)"});
  SUBCASE("dropping a member breaks closure") {
    doc["witness"][0].erase(1);
    CHECK_THROWS_AS(revalidate_document(doc), Error);
  }
  SUBCASE("replacing a subgroup breaks the union") {
    doc["witness"][1] = doc["witness"][0];
    CHECK_THROWS_AS(revalidate_document(doc), Error);
  }
  SUBCASE("the whole group is not a proper cover member") {
    doc["witness"][0] = Json::array({0, 1, 2, 3});
    CHECK_THROWS_AS(revalidate_document(doc), Error);
  }
  SUBCASE("an infinite value must not carry a witness") {
    doc["value"] = "infinite";
    CHECK_THROWS_AS(revalidate_document(doc), Error);
  }
}

TEST_CASE("tampered cyclic witness is rejected") {
  Json doc = doc_for({"sigma-cyclic", "Q8"});
  REQUIRE(doc["value"] == 3);
  doc["witness"][0] = Json::array({0, 4});  // center: cyclic, but too small
  CHECK_THROWS_AS(revalidate_document(doc), Error);
  // a noncyclic subgroup smuggled into a cyclic cover
  Json cdoc = doc_for({"sigma-cyclic", "E(2,2)"});
  REQUIRE(cdoc["value"] == 3);
  cdoc["value"] = 1;
  cdoc["witness"] = Json::array({Json::array({0, 1, 2, 3})});
  CHECK_THROWS_AS(revalidate_document(cdoc), Error);
}

TEST_CASE("tampered section is rejected") {
  Json doc = doc_for({"sec", "quot(E(2,3),[1])"});
  REQUIRE(doc["value"] == 3);
  SUBCASE("image moved off the fiber") {
    // first non-identity image entry: replace with an element whose image
    // under f differs (element 1 generates the kernel)
    doc["sections"][0]["images"][1] = 1;
    CHECK_THROWS_AS(revalidate_document(doc), Error);
  }
  SUBCASE("section members must match the witness subgroup") {
    doc["sections"][0]["members"] = doc["sections"][1]["members"];
    CHECK_THROWS_AS(revalidate_document(doc), Error);
  }
  SUBCASE("witness subgroup swapped out from under its section") {
    doc["witness"][0] = doc["witness"][1];
    CHECK_THROWS_AS(revalidate_document(doc), Error);
  }
}

TEST_CASE("tampered sigma-hom witness is rejected") {
  Json doc = doc_for({"sigma-hom", "quot(E(2,3),[1])"});
  REQUIRE(doc["value"] == 3);
  SUBCASE("member dropped below the kernel") {
    // replace a domain subgroup with one not containing the kernel
    doc["witness"][0] = Json::array({0, 2});
    CHECK_THROWS_AS(revalidate_document(doc), Error);
  }
  SUBCASE("value lowered") {
    doc["value"] = 2;
    CHECK_THROWS_AS(revalidate_document(doc), Error);
  }
}

TEST_CASE("tampered poset is rejected") {
  Json doc = doc_for({"poset", "id(E(2,2))"});
  SUBCASE("maximality flag flipped") {
    bool flipped = false;
    for (auto& el : doc["elements"]) {
      el["maximal"] = !el["maximal"].get<bool>();
      flipped = true;
      break;
    }
    REQUIRE(flipped);
    CHECK_THROWS_AS(revalidate_document(doc), Error);
  }
  SUBCASE("cover number finiteness contradicts the union") {
    doc["cover_number"] = "infinite";
    CHECK_THROWS_AS(revalidate_document(doc), Error);
  }
}

TEST_CASE("tampered cocycle is rejected") {
  // base is V4, kernel Z2: flipping one cochain entry changes it by a
  // non-homomorphism, so the tampered cochain genuinely stops cobounding
  Json doc = doc_for({"cocycle", "quot(E(2,3),[1])"});
  REQUIRE(doc["coboundary"]["trivial"] == true);
  SUBCASE("cocycle values changed") {
    int v = doc["cocycle"]["values"][1][1].get<int>();
    doc["cocycle"]["values"][1][1] = v == 0 ? 1 : 0;
    CHECK_THROWS_AS(revalidate_document(doc), Error);
  }
  SUBCASE("cochain no longer cobounds") {
    REQUIRE(!doc["coboundary"]["cochain"].is_null());
    int v = doc["coboundary"]["cochain"][1].get<int>();
    doc["coboundary"]["cochain"][1] = v == 0 ? 1 : 0;
    CHECK_THROWS_AS(revalidate_document(doc), Error);
  }
  SUBCASE("cochain must stay normalized") {
    doc["coboundary"]["cochain"][0] = 1;
    CHECK_THROWS_AS(revalidate_document(doc), Error);
  }
}

TEST_CASE("unknown schema is rejected") {
  Json doc = doc_for({"sigma", "E(2,2)"});
  doc["schema"] = "sectio/2";
  CHECK_THROWS_AS(revalidate_document(doc), Error);
}

}  // TEST_SUITE
