#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "tcfa/serialize.hpp"

using namespace tcfa;

TEST_CASE("space file parsing") {
    std::string text = R"({
      "dimension": 2,
      "irreducible": true,
      "trivial_multiplication": true,
      "top_triv": 1,
      "cohomology_gap_s": 0,
      "classes": [{"c": 0, "w": 0, "dim": 1}, {"c": 3, "w": 2, "dim": 2}]
    })";
    ParsedSpace parsed = parse_space_text(text);
    CHECK(parsed.space.d == 2);
    CHECK(parsed.space.irreducible);
    CHECK(parsed.space.classes.size() == 2);
    CHECK(parsed.warnings.empty());
}

TEST_CASE("space file rejects unknown keys and bad JSON") {
    CHECK_THROWS_AS(parse_space_text(R"({"dimension": 1, "weird": 2, "classes": []})"),
                    InvalidInput);
    CHECK_THROWS_AS(parse_space_text("{not json"), InvalidInput);
    CHECK_THROWS_AS(parse_space_text(R"({"classes": []})"), InvalidInput);  // missing dimension
    CHECK_THROWS_AS(
        parse_space_text(R"({"dimension": 1, "classes": [{"c": 0, "w": 0, "dim": 1, "x": 2}]})"),
        InvalidInput);
}

TEST_CASE("duplicate classes merge with a warning") {
    std::string text = R"({
      "dimension": 1,
      "classes": [{"c": 1, "w": 0, "dim": 1}, {"c": 1, "w": 0, "dim": 2},
                  {"c": 0, "w": 0, "dim": 1}]
    })";
    ParsedSpace parsed = parse_space_text(text);
    REQUIRE(parsed.warnings.size() == 1);
    REQUIRE(parsed.space.classes.size() == 2);
    CHECK(parsed.space.classes[0].dim == 3);
}

TEST_CASE("space round trip") {
    SpaceCohomology s = SpaceCohomology::affine_space(2);
    s.classes.push_back({3, 1, 4});
    s.top_triv = 2;
    Json doc = space_to_json(s);
    ParsedSpace back = parse_space_json(doc);
    CHECK(back.space.d == s.d);
    CHECK(back.space.classes.size() == s.classes.size());
    CHECK(back.space.top_triv == 2);
}

TEST_CASE("character serialization round trip") {
    FBCharacter f(4);
    f.add(1, 0, 0, SymFunc::h(1));
    f.add(2, 1, 1, SymFunc::s(Partition{1, 1}) * Rat(3));
    f.add(3, 2, 1, SymFunc::s(Partition{2, 1}) + SymFunc::s(Partition{3}) * Rat(1, 2));
    Json graded = character_to_json(f);
    FBCharacter back = character_from_json(graded, 4);
    CHECK(back == f);
    // canonical partition keys
    CHECK(graded[1]["pieces"][0]["schur"].contains("[1,1]"));
    CHECK(graded[1]["pieces"][0]["schur"]["[1,1]"] == "3");
    CHECK(graded[2]["pieces"][0]["schur"]["[3]"] == "1/2");
}

TEST_CASE("result files carry meta and serialize deterministically") {
    FBCharacter f(2);
    f.add(1, 0, 0, SymFunc::h(1));
    Json doc1 = result_file("conf", Json{{"n", 2}}, &f, nullptr);
    Json doc2 = result_file("conf", Json{{"n", 2}}, &f, nullptr);
    CHECK(doc1.dump(2) == doc2.dump(2));
    CHECK(doc1["meta"]["command"] == "conf");
    CHECK(doc1["meta"].contains("engine_version"));
    FBCharacter back = character_from_json(doc1["graded"], 2);
    CHECK(back == f);
}

TEST_CASE("report serialization") {
    StabilityReport rep;
    rep.mode = "toptriv";
    rep.n = 2;
    rep.d = 1;
    rep.m = 1;
    rep.b = Rat(1, 2);
    rep.vanishing = "test";
    rep.certified = true;
    Json doc = report_to_json(rep);
    CHECK(doc["b"] == "1/2");
    CHECK(doc["mode"] == "toptriv");
    CHECK(doc["s"].is_null());
}

TEST_CASE("character table rendering") {
    FBCharacter f(2);
    f.add(2, 1, 1, SymFunc::h(2));
    std::string table = character_table(f);
    CHECK(table.find("s[2]") != std::string::npos);
    CHECK(table.find("dim") != std::string::npos);
}

TEST_CASE("result documents survive a parse/dump cycle byte for byte") {
    FBCharacter f(3);
    f.add(1, 0, 0, SymFunc::h(1));
    f.add(2, 1, 1, SymFunc::s(Partition{1, 1}));
    StabilityReport rep;
    rep.mode = "iterate";
    rep.b = Rat(2, 3);
    rep.vanishing = "x";
    Json doc = result_file("stability", Json{{"n", 2}}, &f, &rep);
    std::string text = doc.dump(2);
    Json reparsed = Json::parse(text);
    CHECK(reparsed.dump(2) == text);
    CHECK(character_from_json(reparsed["graded"], 3) == f);
}
