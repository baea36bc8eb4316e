#include "superder/document.hpp"
#include "superder/families.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace superder;

namespace {

const char* h01_doc = R"({
  "format_version": "1",
  "sdim": [1, 1],
  "names": ["z", "w"],
  "brackets": [{"left": "w", "right": "w", "value": {"z": "1"}}]
})";

}  // namespace

TEST_CASE("parsing the H(0,1) document")
{
    const auto L = parse_algebra_document(h01_doc);
    CHECK(L == heisenberg_h01());
    CHECK(L.names() == std::vector<std::string>{"z", "w"});
    CHECK(validate(L).ok());
}

TEST_CASE("skew partners are completed by the sign rule")
{
    const char* doc = R"({
      "format_version": "1",
      "sdim": [3, 2],
      "names": ["x0", "x1", "x2", "y1", "y2"],
      "brackets": [
        {"left": "x0", "right": "x1", "value": {"x2": "1"}},
        {"left": "x0", "right": "y1", "value": {"y2": "1"}}
      ]
    })";
    const auto L = parse_algebra_document(doc);
    CHECK(L == model_filiform(2, 2));
    // the completed partner [x1, x0] = -x2
    CHECK(L.table(1, 0)[2] == Rational(-1));
}

TEST_CASE("indices are accepted for basis references")
{
    const char* doc = R"({
      "format_version": "1",
      "sdim": [1, 1],
      "brackets": [{"left": 1, "right": 1, "value": {"0": "1/1"}}]
    })";
    const auto L = parse_algebra_document(doc);
    CHECK(L.table(1, 1)[0] == 1);
}

TEST_CASE("parse errors")
{
    CHECK_THROWS_AS(parse_algebra_document("{"), ParseError);
    CHECK_THROWS_AS(parse_algebra_document("[]"), ParseError);
    CHECK_THROWS_AS(parse_algebra_document(R"({"format_version": "2", "sdim": [1, 0]})"), ParseError);
    CHECK_THROWS_AS(parse_algebra_document(R"({"format_version": "1", "sdim": [1]})"), ParseError);
    CHECK_THROWS_AS(parse_algebra_document(R"({"format_version": "1", "sdim": [1, -1]})"), ParseError);
    CHECK_THROWS_AS(parse_algebra_document(R"({"format_version": "1", "sdim": [1, 1], "names": ["a"]})"), ParseError);
    CHECK_THROWS_AS(parse_algebra_document(R"({"format_version": "1", "sdim": [1, 1], "names": ["a", "a"]})"),
                    ParseError);

    SECTION("unknown basis names are listed")
    {
        const char* doc = R"({
          "format_version": "1",
          "sdim": [1, 1],
          "names": ["z", "w"],
          "brackets": [{"left": "nope", "right": "w", "value": {"also_nope": "1"}}]
        })";
        CHECK_THROWS_WITH(parse_algebra_document(doc),
                          Catch::Matchers::ContainsSubstring("nope") &&
                              Catch::Matchers::ContainsSubstring("also_nope"));
    }
    SECTION("no floats, no numeric literals")
    {
        const char* doc = R"({
          "format_version": "1",
          "sdim": [1, 1],
          "names": ["z", "w"],
          "brackets": [{"left": "w", "right": "w", "value": {"z": 0.5}}]
        })";
        CHECK_THROWS_AS(parse_algebra_document(doc), ParseError);
        const char* doc2 = R"({
          "format_version": "1",
          "sdim": [1, 1],
          "names": ["z", "w"],
          "brackets": [{"left": "w", "right": "w", "value": {"z": 1}}]
        })";
        CHECK_THROWS_AS(parse_algebra_document(doc2), ParseError);
        const char* doc3 = R"({
          "format_version": "1",
          "sdim": [1, 1],
          "names": ["z", "w"],
          "brackets": [{"left": "w", "right": "w", "value": {"z": "0.5"}}]
        })";
        CHECK_THROWS_AS(parse_algebra_document(doc3), ParseError);
    }
    SECTION("double listing")
    {
        const char* dup = R"({
          "format_version": "1",
          "sdim": [1, 1],
          "names": ["z", "w"],
          "brackets": [
            {"left": "w", "right": "w", "value": {"z": "1"}},
            {"left": "w", "right": "w", "value": {"z": "2"}}
          ]
        })";
        CHECK_THROWS_WITH(parse_algebra_document(dup), Catch::Matchers::ContainsSubstring("twice"));

        const char* inconsistent = R"({
          "format_version": "1",
          "sdim": [3, 0],
          "names": ["x", "y", "z"],
          "brackets": [
            {"left": "x", "right": "y", "value": {"z": "1"}},
            {"left": "y", "right": "x", "value": {"z": "1"}}
          ]
        })";
        CHECK_THROWS_WITH(parse_algebra_document(inconsistent),
                          Catch::Matchers::ContainsSubstring("skew"));
    }
    SECTION("consistent double listing is accepted")
    {
        const char* doc = R"({
          "format_version": "1",
          "sdim": [3, 0],
          "names": ["x", "y", "z"],
          "brackets": [
            {"left": "x", "right": "y", "value": {"z": "1"}},
            {"left": "y", "right": "x", "value": {"z": "-1"}}
          ]
        })";
        CHECK(parse_algebra_document(doc).table(0, 1)[2] == 1);
    }
}

TEST_CASE("serialization round-trips exactly")
{
    std::vector<LieSuperalgebra> samples{heisenberg_h01(), model_filiform(3, 2), abelian(2, 2)};
    for (const auto& L : samples) {
        const Json doc = serialize_algebra(L);
        const auto back = parse_algebra_document(doc.dump());
        CHECK(back == L);
        CHECK(back.names() == L.names());
        // emitting again is byte-identical
        CHECK(serialize_algebra(back).dump(2) == doc.dump(2));
    }
}

TEST_CASE("a parsed invalid-axiom document still parses, validation flags it")
{
    const char* doc = R"({
      "format_version": "1",
      "sdim": [1, 1],
      "names": ["z", "w"],
      "brackets": [{"left": "w", "right": "w", "value": {"w": "1"}}]
    })";
    const auto L = parse_algebra_document(doc);
    const auto v = validate(L);
    REQUIRE_FALSE(v.ok());
    CHECK(v.violations.front().kind == "grading");
}
