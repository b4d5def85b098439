#include "doctest.h"
#include "fixtures.hpp"

#include "aistriu/json_io.hpp"

using namespace aistriu;

TEST_CASE("concept JSON round trip") {
  const auto& data = test::fixtures();
  for (const auto& c : fixture_concepts(data, Language::Irish, false)) {
    auto back = concept_from_json(concept_to_json(c, data.schema), data.schema);
    CHECK(back.name == c.name);
    CHECK(back.tree_set == c.tree_set);
    CHECK(concept_distance(back, c, data.schema, data.tree_ga).total == 0.0);
  }
}

TEST_CASE("concept JSON validation") {
  const auto& schema = test::fixtures().schema;
  auto minimal = concept_from_json(Json::parse(R"({"name": "x", "tree_set": ["e0"]})"), schema);
  for (const auto& p : minimal.properties) CHECK(p.is_full());
  CHECK_THROWS_AS(concept_from_json(Json::parse(R"({"name": "x", "properties": {"smell": "full"}})"), schema), ParseError);
  CHECK_THROWS_AS(concept_from_json(Json::parse(R"({"name": "x", "properties": {"colour": [[1, 0]]}})"), schema), ParseError);
  CHECK_THROWS_AS(concept_from_json(Json::parse(R"({"name": "x", "properties": {"mass": [[3]]}})"), schema), ParseError);
}

TEST_CASE("rationals and meanings") {
  CHECK(rational_to_json(Rational(3)) == Json(3));
  CHECK(rational_to_json(Rational(3, 4)) == Json("3/4"));
  SentenceMeaning m;
  m.add(1, 0, Rational(320));
  auto j = meaning_to_json(m);
  CHECK(j["text"] == "{(2,1):320}");
  CHECK(j["coefficients"][0][0] == 2);
}
