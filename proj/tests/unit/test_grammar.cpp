#include "doctest.h"
#include "fixtures.hpp"

using namespace aistriu;

namespace {

std::vector<PregroupType> types_of(const std::vector<TypedToken>& tokens) {
  std::vector<PregroupType> out;
  for (const auto& t : tokens) out.push_back(t.entry.ptype);
  return out;
}

std::vector<PregroupType> parse_all(std::initializer_list<const char*> texts) {
  std::vector<PregroupType> out;
  for (auto t : texts) out.push_back(parse_type(t));
  return out;
}

}  // namespace

TEST_CASE("adjoints shift orders and reverse sequences") {
  CHECK(adjoint(parse_type("n"), Side::Left) == parse_type("nl"));
  CHECK(adjoint(parse_type("nl"), Side::Right) == parse_type("n"));
  CHECK(adjoint(parse_type("s nl"), Side::Left) == parse_type("nll sl"));
  CHECK(adjoint(parse_type("nr s"), Side::Right) == parse_type("sr nrr"));
  CHECK_THROWS_AS(adjoint(parse_type("nll"), Side::Left), OutOfScopeType);
  CHECK_THROWS_AS(adjoint(parse_type("nrr"), Side::Right), OutOfScopeType);
}

TEST_CASE("type syntax") {
  CHECK(parse_type("n^r s n^{ll}") == parse_type("nr s nll"));
  CHECK(to_string(parse_type("nr s nl")) == "n^r s n^l");
  CHECK_THROWS_AS(parse_type("q"), ParseError);
  CHECK(cancels({BasicType::n, -1}, {BasicType::n, 0}));
  CHECK(cancels({BasicType::n, 0}, {BasicType::n, 1}));
  CHECK_FALSE(cancels({BasicType::n, 1}, {BasicType::n, 0}));
  CHECK_FALSE(cancels({BasicType::n, -1}, {BasicType::s, 0}));
}

TEST_CASE("Irish type assignment") {
  const auto& lex = test::fixtures().lexicon_ga;
  auto tokens = assign_types(tokenize_sentence("Bhris mé an vása faoin droichead mór inné", lex, Language::Irish),
                             Language::Irish, lex);
  CHECK(types_of(tokens) == parse_all({"s nl nl", "n", "n", "nr n", "nr n", "sr s"}));

  auto copula = assign_types(tokenize_sentence("Is Impire olc é Palpatine", lex, Language::Irish), Language::Irish, lex);
  REQUIRE(copula.size() == 4);
  CHECK(copula[3].surface == "é-Palpatine");
  CHECK(types_of(copula) == parse_all({"s nl nl", "n", "nr n", "n"}));
}

TEST_CASE("English nouns are basic") {
  const auto& lex = test::fixtures().lexicon_en;
  CHECK(lex.lookup("Anakin", Language::English).ptype == parse_type("n"));
  CHECK_THROWS_AS(lex.lookup("Chewbacca", Language::English), LookupError);
}

TEST_CASE("reduction plans") {
  auto plan = reduce(parse_all({"s nl nl", "n", "nr n", "n"}));
  CHECK(plan.pairings.size() == 3);
  CHECK(plan.result_type == parse_type("s"));
  CHECK(is_planar(plan.pairings));

  auto empty = find_reduction(parse_all({"n", "nr"}), PregroupType{});
  REQUIRE(empty.has_value());
  CHECK(empty->pairings.size() == 1);
  CHECK_THROWS_AS(reduce(parse_all({"n", "nr"})), NotASentence);
  CHECK_THROWS_AS(reduce(parse_all({"n", "n"})), NotASentence);
}

TEST_CASE("relative clause records copy and unit nodes") {
  const auto& data = test::fixtures();
  auto parsed = parse_sentence("Is ceannmáistir a casann Anakin go taobh dorcha na Fórsa é Palpatine", Language::Irish,
                               data.lexicon_ga);
  CHECK(parsed.plan.copy_nodes.size() == 1);
  CHECK(parsed.plan.unit_nodes.size() == 1);
  CHECK(parsed.plan.result_type == parse_type("s"));
}

TEST_CASE("planarity") {
  CHECK(is_planar({{0, 3}, {1, 2}}));
  CHECK_FALSE(is_planar({{0, 2}, {1, 3}}));
}
