#include "doctest.h"
#include "fixtures.hpp"

#include <cmath>

using namespace aistriu;

namespace {

const char* kPalpatine = "Palpatine is a mastermind who turns Anakin to the dark side of the Force";

SentenceMeaning en(const std::string& s, EvalOptions opts = {}) {
  return meaning_of(s, test::fixtures().lexicon_en, test::fixtures().model_en, opts);
}

SentenceMeaning ga(const std::string& s) {
  return meaning_of(s, test::fixtures().lexicon_ga, test::fixtures().model_ga);
}

NounVector vec(std::initializer_list<int> xs) {
  NounVector v{};
  std::size_t i = 0;
  for (int x : xs) v[i++] = Rational(x);
  return v;
}

}  // namespace

TEST_CASE("adjective vectors in the fixture model") {
  const auto& m = test::fixtures().model_en;
  CHECK(m.adjective("powerful") == vec({1, 2, 2, 1, 1}));
  CHECK(m.adjective("brave") == vec({7, 1, 2, 5, 0}));
  CHECK(m.noun("Anakin") == vec({1, 0, 0, 0, 0}));
}

TEST_CASE("relative clause sentence meanings") {
  CHECK(to_string(en(kPalpatine)) == "{(2,1):320, (2,2):32}");
  CHECK(to_string(ga("Is ceannmáistir a casann Anakin go taobh dorcha na Fórsa é Palpatine")) ==
        "{(2,1):330, (2,2):40}");
}

TEST_CASE("the phrase-vector rule does not give the printed meaning") {
  EvalOptions opts;
  opts.preposition = PrepositionRule::PhraseVector;
  CHECK(to_string(en(kPalpatine, opts)) != "{(2,1):320, (2,2):32}");
}

TEST_CASE("copula sentence meaning and its length") {
  auto m = en("Palpatine is an evil Emperor");
  CHECK(to_string(m) == "{(2,1):10, (2,2):100, (2,4):1, (2,5):9}");
  CHECK(length(m) == Rational(10182));
}

TEST_CASE("similarity scores") {
  auto p = en(kPalpatine);
  CHECK(similarity(p, p) == doctest::Approx(1.0));
  CHECK(similarity(p, en("Padmé is a mastermind who turns Anakin to the dark side of the Force")) == 0.0);
  auto a = en("Palpatine is an evil Emperor");
  auto b = ga("Is Impire olc é Palpatine");
  CHECK(inner(a, b) == Rational(10174));
  CHECK(similarity(a, b) == doctest::Approx(10174.0 / std::sqrt(10182.0 * 10180.0)).epsilon(1e-12));
  CHECK(similarity(SentenceMeaning{}, a) == 0.0);
}

TEST_CASE("verb matrix from a single occurrence") {
  CorpusDoc doc;
  doc.sentences = {{"Anakin", "fights", "Palpatine"}};
  doc.clauses = {{0, 0, 0}};
  std::map<std::string, NounVector> nouns{{"anakin", vec({1, 0, 0, 0, 0})}, {"palpatine", vec({0, 1, 0, 0, 0})}};
  auto built = build_verb_matrix(doc, {"fights"}, Category::TransitiveVerb, nouns, {});
  CHECK(built.occurrences == 1);
  for (std::size_t i = 0; i < kBasisSize; ++i) {
    for (std::size_t j = 0; j < kBasisSize; ++j) {
      CHECK(built.matrix.weight(i, j) == Rational(i == 0 && j == 1 ? 1 : 0));
    }
  }
}

TEST_CASE("model text round trip") {
  for (const auto* m : {&test::fixtures().model_en, &test::fixtures().model_ga}) {
    auto again = DistribModel::parse(m->serialize());
    CHECK(again.serialize() == m->serialize());
    CHECK(again.nouns == m->nouns);
    CHECK(again.adjectives == m->adjectives);
    CHECK(again.verbs.size() == m->verbs.size());
  }
}

TEST_CASE("missing words are reported") {
  CHECK_THROWS_AS(en("Chewbacca is an evil Emperor"), LookupError);
  DistribModel empty = test::fixtures().model_en;
  empty.nouns.erase("palpatine");
  CHECK_THROWS_AS(meaning_of("Palpatine is an evil Emperor", test::fixtures().lexicon_en, empty), EvaluationError);
}
