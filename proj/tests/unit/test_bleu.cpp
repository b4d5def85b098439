#include "doctest.h"
#include "fixtures.hpp"

#include <cmath>

using namespace aistriu;

namespace {

const std::vector<std::string> kUnits{"Mace Windu", "General Grievous", "Ginearál Grievous"};

double score(const char* r, const char* c, Smoothing s = Smoothing::Method7Legacy) {
  return bleu(bleu_tokens(r, kUnits), bleu_tokens(c, kUnits), s).score;
}

}  // namespace

TEST_CASE("tokens are lowercased and stripped") {
  CHECK(bleu_tokens("Yoda, the Jedi!") == Tokens{"yoda", "the", "jedi"});
  CHECK(bleu_tokens("Mace Windu turns", kUnits).size() == 2);
}

TEST_CASE("modified precision clips counts") {
  Tokens r{"the", "cat", "sat"};
  Tokens c{"the", "the", "the"};
  auto p = modified_precision(r, c, 1);
  CHECK(p.matched == 1);
  CHECK(p.total == 3);
  CHECK(modified_precision(r, {"cat"}, 2).value() == Rational(0));
  for (int n = 1; n <= 3; ++n) CHECK(modified_precision(r, r, n).value() == Rational(1));
}

TEST_CASE("brevity penalty") {
  Tokens five{"a", "b", "c", "d", "e"};
  Tokens six{"a", "b", "c", "d", "e", "f"};
  CHECK(brevity_penalty(five, five) == 1.0);
  CHECK(brevity_penalty(five, six) == 1.0);
  CHECK(brevity_penalty(six, five) == doctest::Approx(std::exp(-0.2)));
}

TEST_CASE("identical sentences") {
  CHECK(score("Yoda is a powerful Jedi", "Yoda is a powerful Jedi", Smoothing::None) == doctest::Approx(1.0));
  // The averaging step of method 7 seeds with p1 + 1, lifting a perfect
  // five-word match to (4/3 * 10/9 * 28/27 * 82/81)^(1/4).
  const double lifted = std::pow(4.0 / 3 * 10.0 / 9 * 28.0 / 27 * 82.0 / 81, 0.25);
  for (auto s : {Smoothing::Method7, Smoothing::Method7Legacy}) {
    CHECK(score("Yoda is a powerful Jedi", "Yoda is a powerful Jedi", s) == doctest::Approx(lifted).epsilon(1e-12));
  }
  CHECK_THROWS(score("Yoda", ""));
}

TEST_CASE("table rows within the printed band") {
  CHECK(std::abs(score("Yoda is a powerful Jedi", "Yoda turns to the powerful Jedi") - 0.32) <= 0.05);
  CHECK(std::abs(score("Anakin is a Sith Lord", "Obi-Wan is a Sith Lord") - 0.7) <= 0.05);
}

TEST_CASE("smoothing names") {
  CHECK(parse_smoothing("method7") == Smoothing::Method7);
  CHECK(parse_smoothing("method7-legacy") == Smoothing::Method7Legacy);
  CHECK(parse_smoothing("none") == Smoothing::None);
  CHECK_THROWS(parse_smoothing("method9"));
}
