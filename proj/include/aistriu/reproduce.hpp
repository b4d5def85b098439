#pragma once

#include "aistriu/bleu.hpp"
#include "aistriu/concepts.hpp"
#include "aistriu/corpus.hpp"
#include "aistriu/distrib.hpp"
#include "aistriu/grammar.hpp"
#include "aistriu/metric.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace aistriu {

// Every shipped fixture, loaded from one data directory.
struct FixtureData {
  Lexicon lexicon_en, lexicon_ga;
  DistribModel model_en, model_ga;
  CorpusTables corpus_tables_en, corpus_tables_ga;
  PropertySchema schema;
  AdjectiveValueTable adjectives_en, adjectives_ga;
  HypernymTree tree_en, tree_ga;
  CorpusTables concept_tables_en, concept_tables_ga;
  std::map<std::string, Descriptors> descriptors_en, descriptors_ga;
  std::filesystem::path dir;

  static FixtureData load(const std::filesystem::path& dir);

  const Lexicon& lexicon(Language l) const { return l == Language::English ? lexicon_en : lexicon_ga; }
  const DistribModel& model(Language l) const { return l == Language::English ? model_en : model_ga; }
};

// Nouns of the concept corpora, in the order Venus, Jupiter, Mars, Apple, Sun.
const std::vector<std::string>& concept_nouns(Language lang);

// Concepts from the shipped descriptor tables, or extracted from the corpus.
std::vector<Concept> fixture_concepts(const FixtureData& data, Language lang, bool from_corpus,
                                    std::vector<std::string>* notes = nullptr);

// Every sentence evaluated by the regression suites.
std::vector<std::pair<std::string, Language>> fixture_sentences();

// True when `printed` equals `value` rounded or truncated to `decimals` places.
bool matches_printed(double value, double printed, int decimals);

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id = 0;
  std::string title;
  std::vector<Check> checks;

  bool pass() const;
};

struct DiagnosticRow {
  std::string suite;
  std::string name;
  double computed = 0.0;
  std::optional<double> printed;
  std::string note;
};

struct ReproduceReport {
  std::vector<Criterion> criteria;
  std::vector<DiagnosticRow> diagnostics;

  bool pass() const;
};

// contraction, crosslingual, similarity, relative-clause, bleu, concepts, metric.
const std::vector<std::string>& reproduce_suites();

// Runs one suite, or every suite for "all".
ReproduceReport reproduce(const FixtureData& data, const std::string& suite = "all");

std::string format_report(const ReproduceReport& report);

}  // namespace aistriu
