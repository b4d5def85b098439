#pragma once

#include "aistriu/common.hpp"
#include "aistriu/corpus.hpp"
#include "aistriu/grammar.hpp"

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace aistriu {

inline constexpr std::size_t kBasisSize = 5;

using NounVector = std::array<Rational, kBasisSize>;

enum class Orientation { SubjectObject, ObjectSubject };

std::string to_string(Orientation o);
Orientation parse_orientation(std::string_view text);

struct VerbMatrix {
  std::array<std::array<Rational, kBasisSize>, kBasisSize> entries{};
  Orientation orientation = Orientation::SubjectObject;

  // Weight for subject basis index i and object basis index j.
  Rational weight(std::size_t subject, std::size_t object) const;
};

struct SentenceMeaning {
  // (i, j) with 0-based basis indices; zero coefficients are never stored.
  std::map<std::pair<std::size_t, std::size_t>, Rational> coeffs;

  void add(std::size_t i, std::size_t j, const Rational& v);
  bool is_zero() const { return coeffs.empty(); }
  SentenceMeaning scaled(const Rational& k) const;
  friend bool operator==(const SentenceMeaning&, const SentenceMeaning&) = default;
};

// "{(2,1):320, (2,2):32}" with 1-based indices.
std::string to_string(const SentenceMeaning& m);

Rational inner(const SentenceMeaning& a, const SentenceMeaning& b);
Rational length(const SentenceMeaning& m);  // self inner product
double similarity(const SentenceMeaning& a, const SentenceMeaning& b);

NounVector hadamard(const NounVector& a, const NounVector& b);

class EvaluationError : public Error {
 public:
  using Error::Error;
};

struct DistribModel {
  Language language = Language::English;
  std::vector<std::string> basis;
  std::map<std::string, NounVector> nouns;  // all maps keyed by canonical_key
  std::map<std::string, VerbMatrix> verbs;
  std::map<std::string, NounVector> adjectives;
  std::map<std::string, NounVector> pp_heads;

  const NounVector& noun(std::string_view name) const;
  const VerbMatrix& verb(std::string_view name) const;
  const NounVector& adjective(std::string_view name) const;
  const NounVector& pp_head(std::string_view name) const;

  static DistribModel parse(std::string_view text);
  static DistribModel load(const std::filesystem::path& path);
  std::string serialize() const;

  // Display names for serialization, keyed like the maps.
  std::map<std::string, std::string> names;
};

// Which vector modifies a noun under a preposition phrase.
enum class PrepositionRule { ObjectNoun, PhraseVector };

struct EvalOptions {
  PrepositionRule preposition = PrepositionRule::ObjectNoun;
};

SentenceMeaning evaluate(const ReductionPlan& plan, const std::vector<TypedToken>& tokens,
                         const DistribModel& model, const EvalOptions& options = {});

struct ParsedSentence {
  std::vector<TypedToken> tokens;
  ReductionPlan plan;
};

ParsedSentence parse_sentence(std::string_view sentence, Language lang, const Lexicon& lexicon);

SentenceMeaning meaning_of(std::string_view sentence, const Lexicon& lexicon,
                           const DistribModel& model, const EvalOptions& options = {});

struct VerbBuild {
  VerbMatrix matrix;
  std::size_t occurrences = 0;
};

// Sums subject (x) object over transitive occurrences of any of `forms`.
// Copulas count only when followed by an indefinite article.
VerbBuild build_verb_matrix(const CorpusDoc& doc, const std::vector<std::string>& forms,
                            Category category, const std::map<std::string, NounVector>& nouns,
                            const CorpusTables& tables);

// Sum of the vectors of the nouns the adjective modifies.
NounVector build_adjective_vector(const CorpusDoc& doc, std::string_view adjective,
                                  const std::map<std::string, NounVector>& nouns,
                                  const std::vector<std::string>& adjectives,
                                  const CorpusTables& tables);

// Noun vectors from window counts, adjective and phrase vectors, verb matrices.
// Verbs without transitive occurrences are listed in `warnings`.
DistribModel build_model(const CorpusDoc& doc, const Lexicon& lexicon,
                         const std::vector<std::string>& basis, int window,
                         const CorpusTables& tables, std::vector<std::string>* warnings = nullptr);

}  // namespace aistriu
