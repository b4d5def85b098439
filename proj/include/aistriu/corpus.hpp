#pragma once

#include "aistriu/common.hpp"

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace aistriu {

struct CorpusTables {
  // Multiword units and proper nouns, case preserved ("Mace Windu", "Anakin").
  std::vector<std::string> multiwords;
  // Inflected form (canonical key) -> head form.
  std::map<std::string, std::string> lemmas;
  // Literal phrase rewrites applied to the raw text, in order.
  std::vector<std::pair<std::string, std::string>> substitutions;
  // Articles, skipped when looking for the noun an adjective modifies.
  std::set<std::string> determiners;
  // Particles merged into the following token ("é Palpatine" -> "é-Palpatine").
  std::set<std::string> particles;
  // Words opening a negated span that runs to the end of their clause.
  std::set<std::string> negations;

  // Reads multiword_<lang>.txt, lemma_<lang>.txt, substitution_<lang>.txt
  // and function_<lang>.txt from `dir`; missing files leave fields empty.
  static CorpusTables load(const std::filesystem::path& dir, Language lang);
};

struct CorpusDoc {
  Language language = Language::English;
  std::vector<std::vector<std::string>> sentences;
  // Clause number of each token; commas, semicolons and colons start a new clause.
  std::vector<std::vector<int>> clauses;
};

// Whitespace split with surrounding punctuation removed. Clause separators
// are returned as their own "," tokens when keep_separators is set.
std::vector<std::string> raw_tokens(std::string_view sentence, bool keep_separators = false);

// Splits on '.', '!' and '?'.
std::vector<std::string> split_sentences(std::string_view text);

// Longest-match merge of multiword units. Matched units take the table's
// spelling with spaces replaced by '-'; other tokens are left unchanged.
std::vector<std::string> merge_multiwords(const std::vector<std::string>& tokens,
                                          const std::vector<std::string>& units);

CorpusDoc segment_and_tokenize(std::string_view text, Language lang, const CorpusTables& tables);

CorpusDoc concat(const CorpusDoc& a, const CorpusDoc& b);

struct CooccurrenceTable {
  std::vector<std::string> basis;
  std::map<std::string, std::vector<std::int64_t>> counts;  // keyed by canonical_key

  std::vector<std::int64_t> at(std::string_view noun) const;
};

// Basis labels "arg-<adjective>" count occurrences near nouns the adjective
// modifies; every other label counts the word itself. `adjectives` lists the
// words skipped while looking for the modified noun.
CooccurrenceTable window_counts(const CorpusDoc& doc, const std::vector<std::string>& basis,
                                int m, const std::vector<std::string>& adjectives,
                                const CorpusTables& tables = {});

// Number of position pairs (p, q), p != q, |p - q| <= m, in one sentence,
// with token a at p and token b at q.
std::int64_t cooccurrence_events(const CorpusDoc& doc, std::string_view a, std::string_view b,
                                 int m);

// Index of the noun modified by the adjective at `pos`, or -1.
int modified_noun(const std::vector<std::string>& sentence, std::size_t pos, Language lang,
                  const std::set<std::string>& adjectives, const CorpusTables& tables);

}  // namespace aistriu
