#pragma once

#include "aistriu/common.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace aistriu {

enum class BasicType { n, s, j, sigma };

struct SimpleType {
  BasicType base = BasicType::n;
  int adjoint_order = 0;  // -2 = ll, -1 = l, 0 plain, +1 = r, +2 = rr

  friend bool operator==(const SimpleType&, const SimpleType&) = default;
  friend auto operator<=>(const SimpleType&, const SimpleType&) = default;
};

struct PregroupType {
  std::vector<SimpleType> simples;

  friend bool operator==(const PregroupType&, const PregroupType&) = default;
};

inline constexpr int kMinAdjointOrder = -2;
inline constexpr int kMaxAdjointOrder = 2;

class OutOfScopeType : public Error {
 public:
  using Error::Error;
};

enum class Side { Left, Right };

PregroupType adjoint(const PregroupType& t, Side side);

// a·b -> 1 exactly when b = a^r (equivalently a = b^l).
bool cancels(const SimpleType& a, const SimpleType& b);

// Accepts "nr s nl", "nr n nll sl" and the caret forms "n^r", "n^{ll}".
PregroupType parse_type(std::string_view text);
std::string to_string(const SimpleType& t);
std::string to_string(const PregroupType& t);
PregroupType concat(const std::vector<PregroupType>& types);

enum class Category {
  Noun,
  TransitiveVerb,
  Copula,
  Adjective,
  Adverb,
  PrepositionPhrase,
  Preposition,
  RelativePronounSubject,
  RelativePronounObject,
  Determiner,
};

Category parse_category(std::string_view text);
std::string to_string(Category c);

// What each wire of an entry's type carries.
enum class Role { Subject, Object, Sentence, Input, Output, Head, Argument };

Role parse_role(std::string_view text);
std::string to_string(Role r);

struct LexiconEntry {
  std::string surface;
  Language language = Language::English;
  Category category = Category::Noun;
  PregroupType ptype;
  std::vector<Role> roles;           // one per simple type
  std::vector<Role> relative_roles;  // roles when the verb heads a relative clause
  std::string model_key;             // name of the vector or matrix in the model
  std::string object;                // prepositional object noun, phrase heads only
};

// The type a category must carry in a language.
PregroupType expected_type(Category c, Language lang);
std::vector<Role> default_roles(Category c, Language lang);
std::vector<Role> default_relative_roles(Category c, Language lang);

class LookupError : public Error {
 public:
  explicit LookupError(std::string token);
  const std::string& token() const { return token_; }

 private:
  std::string token_;
};

class AmbiguityError : public Error {
 public:
  AmbiguityError(std::string token, std::vector<std::string> candidates);
  const std::vector<std::string>& candidates() const { return candidates_; }

 private:
  std::vector<std::string> candidates_;
};

class Lexicon {
 public:
  Lexicon() = default;
  explicit Lexicon(std::vector<LexiconEntry> entries);

  // Key-value records separated by blank lines; '#' starts a comment.
  static Lexicon parse(std::string_view text);
  static Lexicon load(const std::filesystem::path& path);

  // Finds the entry for a token. Tokens may carry a category hint as
  // "surface|category". A leading determiner joined by '-' is stripped
  // when the whole token has no entry.
  const LexiconEntry& lookup(std::string_view token, Language lang) const;

  std::vector<std::string> surfaces(Language lang) const;
  std::vector<std::string> determiners(Language lang) const;
  const std::vector<LexiconEntry>& entries() const { return entries_; }

 private:
  std::vector<const LexiconEntry*> find(const std::string& key, Language lang) const;

  std::vector<LexiconEntry> entries_;
  std::multimap<std::string, std::size_t> index_;
};

// Splits a sentence, merges multiword lexicon surfaces and attaches
// determiners to the following token ("é Palpatine" -> "é-Palpatine").
std::vector<std::string> tokenize_sentence(std::string_view sentence, const Lexicon& lexicon,
                                           Language lang);

struct TypedToken {
  std::string surface;
  LexiconEntry entry;
};

std::vector<TypedToken> assign_types(const std::vector<std::string>& tokens, Language lang,
                                     const Lexicon& lexicon);

struct WireRef {
  std::size_t token = 0;
  std::size_t slot = 0;
};

struct Pairing {
  std::size_t left = 0;   // flat wire index
  std::size_t right = 0;

  friend bool operator==(const Pairing&, const Pairing&) = default;
};

// Frobenius copy introduced by a relative pronoun.
struct CopyNode {
  std::size_t token = 0;
  std::size_t head = 0;      // flat wire joined to the head noun
  std::size_t output = 0;    // flat wire carrying the modified noun onwards
  std::size_t argument = 0;  // flat wire fed to the embedded verb
};

// Unit i_S discarding the embedded sentence wire.
struct UnitNode {
  std::size_t token = 0;
  std::size_t wire = 0;
};

struct ReductionPlan {
  std::vector<SimpleType> flat;
  std::vector<WireRef> wires;
  std::vector<Pairing> pairings;
  std::vector<CopyNode> copy_nodes;
  std::vector<UnitNode> unit_nodes;
  std::vector<std::size_t> residual_wires;
  PregroupType result_type;

  std::optional<std::size_t> partner(std::size_t wire) const;
  std::size_t wire_index(std::size_t token, std::size_t slot) const;
};

class NotASentence : public Error {
 public:
  explicit NotASentence(PregroupType residual);
  const PregroupType& residual() const { return residual_; }

 private:
  PregroupType residual_;
};

// Searches for a planar reduction of the concatenation to `target`.
// Greedy leftmost-innermost cancellation first, then backtracking.
std::optional<ReductionPlan> find_reduction(const std::vector<PregroupType>& types,
                                            const PregroupType& target);

// Reduction to [s]; throws NotASentence with the shortest residual found.
ReductionPlan reduce(const std::vector<PregroupType>& types);

// As above, and records copy and unit nodes for relative pronouns.
ReductionPlan reduce(const std::vector<TypedToken>& tokens);

bool is_planar(const std::vector<Pairing>& pairings);

// Applies the pairings as cancellations; throws Error if one is invalid.
PregroupType apply_pairings(const std::vector<SimpleType>& flat,
                            const std::vector<Pairing>& pairings);

}  // namespace aistriu
