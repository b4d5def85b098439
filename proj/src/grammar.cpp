#include "aistriu/grammar.hpp"

#include "aistriu/corpus.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace aistriu {
namespace {

SimpleType st(BasicType b, int z) { return SimpleType{b, z}; }

std::string base_name(BasicType b) {
  switch (b) {
    case BasicType::n: return "n";
    case BasicType::s: return "s";
    case BasicType::j: return "j";
    case BasicType::sigma: return "sigma";
  }
  return "?";
}

int suffix_order(const std::string& suffix, std::string_view whole) {
  if (suffix.empty()) return 0;
  if (suffix == "l") return -1;
  if (suffix == "ll") return -2;
  if (suffix == "r") return 1;
  if (suffix == "rr") return 2;
  throw ParseError("bad adjoint suffix in '" + std::string(whole) + "'");
}

SimpleType parse_simple(const std::string& word) {
  std::string tag = word;
  std::string suffix;
  if (auto caret = word.find('^'); caret != std::string::npos) {
    tag = word.substr(0, caret);
    for (char c : word.substr(caret + 1)) {
      if (c != '{' && c != '}') suffix.push_back(c);
    }
  } else {
    for (const char* name : {"sigma", "n", "s", "j"}) {
      std::string_view nv(name);
      if (word.rfind(nv, 0) == 0) {
        tag = std::string(nv);
        suffix = word.substr(nv.size());
        break;
      }
    }
  }
  BasicType base;
  if (tag == "n") {
    base = BasicType::n;
  } else if (tag == "s") {
    base = BasicType::s;
  } else if (tag == "j") {
    base = BasicType::j;
  } else if (tag == "sigma") {
    base = BasicType::sigma;
  } else {
    throw ParseError("unknown basic type in '" + word + "'");
  }
  return SimpleType{base, suffix_order(suffix, word)};
}

const std::vector<std::pair<Category, std::string>> kCategoryNames = {
    {Category::Noun, "noun"},
    {Category::TransitiveVerb, "transitive-verb"},
    {Category::Copula, "copula"},
    {Category::Adjective, "adjective"},
    {Category::Adverb, "adverb"},
    {Category::PrepositionPhrase, "preposition-phrase-head"},
    {Category::Preposition, "preposition"},
    {Category::RelativePronounSubject, "relative-pronoun-subject"},
    {Category::RelativePronounObject, "relative-pronoun-object"},
    {Category::Determiner, "determiner"},
};

const std::vector<std::pair<Role, std::string>> kRoleNames = {
    {Role::Subject, "subject"}, {Role::Object, "object"},   {Role::Sentence, "sentence"},
    {Role::Input, "input"},     {Role::Output, "output"},   {Role::Head, "head"},
    {Role::Argument, "argument"},
};

std::vector<Role> parse_roles(const std::string& text) {
  std::vector<Role> out;
  for (const auto& w : split_ws(text)) out.push_back(parse_role(w));
  return out;
}

}  // namespace

PregroupType adjoint(const PregroupType& t, Side side) {
  const int shift = side == Side::Left ? -1 : 1;
  PregroupType out;
  for (auto it = t.simples.rbegin(); it != t.simples.rend(); ++it) {
    int z = it->adjoint_order + shift;
    if (z < kMinAdjointOrder || z > kMaxAdjointOrder) {
      throw OutOfScopeType("adjoint of " + to_string(t) + " leaves the supported orders");
    }
    out.simples.push_back({it->base, z});
  }
  return out;
}

bool cancels(const SimpleType& a, const SimpleType& b) {
  return a.base == b.base && b.adjoint_order == a.adjoint_order + 1;
}

PregroupType parse_type(std::string_view text) {
  PregroupType t;
  for (const auto& w : split_ws(text)) t.simples.push_back(parse_simple(w));
  return t;
}

std::string to_string(const SimpleType& t) {
  std::string out = base_name(t.base);
  switch (t.adjoint_order) {
    case 0: break;
    case -1: out += "^l"; break;
    case -2: out += "^{ll}"; break;
    case 1: out += "^r"; break;
    case 2: out += "^{rr}"; break;
    default: out += "^{" + std::to_string(t.adjoint_order) + "}"; break;
  }
  return out;
}

std::string to_string(const PregroupType& t) {
  std::vector<std::string> parts;
  for (const auto& s : t.simples) parts.push_back(to_string(s));
  return join(parts, " ");
}

PregroupType concat(const std::vector<PregroupType>& types) {
  PregroupType out;
  for (const auto& t : types) out.simples.insert(out.simples.end(), t.simples.begin(), t.simples.end());
  return out;
}

Category parse_category(std::string_view text) {
  for (const auto& [c, name] : kCategoryNames) {
    if (name == text) return c;
  }
  throw ParseError("unknown category '" + std::string(text) + "'");
}

std::string to_string(Category c) {
  for (const auto& [cat, name] : kCategoryNames) {
    if (cat == c) return name;
  }
  return "?";
}

Role parse_role(std::string_view text) {
  for (const auto& [r, name] : kRoleNames) {
    if (name == text) return r;
  }
  throw ParseError("unknown role '" + std::string(text) + "'");
}

std::string to_string(Role r) {
  for (const auto& [role, name] : kRoleNames) {
    if (role == r) return name;
  }
  return "?";
}

PregroupType expected_type(Category c, Language lang) {
  using B = BasicType;
  const bool en = lang == Language::English;
  switch (c) {
    case Category::Noun: return {{st(B::n, 0)}};
    case Category::TransitiveVerb:
    case Category::Copula:
      if (en) return {{st(B::n, 1), st(B::s, 0), st(B::n, -1)}};
      return {{st(B::s, 0), st(B::n, -1), st(B::n, -1)}};
    case Category::Adjective:
      if (en) return {{st(B::n, 0), st(B::n, -1)}};
      return {{st(B::n, 1), st(B::n, 0)}};
    case Category::Adverb: return {{st(B::s, 1), st(B::s, 0)}};
    case Category::PrepositionPhrase: return {{st(B::n, 1), st(B::n, 0)}};
    case Category::Preposition: return {{st(B::n, 0), st(B::n, -1)}};
    case Category::RelativePronounSubject:
      return {{st(B::n, 1), st(B::n, 0), st(B::s, -1), st(B::n, 0)}};
    case Category::RelativePronounObject:
      return {{st(B::n, 1), st(B::n, 0), st(B::n, -2), st(B::s, -1)}};
    case Category::Determiner: return {};
  }
  return {};
}

std::vector<Role> default_roles(Category c, Language lang) {
  using R = Role;
  const bool en = lang == Language::English;
  switch (c) {
    case Category::Noun: return {R::Output};
    case Category::TransitiveVerb:
      if (en) return {R::Subject, R::Sentence, R::Object};
      return {R::Sentence, R::Object, R::Subject};
    case Category::Copula:
      if (en) return {R::Subject, R::Sentence, R::Object};
      return {R::Sentence, R::Subject, R::Object};
    case Category::Adjective:
      if (en) return {R::Output, R::Input};
      return {R::Input, R::Output};
    case Category::Adverb: return {R::Input, R::Output};
    case Category::PrepositionPhrase: return {R::Input, R::Output};
    case Category::Preposition: return {R::Output, R::Input};
    case Category::RelativePronounSubject: return {R::Head, R::Output, R::Sentence, R::Argument};
    case Category::RelativePronounObject: return {R::Head, R::Output, R::Argument, R::Sentence};
    case Category::Determiner: return {};
  }
  return {};
}

std::vector<Role> default_relative_roles(Category c, Language lang) {
  // Inside an Irish relative clause the verb's arguments read in VOS order.
  if (c == Category::TransitiveVerb && lang == Language::Irish) {
    return {Role::Sentence, Role::Subject, Role::Object};
  }
  return default_roles(c, lang);
}

LookupError::LookupError(std::string token)
    : Error("no lexicon entry for '" + token + "'"), token_(std::move(token)) {}

AmbiguityError::AmbiguityError(std::string token, std::vector<std::string> candidates)
    : Error("ambiguous token '" + token + "': " + join(candidates, ", ")),
      candidates_(std::move(candidates)) {}

NotASentence::NotASentence(PregroupType residual)
    : Error("not a sentence; residual type: " +
            (residual.simples.empty() ? std::string("1") : to_string(residual))),
      residual_(std::move(residual)) {}

Lexicon::Lexicon(std::vector<LexiconEntry> entries) : entries_(std::move(entries)) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    auto& e = entries_[i];
    if (e.surface.empty()) throw ParseError("lexicon entry without surface");
    if (e.ptype != expected_type(e.category, e.language)) {
      throw ParseError("entry '" + e.surface + "': type " + to_string(e.ptype) + " does not match " +
                       to_string(e.category) + " in " + language_code(e.language));
    }
    if (e.roles.empty()) e.roles = default_roles(e.category, e.language);
    if (e.relative_roles.empty()) e.relative_roles = default_relative_roles(e.category, e.language);
    if (e.roles.size() != e.ptype.simples.size() ||
        e.relative_roles.size() != e.ptype.simples.size()) {
      throw ParseError("entry '" + e.surface + "': role count does not match its type");
    }
    if (e.model_key.empty()) e.model_key = e.surface;
    if (e.category == Category::PrepositionPhrase && e.object.empty()) {
      throw ParseError("preposition phrase '" + e.surface + "' needs an object");
    }
    index_.emplace(canonical_key(e.surface), i);
  }
}

Lexicon Lexicon::parse(std::string_view text) {
  std::vector<LexiconEntry> entries;
  std::map<std::string, std::string> record;
  int line_no = 0;
  int record_line = 0;
  auto flush = [&]() {
    if (record.empty()) return;
    auto need = [&](const char* key) {
      auto it = record.find(key);
      if (it == record.end()) {
        throw ParseError("lexicon record at line " + std::to_string(record_line) + " lacks '" +
                         key + "'");
      }
      return it->second;
    };
    LexiconEntry e;
    e.surface = need("surface");
    e.language = parse_language(need("language"));
    e.category = parse_category(need("category"));
    if (e.category != Category::Determiner) e.ptype = parse_type(need("type"));
    if (record.count("roles")) e.roles = parse_roles(record["roles"]);
    if (record.count("relative-roles")) e.relative_roles = parse_roles(record["relative-roles"]);
    if (record.count("model")) e.model_key = record["model"];
    if (record.count("object")) e.object = record["object"];
    for (const auto& [k, v] : record) {
      static const std::set<std::string> known = {"surface", "language", "category", "type",
                                                  "roles",   "relative-roles", "model", "object"};
      if (!known.count(k)) throw ParseError("unknown lexicon field '" + k + "'");
    }
    entries.push_back(std::move(e));
    record.clear();
  };
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) {
      flush();
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ParseError("lexicon line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    if (record.empty()) record_line = line_no;
    record[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  flush();
  return Lexicon(std::move(entries));
}

Lexicon Lexicon::load(const std::filesystem::path& path) { return parse(read_file(path)); }

std::vector<const LexiconEntry*> Lexicon::find(const std::string& key, Language lang) const {
  std::vector<const LexiconEntry*> out;
  auto [b, e] = index_.equal_range(key);
  for (auto it = b; it != e; ++it) {
    const auto& entry = entries_[it->second];
    if (entry.language == lang) out.push_back(&entry);
  }
  return out;
}

const LexiconEntry& Lexicon::lookup(std::string_view token, Language lang) const {
  std::string surface(token);
  std::optional<Category> hint;
  if (auto bar = surface.find('|'); bar != std::string::npos) {
    hint = parse_category(surface.substr(bar + 1));
    surface = surface.substr(0, bar);
  }
  auto filtered = [&](const std::string& key) {
    auto found = find(key, lang);
    if (hint) {
      std::erase_if(found, [&](const LexiconEntry* e) { return e->category != *hint; });
    }
    return found;
  };
  std::string key = canonical_key(surface);
  auto found = filtered(key);
  if (found.empty()) {
    auto space = key.find(' ');
    if (space != std::string::npos) {
      auto first = find(key.substr(0, space), lang);
      bool is_determiner = std::any_of(first.begin(), first.end(), [](const LexiconEntry* e) {
        return e->category == Category::Determiner;
      });
      if (is_determiner) found = filtered(key.substr(space + 1));
    }
  }
  if (found.empty()) throw LookupError(std::string(token));
  if (found.size() > 1) {
    std::vector<std::string> names;
    for (const auto* e : found) names.push_back(e->surface + " (" + to_string(e->category) + ")");
    throw AmbiguityError(std::string(token), names);
  }
  return *found.front();
}

std::vector<std::string> Lexicon::surfaces(Language lang) const {
  std::vector<std::string> out;
  for (const auto& e : entries_) {
    if (e.language == lang) out.push_back(e.surface);
  }
  return out;
}

std::vector<std::string> Lexicon::determiners(Language lang) const {
  std::vector<std::string> out;
  for (const auto& e : entries_) {
    if (e.language == lang && e.category == Category::Determiner) out.push_back(e.surface);
  }
  return out;
}

std::vector<std::string> tokenize_sentence(std::string_view sentence, const Lexicon& lexicon,
                                           Language lang) {
  std::vector<std::string> units;
  for (const auto& s : lexicon.surfaces(lang)) {
    if (canonical_key(s).find(' ') != std::string::npos) units.push_back(s);
  }
  auto merged = merge_multiwords(raw_tokens(sentence), units);
  std::set<std::string> dets;
  for (const auto& d : lexicon.determiners(lang)) dets.insert(canonical_key(d));
  std::vector<std::string> out;
  for (std::size_t i = 0; i < merged.size(); ++i) {
    if (dets.count(canonical_key(merged[i])) && i + 1 < merged.size()) {
      out.push_back(merged[i] + "-" + merged[i + 1]);
      ++i;
    } else {
      out.push_back(merged[i]);
    }
  }
  return out;
}

std::vector<TypedToken> assign_types(const std::vector<std::string>& tokens, Language lang,
                                     const Lexicon& lexicon) {
  std::vector<TypedToken> out;
  for (const auto& t : tokens) {
    const auto& entry = lexicon.lookup(t, lang);
    if (entry.category == Category::Determiner) continue;
    out.push_back({t, entry});
  }
  return out;
}

std::optional<std::size_t> ReductionPlan::partner(std::size_t wire) const {
  for (const auto& p : pairings) {
    if (p.left == wire) return p.right;
    if (p.right == wire) return p.left;
  }
  return std::nullopt;
}

std::size_t ReductionPlan::wire_index(std::size_t token, std::size_t slot) const {
  for (std::size_t i = 0; i < wires.size(); ++i) {
    if (wires[i].token == token && wires[i].slot == slot) return i;
  }
  throw Error("no wire " + std::to_string(slot) + " on token " + std::to_string(token));
}

namespace {

class ReductionSearch {
 public:
  ReductionSearch(const std::vector<SimpleType>& flat, const PregroupType& target)
      : flat_(flat), target_(target) {}

  bool run() { return step(0); }

  std::vector<Pairing> pairings;
  std::vector<std::size_t> stack;
  std::optional<PregroupType> best_residual;

 private:
  PregroupType stack_type() const {
    PregroupType t;
    for (auto i : stack) t.simples.push_back(flat_[i]);
    return t;
  }

  bool step(std::size_t pos) {
    if (pos == flat_.size()) {
      auto residual = stack_type();
      if (residual == target_) return true;
      if (!best_residual || residual.simples.size() < best_residual->simples.size()) {
        best_residual = residual;
      }
      return false;
    }
    auto key = std::make_pair(pos, stack_type().simples);
    if (failed_.count(key)) return false;

    if (!stack.empty() && cancels(flat_[stack.back()], flat_[pos])) {
      std::size_t top = stack.back();
      stack.pop_back();
      pairings.push_back({top, pos});
      if (step(pos + 1)) return true;
      pairings.pop_back();
      stack.push_back(top);
    }
    stack.push_back(pos);
    if (step(pos + 1)) return true;
    stack.pop_back();
    failed_.insert(std::move(key));
    return false;
  }

  const std::vector<SimpleType>& flat_;
  const PregroupType& target_;
  std::set<std::pair<std::size_t, std::vector<SimpleType>>> failed_;
};

ReductionPlan skeleton(const std::vector<PregroupType>& types) {
  ReductionPlan plan;
  for (std::size_t t = 0; t < types.size(); ++t) {
    for (std::size_t s = 0; s < types[t].simples.size(); ++s) {
      plan.flat.push_back(types[t].simples[s]);
      plan.wires.push_back({t, s});
    }
  }
  return plan;
}

}  // namespace

std::optional<ReductionPlan> find_reduction(const std::vector<PregroupType>& types,
                                            const PregroupType& target) {
  ReductionPlan plan = skeleton(types);
  ReductionSearch search(plan.flat, target);
  if (!search.run()) return std::nullopt;
  plan.pairings = search.pairings;
  std::sort(plan.pairings.begin(), plan.pairings.end(),
            [](const Pairing& a, const Pairing& b) { return a.left < b.left; });
  plan.residual_wires = search.stack;
  plan.result_type = target;
  return plan;
}

ReductionPlan reduce(const std::vector<PregroupType>& types) {
  if (types.empty()) throw Error("cannot reduce an empty type list");
  const PregroupType sentence{{SimpleType{BasicType::s, 0}}};
  ReductionPlan plan = skeleton(types);
  ReductionSearch search(plan.flat, sentence);
  if (!search.run()) throw NotASentence(search.best_residual.value_or(PregroupType{}));
  plan.pairings = search.pairings;
  std::sort(plan.pairings.begin(), plan.pairings.end(),
            [](const Pairing& a, const Pairing& b) { return a.left < b.left; });
  plan.residual_wires = search.stack;
  plan.result_type = sentence;
  return plan;
}

ReductionPlan reduce(const std::vector<TypedToken>& tokens) {
  std::vector<PregroupType> types;
  for (const auto& t : tokens) types.push_back(t.entry.ptype);
  ReductionPlan plan = reduce(types);
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const auto& e = tokens[i].entry;
    if (e.category != Category::RelativePronounSubject &&
        e.category != Category::RelativePronounObject) {
      continue;
    }
    auto slot_of = [&](Role r) {
      auto it = std::find(e.roles.begin(), e.roles.end(), r);
      return plan.wire_index(i, static_cast<std::size_t>(it - e.roles.begin()));
    };
    plan.copy_nodes.push_back({i, slot_of(Role::Head), slot_of(Role::Output), slot_of(Role::Argument)});
    plan.unit_nodes.push_back({i, slot_of(Role::Sentence)});
  }
  return plan;
}

bool is_planar(const std::vector<Pairing>& pairings) {
  for (const auto& a : pairings) {
    for (const auto& b : pairings) {
      if (a.left < b.left && b.left < a.right && a.right < b.right) return false;
    }
  }
  return true;
}

PregroupType apply_pairings(const std::vector<SimpleType>& flat,
                            const std::vector<Pairing>& pairings) {
  std::vector<int> mate(flat.size(), -1);
  for (const auto& p : pairings) {
    if (p.left >= p.right || p.right >= flat.size()) throw Error("pairing out of range");
    if (mate[p.left] >= 0 || mate[p.right] >= 0) throw Error("wire paired twice");
    if (!cancels(flat[p.left], flat[p.right])) {
      throw Error(to_string(flat[p.left]) + " does not cancel " + to_string(flat[p.right]));
    }
    mate[p.left] = static_cast<int>(p.right);
    mate[p.right] = static_cast<int>(p.left);
  }
  // Each cancellation must enclose only wires that are themselves cancelled inside it.
  for (const auto& p : pairings) {
    for (std::size_t k = p.left + 1; k < p.right; ++k) {
      if (mate[k] < 0 || static_cast<std::size_t>(mate[k]) < p.left ||
          static_cast<std::size_t>(mate[k]) > p.right) {
        throw Error("pairing encloses an uncancelled or crossing wire");
      }
    }
  }
  PregroupType out;
  for (std::size_t i = 0; i < flat.size(); ++i) {
    if (mate[i] < 0) out.simples.push_back(flat[i]);
  }
  return out;
}

}  // namespace aistriu
