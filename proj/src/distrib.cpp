#include "aistriu/distrib.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace aistriu {
namespace {

std::string rational_text(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

NounVector parse_vector(const std::string& text) {
  auto words = split_ws(text);
  if (words.size() != kBasisSize) {
    throw ParseError("expected " + std::to_string(kBasisSize) + " coordinates, got '" + text + "'");
  }
  NounVector v;
  for (std::size_t i = 0; i < kBasisSize; ++i) {
    v[i] = parse_rational(words[i]);
    if (v[i] < Rational(0)) throw ParseError("negative coordinate in '" + text + "'");
  }
  return v;
}

std::string vector_text(const NounVector& v) {
  std::vector<std::string> parts;
  for (const auto& x : v) parts.push_back(rational_text(x));
  return join(parts, " ");
}

template <typename Map>
const typename Map::mapped_type& find_named(const Map& map, std::string_view name,
                                            const char* kind) {
  auto it = map.find(canonical_key(name));
  if (it == map.end()) throw EvaluationError("no " + std::string(kind) + " vector for '" + std::string(name) + "'");
  return it->second;
}

NounVector zero_vector() {
  NounVector v;
  v.fill(Rational(0));
  return v;
}

}  // namespace

std::string to_string(Orientation o) {
  return o == Orientation::SubjectObject ? "subject-object" : "object-subject";
}

Orientation parse_orientation(std::string_view text) {
  if (text == "subject-object") return Orientation::SubjectObject;
  if (text == "object-subject") return Orientation::ObjectSubject;
  throw ParseError("unknown orientation '" + std::string(text) + "'");
}

Rational VerbMatrix::weight(std::size_t subject, std::size_t object) const {
  return orientation == Orientation::SubjectObject ? entries[subject][object]
                                                   : entries[object][subject];
}

void SentenceMeaning::add(std::size_t i, std::size_t j, const Rational& v) {
  if (v == Rational(0)) return;
  auto key = std::make_pair(i, j);
  auto& slot = coeffs[key];
  slot += v;
  if (slot == Rational(0)) coeffs.erase(key);
}

SentenceMeaning SentenceMeaning::scaled(const Rational& k) const {
  SentenceMeaning out;
  for (const auto& [ij, v] : coeffs) out.add(ij.first, ij.second, v * k);
  return out;
}

std::string to_string(const SentenceMeaning& m) {
  std::vector<std::string> parts;
  for (const auto& [ij, v] : m.coeffs) {
    parts.push_back("(" + std::to_string(ij.first + 1) + "," + std::to_string(ij.second + 1) +
                    "):" + rational_text(v));
  }
  return "{" + join(parts, ", ") + "}";
}

Rational inner(const SentenceMeaning& a, const SentenceMeaning& b) {
  Rational total(0);
  for (const auto& [ij, v] : a.coeffs) {
    auto it = b.coeffs.find(ij);
    if (it != b.coeffs.end()) total += v * it->second;
  }
  return total;
}

Rational length(const SentenceMeaning& m) { return inner(m, m); }

double similarity(const SentenceMeaning& a, const SentenceMeaning& b) {
  if (a.is_zero() || b.is_zero()) return 0.0;
  const double den = std::sqrt(to_double(length(a)) * to_double(length(b)));
  return to_double(inner(a, b)) / den;
}

NounVector hadamard(const NounVector& a, const NounVector& b) {
  NounVector out;
  for (std::size_t k = 0; k < kBasisSize; ++k) out[k] = a[k] * b[k];
  return out;
}

const NounVector& DistribModel::noun(std::string_view name) const {
  return find_named(nouns, name, "noun");
}
const VerbMatrix& DistribModel::verb(std::string_view name) const {
  return find_named(verbs, name, "verb");
}
const NounVector& DistribModel::adjective(std::string_view name) const {
  return find_named(adjectives, name, "adjective");
}
const NounVector& DistribModel::pp_head(std::string_view name) const {
  return find_named(pp_heads, name, "preposition phrase");
}

DistribModel DistribModel::parse(std::string_view text) {
  DistribModel model;
  bool have_language = false;
  std::istringstream in{std::string(text)};
  int line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto where = [&] { return "model line " + std::to_string(line_no) + ": "; };
    auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError(where() + "expected '='");
    std::string lhs = trim(line.substr(0, eq));
    std::string rhs = trim(line.substr(eq + 1));
    auto space = lhs.find(' ');
    std::string kind = lhs.substr(0, space);
    std::string name = space == std::string::npos ? "" : trim(lhs.substr(space + 1));
    try {
      if (kind == "language") {
        model.language = parse_language(rhs);
        have_language = true;
      } else if (kind == "basis") {
        model.basis = split(rhs, ',');
        if (model.basis.size() != kBasisSize) throw ParseError("basis must have 5 labels");
      } else if (kind == "noun" || kind == "adjective" || kind == "pp") {
        if (name.empty()) throw ParseError("missing name");
        auto& map = kind == "noun" ? model.nouns : kind == "adjective" ? model.adjectives
                                                                       : model.pp_heads;
        map[canonical_key(name)] = parse_vector(rhs);
        model.names[canonical_key(name)] = name;
      } else if (kind == "verb") {
        auto last = name.rfind(' ');
        if (last == std::string::npos) throw ParseError("verb needs a name and an orientation");
        VerbMatrix v;
        v.orientation = parse_orientation(name.substr(last + 1));
        name = trim(name.substr(0, last));
        auto rows = split(rhs, '/');
        if (rows.size() != kBasisSize) throw ParseError("verb matrix needs 5 rows");
        for (std::size_t i = 0; i < kBasisSize; ++i) v.entries[i] = parse_vector(rows[i]);
        model.verbs[canonical_key(name)] = v;
        model.names[canonical_key(name)] = name;
      } else {
        throw ParseError("unknown record '" + kind + "'");
      }
    } catch (const ParseError& e) {
      throw ParseError(where() + e.what());
    }
  }
  if (!have_language) throw ParseError("model has no language");
  if (model.basis.size() != kBasisSize) throw ParseError("model has no 5-label basis");
  return model;
}

DistribModel DistribModel::load(const std::filesystem::path& path) {
  try {
    return parse(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

std::string DistribModel::serialize() const {
  std::ostringstream out;
  auto display = [&](const std::string& key) {
    auto it = names.find(key);
    return it == names.end() ? key : it->second;
  };
  out << "language = " << language_code(language) << "\n";
  out << "basis = " << join(basis, ", ") << "\n";
  for (const auto& [k, v] : nouns) out << "noun " << display(k) << " = " << vector_text(v) << "\n";
  for (const auto& [k, v] : adjectives) {
    out << "adjective " << display(k) << " = " << vector_text(v) << "\n";
  }
  for (const auto& [k, v] : pp_heads) out << "pp " << display(k) << " = " << vector_text(v) << "\n";
  for (const auto& [k, v] : verbs) {
    std::vector<std::string> rows;
    for (const auto& row : v.entries) rows.push_back(vector_text(row));
    out << "verb " << display(k) << " " << to_string(v.orientation) << " = " << join(rows, " / ")
        << "\n";
  }
  return out.str();
}

namespace {

class Evaluator {
 public:
  Evaluator(const ReductionPlan& plan, const std::vector<TypedToken>& tokens,
            const DistribModel& model, const EvalOptions& options)
      : plan_(plan), tokens_(tokens), model_(model), options_(options) {}

  SentenceMeaning sentence() {
    if (plan_.residual_wires.size() != 1) throw EvaluationError("plan is not a sentence");
    std::size_t wire = plan_.residual_wires.front();
    while (true) {
      const auto& ref = plan_.wires[wire];
      const auto& entry = tokens_[ref.token].entry;
      if (entry.category == Category::Adverb) {
        wire = partner_of(slot_wire(ref.token, entry.roles, Role::Input));
        continue;
      }
      if (entry.category != Category::TransitiveVerb && entry.category != Category::Copula) {
        throw EvaluationError("sentence wire does not come from a verb ('" +
                              tokens_[ref.token].surface + "')");
      }
      const auto& verb = model_.verb(entry.model_key);
      NounVector subj = noun_at(partner_of(slot_wire(ref.token, entry.roles, Role::Subject)));
      NounVector obj = noun_at(partner_of(slot_wire(ref.token, entry.roles, Role::Object)));
      SentenceMeaning m;
      for (std::size_t i = 0; i < kBasisSize; ++i) {
        for (std::size_t j = 0; j < kBasisSize; ++j) m.add(i, j, subj[i] * obj[j] * verb.weight(i, j));
      }
      return m;
    }
  }

 private:
  std::size_t slot_wire(std::size_t token, const std::vector<Role>& roles, Role role) const {
    auto it = std::find(roles.begin(), roles.end(), role);
    if (it == roles.end()) {
      throw EvaluationError("'" + tokens_[token].surface + "' has no " + to_string(role) + " wire");
    }
    return plan_.wire_index(token, static_cast<std::size_t>(it - roles.begin()));
  }

  std::size_t partner_of(std::size_t wire) const {
    auto p = plan_.partner(wire);
    if (!p) throw EvaluationError("wire of '" + tokens_[plan_.wires[wire].token].surface + "' is unconnected");
    return *p;
  }

  // Value of the noun flowing out of `wire`.
  NounVector noun_at(std::size_t wire) {
    const auto& ref = plan_.wires[wire];
    const auto& tok = tokens_[ref.token];
    const auto& e = tok.entry;
    if (e.roles[ref.slot] != Role::Output) {
      throw EvaluationError("'" + tok.surface + "' does not supply a noun here");
    }
    switch (e.category) {
      case Category::Noun:
        return model_.noun(e.model_key);
      case Category::Adjective:
        return hadamard(noun_at(partner_of(slot_wire(ref.token, e.roles, Role::Input))),
                        model_.adjective(e.model_key));
      case Category::PrepositionPhrase: {
        const auto& mod = options_.preposition == PrepositionRule::ObjectNoun
                              ? model_.noun(e.object)
                              : model_.pp_head(e.model_key);
        return hadamard(noun_at(partner_of(slot_wire(ref.token, e.roles, Role::Input))), mod);
      }
      case Category::Preposition:
        return noun_at(partner_of(slot_wire(ref.token, e.roles, Role::Input)));
      case Category::RelativePronounSubject:
      case Category::RelativePronounObject:
        return relative_clause(ref.token);
      default:
        throw EvaluationError("'" + tok.surface + "' cannot supply a noun");
    }
  }

  NounVector relative_clause(std::size_t pronoun) {
    const auto& e = tokens_[pronoun].entry;
    NounVector head = noun_at(partner_of(slot_wire(pronoun, e.roles, Role::Head)));
    std::size_t verb_s = partner_of(slot_wire(pronoun, e.roles, Role::Sentence));
    std::size_t verb_arg = partner_of(slot_wire(pronoun, e.roles, Role::Argument));
    std::size_t verb_token = plan_.wires[verb_s].token;
    if (plan_.wires[verb_arg].token != verb_token) {
      throw EvaluationError("relative clause argument is not attached to its verb");
    }
    const auto& ve = tokens_[verb_token].entry;
    if (ve.category != Category::TransitiveVerb && ve.category != Category::Copula) {
      throw EvaluationError("relative clause without a transitive verb");
    }
    const auto& roles = ve.relative_roles;
    Role head_role = roles[plan_.wires[verb_arg].slot];
    if (head_role != Role::Subject && head_role != Role::Object) {
      throw EvaluationError("relative pronoun is not bound to a verb argument");
    }
    Role other = head_role == Role::Subject ? Role::Object : Role::Subject;
    NounVector o = noun_at(partner_of(slot_wire(verb_token, roles, other)));
    const auto& verb = model_.verb(ve.model_key);
    NounVector out;
    for (std::size_t k = 0; k < kBasisSize; ++k) {
      Rational acc(0);
      for (std::size_t j = 0; j < kBasisSize; ++j) {
        acc += (head_role == Role::Subject ? verb.weight(k, j) : verb.weight(j, k)) * o[j];
      }
      out[k] = head[k] * acc;
    }
    return out;
  }

  const ReductionPlan& plan_;
  const std::vector<TypedToken>& tokens_;
  const DistribModel& model_;
  const EvalOptions& options_;
};

}  // namespace

SentenceMeaning evaluate(const ReductionPlan& plan, const std::vector<TypedToken>& tokens,
                         const DistribModel& model, const EvalOptions& options) {
  return Evaluator(plan, tokens, model, options).sentence();
}

ParsedSentence parse_sentence(std::string_view sentence, Language lang, const Lexicon& lexicon) {
  ParsedSentence p;
  p.tokens = assign_types(tokenize_sentence(sentence, lexicon, lang), lang, lexicon);
  p.plan = reduce(p.tokens);
  return p;
}

SentenceMeaning meaning_of(std::string_view sentence, const Lexicon& lexicon,
                           const DistribModel& model, const EvalOptions& options) {
  auto parsed = parse_sentence(sentence, model.language, lexicon);
  return evaluate(parsed.plan, parsed.tokens, model, options);
}

namespace {

const NounVector* known_noun(const std::string& token, const std::map<std::string, NounVector>& nouns,
                             const CorpusTables& tables) {
  std::string key = canonical_key(token);
  if (auto it = nouns.find(key); it != nouns.end()) return &it->second;
  auto space = key.find(' ');
  if (space != std::string::npos) {
    std::string first = key.substr(0, space);
    if (tables.particles.count(first) || tables.determiners.count(first)) {
      if (auto it = nouns.find(key.substr(space + 1)); it != nouns.end()) return &it->second;
    }
  }
  return nullptr;
}

}  // namespace

VerbBuild build_verb_matrix(const CorpusDoc& doc, const std::vector<std::string>& forms,
                            Category category, const std::map<std::string, NounVector>& nouns,
                            const CorpusTables& tables) {
  std::set<std::string> form_keys;
  for (const auto& f : forms) form_keys.insert(canonical_key(f));
  VerbBuild out;
  const bool irish = doc.language == Language::Irish;
  out.matrix.orientation = irish && category == Category::TransitiveVerb ? Orientation::ObjectSubject
                                                                         : Orientation::SubjectObject;
  for (const auto& sentence : doc.sentences) {
    const int n = static_cast<int>(sentence.size());
    for (int p = 0; p < n; ++p) {
      if (!form_keys.count(canonical_key(sentence[p]))) continue;
      const NounVector* subj = nullptr;
      const NounVector* obj = nullptr;
      if (!irish) {
        if (category == Category::Copula) {
          if (p + 1 >= n) continue;
          auto next = canonical_key(sentence[p + 1]);
          if (next != "a" && next != "an") continue;
        }
        for (int q = p - 1; q >= 0 && !subj; --q) subj = known_noun(sentence[q], nouns, tables);
        for (int q = p + 1; q < n && !obj; ++q) obj = known_noun(sentence[q], nouns, tables);
      } else {
        std::vector<const NounVector*> after;
        for (int q = p + 1; q < n && after.size() < 2; ++q) {
          if (auto* v = known_noun(sentence[q], nouns, tables)) after.push_back(v);
        }
        if (after.size() < 2) continue;
        if (category == Category::Copula) {
          obj = after[0];
          subj = after[1];
        } else {
          subj = after[0];
          obj = after[1];
        }
      }
      if (!subj || !obj) continue;
      ++out.occurrences;
      for (std::size_t i = 0; i < kBasisSize; ++i) {
        for (std::size_t j = 0; j < kBasisSize; ++j) {
          if (out.matrix.orientation == Orientation::SubjectObject) {
            out.matrix.entries[i][j] += (*subj)[i] * (*obj)[j];
          } else {
            out.matrix.entries[i][j] += (*obj)[i] * (*subj)[j];
          }
        }
      }
    }
  }
  return out;
}

NounVector build_adjective_vector(const CorpusDoc& doc, std::string_view adjective,
                                  const std::map<std::string, NounVector>& nouns,
                                  const std::vector<std::string>& adjectives,
                                  const CorpusTables& tables) {
  std::set<std::string> adj_keys;
  for (const auto& a : adjectives) adj_keys.insert(canonical_key(a));
  adj_keys.insert(canonical_key(adjective));
  const auto key = canonical_key(adjective);
  NounVector out = zero_vector();
  for (const auto& sentence : doc.sentences) {
    for (std::size_t p = 0; p < sentence.size(); ++p) {
      if (canonical_key(sentence[p]) != key) continue;
      int r = modified_noun(sentence, p, doc.language, adj_keys, tables);
      if (r < 0) continue;
      if (const auto* v = known_noun(sentence[r], nouns, tables)) {
        for (std::size_t k = 0; k < kBasisSize; ++k) out[k] += (*v)[k];
      }
    }
  }
  return out;
}

DistribModel build_model(const CorpusDoc& doc, const Lexicon& lexicon,
                         const std::vector<std::string>& basis, int window,
                         const CorpusTables& tables, std::vector<std::string>* warnings) {
  if (basis.size() != kBasisSize) throw ConfigError("basis must have 5 labels");
  DistribModel model;
  model.language = doc.language;
  model.basis = basis;

  std::vector<std::string> adjectives;
  for (const auto& e : lexicon.entries()) {
    if (e.language == doc.language && e.category == Category::Adjective) {
      adjectives.push_back(e.model_key);
    }
  }
  auto counts = window_counts(doc, basis, window, adjectives, tables);
  for (const auto& e : lexicon.entries()) {
    if (e.language != doc.language || e.category != Category::Noun) continue;
    auto key = canonical_key(e.model_key);
    auto row = counts.at(key);
    NounVector v;
    for (std::size_t k = 0; k < kBasisSize; ++k) v[k] = Rational(row[k]);
    model.nouns[key] = v;
    model.names[key] = e.model_key;
  }
  std::map<std::string, std::vector<std::string>> verb_forms;
  std::map<std::string, Category> verb_category;
  for (const auto& e : lexicon.entries()) {
    if (e.language != doc.language) continue;
    auto key = canonical_key(e.model_key);
    if (e.category == Category::Adjective) {
      model.adjectives[key] = build_adjective_vector(doc, e.model_key, model.nouns, adjectives, tables);
      model.names[key] = e.model_key;
    } else if (e.category == Category::PrepositionPhrase) {
      NounVector v = zero_vector();
      auto surface_key = canonical_key(e.surface);
      for (const auto& sentence : doc.sentences) {
        for (std::size_t p = 1; p < sentence.size(); ++p) {
          if (canonical_key(sentence[p]) != surface_key) continue;
          if (const auto* nv = known_noun(sentence[p - 1], model.nouns, tables)) {
            for (std::size_t k = 0; k < kBasisSize; ++k) v[k] += (*nv)[k];
          }
        }
      }
      model.pp_heads[key] = v;
      model.names[key] = e.model_key;
    } else if (e.category == Category::TransitiveVerb || e.category == Category::Copula) {
      verb_forms[key].push_back(e.surface);
      verb_category[key] = e.category;
      model.names[key] = e.model_key;
    }
  }
  for (const auto& [key, forms] : verb_forms) {
    auto built = build_verb_matrix(doc, forms, verb_category[key], model.nouns, tables);
    if (built.occurrences == 0 && warnings) {
      warnings->push_back("verb '" + model.names[key] + "' has no transitive occurrence");
    }
    model.verbs[key] = built.matrix;
  }
  return model;
}

}  // namespace aistriu
