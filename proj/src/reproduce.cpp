#include "aistriu/reproduce.hpp"

#include <fmt/format.h>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <functional>

namespace aistriu {
namespace {

using Json = nlohmann::json;

constexpr double kExactTol = 1e-9;

const std::string kPalpatine = "Palpatine is a mastermind who turns Anakin to the dark side of the Force";
const std::string kIrishPalpatine =
    "Is ceannmáistir a casann Anakin go taobh dorcha na Fórsa é Palpatine";
const std::string kEmperor = "The Emperor is a mastermind who turns Anakin to the dark side of the Force";

struct SentencePair {
  std::string first;
  Language first_lang;
  std::string second;
  Language second_lang;
  double printed;
};

const std::vector<SentencePair>& similarity_rows() {
  static const std::vector<SentencePair> rows = {
      {"Yoda is a powerful Jedi", Language::English, "Is Jedi cumhachtach é Yoda", Language::Irish, 0.94},
      {"Palpatine is an evil Emperor", Language::English, "Is Impire olc é Palpatine", Language::Irish, 0.99},
      {"A brave Padmé turns to Anakin", Language::English, "Casann Padmé cróga chuig Anakin", Language::Irish, 1.0},
      {"Obi Wan turns to the powerful Yoda", Language::English, "Casann Obi-Wan go Yoda cumhachtach",
       Language::Irish, 0.87},
      {"Padmé is a brave Jedi", Language::English, "Is Jedi cróga é Padmé", Language::Irish, 0.94},
      {"Anakin is a Sith Lord", Language::English, "Is Tiarna Sith é Anakin", Language::Irish, 0.32},
      {"The Jedi turn to the brave Mace Windu", Language::English, "Casann na Jedi go Mace Windu cróga",
       Language::Irish, 0.99},
  };
  return rows;
}

struct BleuRow {
  std::string reference;
  std::string candidate;
  Language lang;
  double printed_similarity;
  double printed_bleu;
};

const std::vector<BleuRow>& bleu_rows() {
  static const std::vector<BleuRow> rows = {
      {"Yoda is a powerful Jedi", "Yoda turns to the powerful Jedi", Language::English, 0.95, 0.32},
      {"Anakin is a Sith Lord", "Obi-Wan is a Sith Lord", Language::English, 0.0, 0.7},
      {"Is Impire olc é Palpatine", "Is Impire olc é Mace Windu", Language::Irish, 0.98, 0.7},
      {"Casann na Jedi go Mace Windu cumhachtach", "Casann Ginearál Grievous go Mace Windu cróga",
       Language::Irish, 0.76, 0.27},
  };
  return rows;
}

constexpr double kBleuTolerance = 0.05;

// Expected concepts: property name -> generators, plus the tree node set.
struct ExpectedConcept {
  std::map<std::string, std::vector<Point>> properties;
  std::vector<std::string> tree;
};

Point rgb(double r, double g, double b) { return {r / 255.0, g / 255.0, b / 255.0}; }

std::vector<ExpectedConcept> expected_concepts(Language lang, const PropertySchema& schema) {
  const auto& taste = schema.properties()[schema.index("taste")].named_points;
  const Point red = rgb(255, 0, 0), green = rgb(0, 255, 0);
  const Point orange = rgb(255, 165, 0), brown = rgb(153, 76, 0);
  const std::vector<std::string> d1 = {"e0", "e1", "e3", "e5", "e6", "e7", "e8",
                                       "e9", "e10", "e12", "e13", "e15", "e17"};
  const std::vector<std::string> d2 = {"e0", "e1", "e2", "e3", "e4", "e6", "e7", "e9", "e10", "e13", "e15"};
  const std::vector<std::string> d3 = {"e0", "e1", "e2", "e3", "e4", "e7", "e10", "e15"};
  const std::vector<std::string> d4 = {"e0", "e1", "e3", "e6", "e7", "e9", "e11", "e13", "e16", "e18"};
  const std::vector<std::string> d5 = {"e0", "e1", "e3", "e6", "e7", "e9", "e10", "e13", "e14"};
  ExpectedConcept mars{{{"dimension", {{0.25}}},
                        {"colour", {red, brown, orange}},
                        {"temperature", {{0.4}}},
                        {"texture", {{0.9}}}},
                       d3};
  ExpectedConcept apple{{{"colour", {red, green}},
                         {"taste", {taste.at("Bitter"), taste.at("Sweet")}},
                         {"texture", {{0.4}}}},
                        d4};
  if (lang == Language::English) {
    return {
        {{{"dimension", {{0.5}}}, {"intensity", {{0.7}}}, {"temperature", {{0.75}}},
          {"density", {{0.9}}}, {"texture", {{0.9}}}},
         d1},
        {{{"dimension", {{0.7}}}, {"colour", {orange, brown, red}}, {"intensity", {{0.8}}},
          {"temperature", {{0.0}}}, {"density", {{0.1}}}},
         d2},
        mars,
        apple,
        {{{"dimension", {{1.0}}}, {"intensity", {{1.0}}}, {"temperature", {{1.0}}}, {"density", {{1.0}}}}, d5},
    };
  }
  return {
      {{{"dimension", {{0.5}}}, {"intensity", {{0.6}}}, {"temperature", {{0.85}}},
        {"density", {{0.9}}}, {"texture", {{0.9}}}},
       d1},
      {{{"dimension", {{0.8}}}, {"colour", {orange, brown, red}}, {"intensity", {{0.7}}},
        {"temperature", {{0.1}}}, {"density", {{0.1}}}},
       d2},
      mars,
      apple,
      {{{"dimension", {{0.9}}}, {"intensity", {{1.0}}}, {"temperature", {{0.85}}}, {"density", {{1.0}}}}, d5},
  };
}

// Properties where the concept differs from the expectation, plus "tree".
std::vector<std::string> concept_mismatches(const Concept& c, const ExpectedConcept& e,
                                            const PropertySchema& schema) {
  std::vector<std::string> out;
  const auto& props = schema.properties();
  for (std::size_t i = 0; i < props.size(); ++i) {
    auto it = e.properties.find(props[i].name);
    ConvexSet want = it == e.properties.end() ? ConvexSet::full() : ConvexSet::hull(it->second);
    if (!c.properties[i].same_set(want, props[i])) out.push_back(props[i].name);
  }
  if (c.tree_set != std::set<std::string>(e.tree.begin(), e.tree.end())) out.push_back("tree");
  return out;
}

std::string fmt_num(double v) { return fmt::format("{:.6g}", v); }

std::string rat(const Rational& r) {
  return r.denominator() == 1 ? std::to_string(r.numerator())
                              : fmt::format("{}/{}", r.numerator(), r.denominator());
}

// Runs `body`; an exception marks the check failed with its message.
Check guarded(const std::string& name, const std::function<Check()>& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    return {name, false, std::string("error: ") + e.what()};
  }
}

Check exact_rational(const std::string& name, const Rational& got, long long want) {
  return {name, got == Rational(want), fmt::format("computed {}, printed {}", rat(got), want)};
}

Check printed_score(const std::string& name, double got, double printed, int decimals) {
  return {name, matches_printed(got, printed, decimals),
          fmt::format("computed {}, printed {:.{}f}", fmt_num(got), printed, decimals)};
}

const SentenceMeaning meaning(const FixtureData& d, const std::string& s, Language lang) {
  return meaning_of(s, d.lexicon(lang), d.model(lang));
}

Criterion contraction(const FixtureData& d) {
  Criterion c{1, "Contraction regression", {}};
  c.checks.push_back(guarded("Palpatine sentence meaning", [&] {
    auto m = meaning(d, kPalpatine, Language::English);
    return Check{"Palpatine sentence meaning", to_string(m) == "{(2,1):320, (2,2):32}",
                 "computed " + to_string(m) + ", printed {(2,1):320, (2,2):32}"};
  }));
  const std::vector<std::pair<std::string, double>> variants = {
      {"Mace Windu", 0.53}, {"The Emperor", 0.99}, {"Padmé", 0.0}};
  for (const auto& [subject, printed] : variants) {
    auto name = subject + " variant similarity";
    c.checks.push_back(guarded(name, [&] {
      auto base = meaning(d, kPalpatine, Language::English);
      auto v = meaning(d, subject + kPalpatine.substr(std::string("Palpatine").size()), Language::English);
      return printed_score(name, similarity(base, v), printed, 2);
    }));
  }
  return c;
}

Criterion crosslingual(const FixtureData& d) {
  Criterion c{2, "Cross-lingual pairs", {}};
  struct Case {
    std::string label, en, ga;
    long long inner, len_en, len_ga;
    double score;
  };
  const std::vector<Case> cases = {
      {"evil Emperor", "Palpatine is an evil Emperor", "Is Impire olc é Palpatine", 10174, 10182, 10180, 0.99},
      {"Yoda/cróga", "Yoda is a powerful Jedi", "Is Jedi cróga é Palpatine", 8, 348, 4, 0.21},
  };
  for (const auto& k : cases) {
    std::vector<Check> checks;
    try {
      auto e = meaning(d, k.en, Language::English);
      auto g = meaning(d, k.ga, Language::Irish);
      checks.push_back(exact_rational(k.label + " inner product", inner(e, g), k.inner));
      checks.push_back(exact_rational(k.label + " English length", length(e), k.len_en));
      checks.push_back(exact_rational(k.label + " Irish length", length(g), k.len_ga));
      checks.push_back(printed_score(k.label + " score", similarity(e, g), k.score, 2));
    } catch (const std::exception& ex) {
      checks = {{k.label, false, std::string("error: ") + ex.what()}};
    }
    c.checks.insert(c.checks.end(), checks.begin(), checks.end());
  }
  return c;
}

std::map<Language, DistribModel> corpus_models(const FixtureData& d, std::vector<DiagnosticRow>& diags) {
  std::map<Language, DistribModel> out;
  const std::vector<std::pair<Language, std::string>> corpora = {{Language::English, "corpus1_en.txt"},
                                                                 {Language::Irish, "corpus2_ga.txt"}};
  for (const auto& [lang, file] : corpora) {
    const auto& tables = lang == Language::English ? d.corpus_tables_en : d.corpus_tables_ga;
    auto doc = segment_and_tokenize(read_file(d.dir / "corpus" / file), lang, tables);
    std::vector<std::string> warnings;
    out[lang] = build_model(doc, d.lexicon(lang), d.model(lang).basis, 3, tables, &warnings);
    for (const auto& w : warnings) diags.push_back({"corpus-model", file, 0.0, std::nullopt, w});
  }
  return out;
}

Criterion similarity_table(const FixtureData& d, std::vector<DiagnosticRow>& diags) {
  Criterion c{3, "Similarity table", {}};
  int row = 0;
  for (const auto& r : similarity_rows()) {
    auto name = fmt::format("row {}: {}", ++row, r.first);
    c.checks.push_back(guarded(name, [&] {
      auto a = meaning(d, r.first, r.first_lang);
      auto b = meaning(d, r.second, r.second_lang);
      return printed_score(name, similarity(a, b), r.printed, 2);
    }));
  }
  try {
    auto models = corpus_models(d, diags);
    const auto& dsof = models[Language::English].noun("dark side of the Force");
    std::string counts;
    for (const auto& x : dsof) counts += rat(x) + " ";
    diags.push_back({"corpus-model", "dark side of the Force counts", 0.0, std::nullopt,
                     "computed [" + counts + "], printed [4 2 1 1 1]"});
    row = 0;
    for (const auto& r : similarity_rows()) {
      ++row;
      DiagnosticRow diag{"similarity-from-corpus", fmt::format("row {}", row), 0.0, r.printed, ""};
      try {
        auto a = meaning_of(r.first, d.lexicon(r.first_lang), models[r.first_lang]);
        auto b = meaning_of(r.second, d.lexicon(r.second_lang), models[r.second_lang]);
        diag.computed = similarity(a, b);
        diag.note = matches_printed(diag.computed, r.printed, 2) ? "matches" : "differs";
      } catch (const std::exception& e) {
        diag.computed = std::nan("");
        diag.note = e.what();
      }
      diags.push_back(diag);
    }
  } catch (const std::exception& e) {
    diags.push_back({"corpus-model", "build", 0.0, std::nullopt, e.what()});
  }
  return c;
}

Criterion relative_clause(const FixtureData& d) {
  Criterion c{4, "Relative clause example", {}};
  try {
    auto g = meaning(d, kIrishPalpatine, Language::Irish);
    auto e = meaning(d, kPalpatine, Language::English);
    auto emp = meaning(d, kEmperor, Language::English);
    c.checks.push_back({"Irish meaning", to_string(g) == "{(2,1):330, (2,2):40}",
                        "computed " + to_string(g) + ", printed {(2,1):330, (2,2):40}"});
    c.checks.push_back(exact_rational("inner product", inner(e, g), 106880));
    c.checks.push_back(exact_rational("English length", length(e), 103424));
    c.checks.push_back(exact_rational("Irish length", length(g), 110500));
    c.checks.push_back(printed_score("score", similarity(e, g), 0.999, 3));
    c.checks.push_back(exact_rational("Emperor inner product", inner(emp, g), 534400));
    c.checks.push_back(exact_rational("Emperor length", length(emp), 2593792));
    c.checks.push_back(printed_score("Emperor score", similarity(emp, g), 0.998, 3));
  } catch (const std::exception& ex) {
    c.checks.push_back({"evaluation", false, std::string("error: ") + ex.what()});
  }
  return c;
}

std::vector<std::string> read_units(const std::filesystem::path& path) {
  std::vector<std::string> units;
  for (const auto& line : split(read_file(path), '\n')) {
    if (!trim(line).empty()) units.push_back(trim(line));
  }
  return units;
}

Criterion bleu_suite(const FixtureData& d, std::vector<DiagnosticRow>& diags) {
  Criterion c{5, "BLEU table and smoothing conformance", {}};
  std::vector<std::string> units;
  try {
    units = read_units(d.dir / "bleu" / "units.txt");
  } catch (const std::exception& e) {
    c.checks.push_back({"units", false, std::string("error: ") + e.what()});
  }
  int row = 0;
  for (const auto& r : bleu_rows()) {
    auto name = fmt::format("row {}: {}", ++row, r.candidate);
    c.checks.push_back(guarded(name, [&] {
      auto ref = bleu_tokens(r.reference, units);
      auto cand = bleu_tokens(r.candidate, units);
      double got = bleu(ref, cand, Smoothing::Method7Legacy).score;
      double modern = bleu(ref, cand, Smoothing::Method7).score;
      diags.push_back({"bleu-method7-current", fmt::format("row {}", row), modern, r.printed_bleu,
                       std::abs(modern - r.printed_bleu) <= kBleuTolerance ? "within 0.05" : "outside 0.05"});
      return Check{name, std::abs(got - r.printed_bleu) <= kBleuTolerance,
                   fmt::format("computed {}, printed {} (tolerance {})", fmt_num(got), r.printed_bleu,
                               kBleuTolerance)};
    }));
    DiagnosticRow sim{"bleu-table-similarity", fmt::format("row {}", row), 0.0, r.printed_similarity, ""};
    try {
      sim.computed = similarity(meaning(d, r.reference, r.lang), meaning(d, r.candidate, r.lang));
      sim.note = matches_printed(sim.computed, r.printed_similarity, 2) ? "matches" : "differs";
    } catch (const std::exception& e) {
      sim.computed = std::nan("");
      sim.note = e.what();
    }
    diags.push_back(sim);
  }
  try {
    auto ref = Json::parse(read_file(d.dir / "bleu" / "reference.json"));
    for (auto s : {Smoothing::Method7Legacy, Smoothing::Method7}) {
      double worst = 0.0;
      std::size_t n = 0;
      for (const auto& p : ref.at("pairs")) {
        auto got = bleu(p.at("reference").get<Tokens>(), p.at("candidate").get<Tokens>(), s).score;
        worst = std::max(worst, std::abs(got - p.at(to_string(s)).get<double>()));
        ++n;
      }
      auto version = ref.at("versions").at(to_string(s)).get<std::string>();
      c.checks.push_back({fmt::format("{} conformance (reference {})", to_string(s), version),
                          n == 20 && worst <= 1e-9,
                          fmt::format("{} pairs, max |error| {:.3g}, tolerance 1e-9", n, worst)});
    }
  } catch (const std::exception& e) {
    c.checks.push_back({"conformance", false, std::string("error: ") + e.what()});
  }
  return c;
}

Criterion concepts_suite(const FixtureData& d, std::vector<DiagnosticRow>& diags) {
  Criterion c{6, "Concept construction", {}};
  c.checks.push_back({"tree files aligned", d.tree_en.same_structure(d.tree_ga),
                      "English and Irish trees declare the same node ids and parents"});
  for (auto lang : {Language::English, Language::Irish}) {
    std::vector<Concept> built;
    try {
      built = fixture_concepts(d, lang, false);
    } catch (const std::exception& e) {
      c.checks.push_back({std::string(language_code(lang)) + " concepts", false, std::string("error: ") + e.what()});
      continue;
    }
    auto expected = expected_concepts(lang, d.schema);
    for (std::size_t i = 0; i < built.size(); ++i) {
      auto bad = concept_mismatches(built[i], expected[i], d.schema);
      bool props_ok = std::none_of(bad.begin(), bad.end(), [](const std::string& s) { return s != "tree"; });
      bool tree_ok = std::find(bad.begin(), bad.end(), "tree") == bad.end();
      c.checks.push_back({built[i].name + " properties", props_ok,
                          props_ok ? "all 11 property sets match" : "differs in " + join(bad, ", ")});
      c.checks.push_back({built[i].name + " tree set", tree_ok,
                          fmt::format("{} nodes", built[i].tree_set.size())});
    }
    try {
      std::vector<std::string> notes;
      auto from_corpus = fixture_concepts(d, lang, true, &notes);
      const auto& tree = lang == Language::English ? d.tree_en : d.tree_ga;
      for (std::size_t i = 0; i < from_corpus.size(); ++i) {
        auto bad = concept_mismatches(from_corpus[i], expected[i], d.schema);
        double dist = concept_distance(from_corpus[i], built[i], d.schema, tree).total;
        diags.push_back({"concept-from-corpus", from_corpus[i].name, dist, 0.0,
                         bad.empty() ? "matches the descriptor table" : "differs in " + join(bad, ", ")});
      }
      for (const auto& n : notes) diags.push_back({"concept-from-corpus", "note", 0.0, std::nullopt, n});
    } catch (const std::exception& e) {
      diags.push_back({"concept-from-corpus", language_code(lang), 0.0, std::nullopt, e.what()});
    }
  }
  return c;
}

Criterion metric_suite(const FixtureData& d, std::vector<DiagnosticRow>& diags) {
  Criterion c{7, "Concept metric and translation", {}};
  std::vector<Concept> en, ga;
  try {
    en = fixture_concepts(d, Language::English, false);
    ga = fixture_concepts(d, Language::Irish, false);
  } catch (const std::exception& e) {
    c.checks.push_back({"concepts", false, std::string("error: ") + e.what()});
    return c;
  }
  auto find = [](const std::vector<Concept>& v, const std::string& name) -> const Concept& {
    for (const auto& x : v) {
      if (x.name == name) return x;
    }
    throw Error("no concept " + name);
  };
  auto dist = [&](const Concept& a, const Concept& b) {
    return concept_distance(a, b, d.schema, d.tree_en).total;
  };
  c.checks.push_back(guarded("d(Jupiter, Iúpatar)", [&] {
    double v = dist(find(en, "Jupiter"), find(ga, "Iúpatar"));
    return Check{"d(Jupiter, Iúpatar)", std::abs(v - 0.3) <= kExactTol,
                 fmt::format("computed {}, printed 0.3 (tolerance 1e-9)", fmt_num(v))};
  }));
  c.checks.push_back(guarded("d(Apple, Úll)", [&] {
    double v = dist(find(en, "Apple"), find(ga, "Úll"));
    return Check{"d(Apple, Úll)", std::abs(v) <= kExactTol, fmt::format("computed {}, printed 0", fmt_num(v))};
  }));
  const auto& en_names = concept_nouns(Language::English);
  const auto& ga_names = concept_nouns(Language::Irish);
  int correct = 0;
  std::vector<std::string> results;
  for (std::size_t i = 0; i < ga_names.size(); ++i) {
    auto ranking = translate_noun(find(ga, ga_names[i]), en, d.schema, d.tree_en);
    bool ok = ranking.front().name == en_names[i] && !ranking.front().tied;
    correct += ok;
    results.push_back(ga_names[i] + "->" + ranking.front().name);
  }
  c.checks.push_back({"nearest-concept translation", correct == 5,
                      fmt::format("{}/5 correct ({})", correct, join(results, ", "))});

  struct Printed {
    std::string a, b;
    double value;
  };
  const std::vector<Printed> printed = {
      {"Apple", "Jupiter", 8.7}, {"Mars", "Jupiter", 5.55}, {"Jupiter", "Sun", 7.7},
      {"Apple", "Sun", 7.97},    {"Apple", "Grian", 7.97},  {"Venus", "Iúpatar", 8.75},
      {"Mars", "Iúpatar", 5.45}, {"Apple", "Iúpatar", 8.6}, {"Sun", "Iúpatar", 7.6},
  };
  auto lookup = [&](const std::string& name) -> const Concept& {
    for (const auto* v : {&en, &ga}) {
      for (const auto& x : *v) {
        if (x.name == name) return x;
      }
    }
    throw Error("no concept " + name);
  };
  for (const auto& p : printed) {
    DiagnosticRow row{"printed-distances", "d(" + p.a + ", " + p.b + ")", 0.0, p.value, ""};
    try {
      // The English "Mars" is meant where both languages share the name.
      const Concept& a = p.a == "Mars" ? find(en, "Mars") : lookup(p.a);
      row.computed = dist(a, lookup(p.b));
      row.note = matches_printed(row.computed, p.value, 2) ? "matches" : "differs";
    } catch (const std::exception& e) {
      row.computed = std::nan("");
      row.note = e.what();
    }
    diags.push_back(row);
  }
  return c;
}

}  // namespace

FixtureData FixtureData::load(const std::filesystem::path& dir) {
  FixtureData d;
  d.dir = dir;
  d.lexicon_en = Lexicon::load(dir / "lexicon" / "en.lex");
  d.lexicon_ga = Lexicon::load(dir / "lexicon" / "ga.lex");
  d.model_en = DistribModel::load(dir / "model" / "en.model");
  d.model_ga = DistribModel::load(dir / "model" / "ga.model");
  d.corpus_tables_en = CorpusTables::load(dir / "tables", Language::English);
  d.corpus_tables_ga = CorpusTables::load(dir / "tables", Language::Irish);
  d.schema = PropertySchema::standard();
  auto cdir = dir / "concepts";
  d.adjectives_en = AdjectiveValueTable::load(cdir / "adjectives_en.txt", Language::English, d.schema);
  d.adjectives_ga = AdjectiveValueTable::load(cdir / "adjectives_ga.txt", Language::Irish, d.schema);
  d.tree_en = HypernymTree::load(cdir / "tree_en.txt");
  d.tree_ga = HypernymTree::load(cdir / "tree_ga.txt");
  if (!d.tree_en.same_structure(d.tree_ga)) throw ConfigError("English and Irish trees are not aligned");
  d.concept_tables_en = CorpusTables::load(cdir, Language::English);
  d.concept_tables_ga = CorpusTables::load(cdir, Language::Irish);
  d.descriptors_en = load_descriptor_table(cdir / "descriptors_en.txt");
  d.descriptors_ga = load_descriptor_table(cdir / "descriptors_ga.txt");
  return d;
}

const std::vector<std::string>& concept_nouns(Language lang) {
  static const std::vector<std::string> en = {"Venus", "Jupiter", "Mars", "Apple", "Sun"};
  static const std::vector<std::string> ga = {"Véineas", "Iúpatar", "Mars", "Úll", "Grian"};
  return lang == Language::English ? en : ga;
}

std::vector<Concept> fixture_concepts(const FixtureData& data, Language lang, bool from_corpus,
                                    std::vector<std::string>* notes) {
  const bool en = lang == Language::English;
  const auto& table = en ? data.adjectives_en : data.adjectives_ga;
  const auto& tree = en ? data.tree_en : data.tree_ga;
  const auto& tables = en ? data.concept_tables_en : data.concept_tables_ga;
  const auto& descriptors = en ? data.descriptors_en : data.descriptors_ga;
  CorpusDoc doc;
  if (from_corpus) {
    doc = segment_and_tokenize(read_file(data.dir / "corpus" / (en ? "corpus3_en.txt" : "corpus4_ga.txt")),
                               lang, tables);
  }
  std::vector<Concept> out;
  for (const auto& noun : concept_nouns(lang)) {
    Descriptors desc;
    if (from_corpus) {
      bool found = false;
      desc = extract_descriptors(doc, noun, table, tree, tables, &found);
      if (!found && notes) notes->push_back(noun + " does not occur in the corpus");
    } else {
      auto it = descriptors.find(noun);
      if (it == descriptors.end()) throw ConfigError("no descriptor entry for " + noun);
      desc = lemmatize(it->second, tables);
    }
    std::vector<std::string> dropped;
    auto c = build_concept(desc, table, tree, data.schema, &dropped);
    c.name = noun;
    if (notes && !dropped.empty()) notes->push_back(noun + " dropped: " + join(dropped, "; "));
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<std::pair<std::string, Language>> fixture_sentences() {
  std::vector<std::pair<std::string, Language>> out = {
      {kPalpatine, Language::English},
      {"Mace Windu is a mastermind who turns Anakin to the dark side of the Force", Language::English},
      {kEmperor, Language::English},
      {"Padmé is a mastermind who turns Anakin to the dark side of the Force", Language::English},
      {kIrishPalpatine, Language::Irish},
      {"Is Jedi cróga é Palpatine", Language::Irish},
  };
  for (const auto& r : similarity_rows()) {
    out.emplace_back(r.first, r.first_lang);
    out.emplace_back(r.second, r.second_lang);
  }
  for (const auto& r : bleu_rows()) {
    out.emplace_back(r.reference, r.lang);
    out.emplace_back(r.candidate, r.lang);
  }
  return out;
}

bool matches_printed(double value, double printed, int decimals) {
  const double scale = std::pow(10.0, decimals);
  const double eps = 1e-9;
  double rounded = std::round(value * scale) / scale;
  double truncated = std::trunc(value * scale + (value >= 0 ? eps : -eps)) / scale;
  return std::abs(rounded - printed) < eps || std::abs(truncated - printed) < eps;
}

bool Criterion::pass() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

bool ReproduceReport::pass() const {
  return std::all_of(criteria.begin(), criteria.end(), [](const Criterion& c) { return c.pass(); });
}

const std::vector<std::string>& reproduce_suites() {
  static const std::vector<std::string> suites = {"contraction", "crosslingual", "similarity", "relative-clause",
                                                  "bleu",        "concepts",     "metric"};
  return suites;
}

ReproduceReport reproduce(const FixtureData& data, const std::string& suite) {
  if (suite != "all" && std::find(reproduce_suites().begin(), reproduce_suites().end(), suite) ==
                            reproduce_suites().end()) {
    throw ConfigError("unknown suite '" + suite + "'");
  }
  auto want = [&](const char* s) { return suite == "all" || suite == s; };
  ReproduceReport r;
  if (want("contraction")) r.criteria.push_back(contraction(data));
  if (want("crosslingual")) r.criteria.push_back(crosslingual(data));
  if (want("similarity")) r.criteria.push_back(similarity_table(data, r.diagnostics));
  if (want("relative-clause")) r.criteria.push_back(relative_clause(data));
  if (want("bleu")) r.criteria.push_back(bleu_suite(data, r.diagnostics));
  if (want("concepts")) r.criteria.push_back(concepts_suite(data, r.diagnostics));
  if (want("metric")) r.criteria.push_back(metric_suite(data, r.diagnostics));
  return r;
}

std::string format_report(const ReproduceReport& report) {
  std::string out;
  for (const auto& c : report.criteria) {
    out += fmt::format("{} [{}] {}\n", c.pass() ? "PASS" : "FAIL", c.id, c.title);
    for (const auto& k : c.checks) {
      out += fmt::format("    {:4} {}: {}\n", k.pass ? "ok" : "FAIL", k.name, k.detail);
    }
  }
  if (!report.diagnostics.empty()) {
    out += "\nDiagnostics (not gating)\n";
    for (const auto& d : report.diagnostics) {
      std::string printed = d.printed ? fmt_num(*d.printed) : "-";
      std::string delta = d.printed && !std::isnan(d.computed) ? fmt::format("{:+.4f}", d.computed - *d.printed) : "-";
      out += fmt::format("    {:<24} {:<34} computed {:<10} printed {:<6} delta {:<8} {}\n", d.suite, d.name,
                         d.printed || d.computed != 0.0 ? fmt_num(d.computed) : "-", printed, delta, d.note);
    }
  }
  return out;
}

}  // namespace aistriu
