#include "aistriu/concepts.hpp"
#include "aistriu/json_io.hpp"
#include "aistriu/reproduce.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace aistriu;

namespace {

constexpr int kDomainError = 1;
constexpr int kUsageError = 2;

class UsageError : public Error {
 public:
  using Error::Error;
};

void print(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::filesystem::path pick(const std::string& given, const std::filesystem::path& fallback) {
  return given.empty() ? fallback : std::filesystem::path(given);
}

Language language(const std::string& code) {
  try {
    return parse_language(code);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

std::vector<std::string> read_lines(const std::filesystem::path& path) {
  std::vector<std::string> out;
  for (const auto& line : split(read_file(path), '\n')) {
    if (!trim(line).empty()) out.push_back(trim(line));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pregroup sentence meanings, cross-lingual similarity and conceptual-space translation"};
  app.require_subcommand(1);
  std::string data_opt;
  app.add_option("--data-dir", data_opt, "Fixture directory (default: $AISTRIU_DATA_DIR or the built-in path)");
  std::function<void()> action;
  auto data = [&] { return data_opt.empty() ? data_dir() : std::filesystem::path(data_opt); };
  auto lexicon_path = [&](const std::string& given, Language l) {
    return pick(given, data() / "lexicon" / (language_code(l) + ".lex"));
  };
  auto model_path = [&](const std::string& given, Language l) {
    return pick(given, data() / "model" / (language_code(l) + ".model"));
  };

  // grammar check
  auto* grammar = app.add_subcommand("grammar", "Pregroup grammar tools");
  grammar->require_subcommand(1);
  auto* check = grammar->add_subcommand("check", "Reduce a sentence to type s");
  std::string sentence, lang_code = "en", lexicon_file;
  check->add_option("--sentence", sentence)->required();
  check->add_option("--lang", lang_code, "en or ga");
  check->add_option("--lexicon", lexicon_file)->check(CLI::ExistingFile);
  check->callback([&] {
    action = [&] {
      auto lang = language(lang_code);
      auto lex = Lexicon::load(lexicon_path(lexicon_file, lang));
      auto parsed = parse_sentence(sentence, lang, lex);
      Json tokens = Json::array();
      for (const auto& t : parsed.tokens) {
        tokens.push_back({{"surface", t.surface},
                          {"category", to_string(t.entry.category)},
                          {"type", to_string(t.entry.ptype)}});
      }
      Json pairs = Json::array();
      for (const auto& p : parsed.plan.pairings) pairs.push_back({p.left, p.right});
      print({{"tokens", tokens}, {"pairings", pairs}, {"result", to_string(parsed.plan.result_type)}});
    };
  });

  // model build
  auto* model = app.add_subcommand("model", "Distributional model tools");
  model->require_subcommand(1);
  auto* build = model->add_subcommand("build", "Count a model from a corpus");
  std::string corpus_file, tables_dir, basis_text;
  int window = 3;
  build->add_option("--corpus", corpus_file)->required()->check(CLI::ExistingFile);
  build->add_option("--lang", lang_code, "en or ga");
  build->add_option("--lexicon", lexicon_file)->check(CLI::ExistingFile);
  build->add_option("--tables", tables_dir, "Directory with multiword/lemma/substitution/function tables")
      ->check(CLI::ExistingDirectory);
  build->add_option("--basis", basis_text, "Comma-separated basis (default: the fixture model's basis)");
  build->add_option("--window", window)->check(CLI::Range(0, 100));
  build->callback([&] {
    action = [&] {
      auto lang = language(lang_code);
      auto lex = Lexicon::load(lexicon_path(lexicon_file, lang));
      auto tables = CorpusTables::load(pick(tables_dir, data() / "tables"), lang);
      std::vector<std::string> basis = split(basis_text, ',');
      std::erase_if(basis, [](const std::string& s) { return s.empty(); });
      if (basis.empty()) basis = DistribModel::load(model_path("", lang)).basis;
      if (basis.size() != kBasisSize) throw UsageError("basis must have 5 entries");
      auto doc = segment_and_tokenize(read_file(corpus_file), lang, tables);
      std::vector<std::string> warnings;
      auto m = build_model(doc, lex, basis, window, tables, &warnings);
      for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
      std::cout << m.serialize();
    };
  });

  // sentence compare
  auto* sent = app.add_subcommand("sentence", "Sentence meanings");
  sent->require_subcommand(1);
  auto* compare = sent->add_subcommand("compare", "Similarity of two sentences");
  std::string a_text, b_text, a_lang = "en", b_lang = "ga", a_model, b_model, a_lex, b_lex, rule = "object-noun";
  compare->add_option("--a", a_text)->required();
  compare->add_option("--b", b_text)->required();
  compare->add_option("--lang-a", a_lang);
  compare->add_option("--lang-b", b_lang);
  compare->add_option("--model-a", a_model)->check(CLI::ExistingFile);
  compare->add_option("--model-b", b_model)->check(CLI::ExistingFile);
  compare->add_option("--lexicon-a", a_lex)->check(CLI::ExistingFile);
  compare->add_option("--lexicon-b", b_lex)->check(CLI::ExistingFile);
  compare->add_option("--preposition-rule", rule)->check(CLI::IsMember({"object-noun", "phrase-vector"}));
  compare->callback([&] {
    action = [&] {
      auto la = language(a_lang), lb = language(b_lang);
      EvalOptions opts;
      opts.preposition = rule == "phrase-vector" ? PrepositionRule::PhraseVector : PrepositionRule::ObjectNoun;
      auto ma = DistribModel::load(model_path(a_model, la));
      auto mb = DistribModel::load(model_path(b_model, lb));
      if (ma.basis.size() != mb.basis.size()) throw Error("models have different bases");
      auto va = meaning_of(a_text, Lexicon::load(lexicon_path(a_lex, la)), ma, opts);
      auto vb = meaning_of(b_text, Lexicon::load(lexicon_path(b_lex, lb)), mb, opts);
      print({{"a", meaning_to_json(va)},
             {"b", meaning_to_json(vb)},
             {"inner", rational_to_json(inner(va, vb))},
             {"length_a", rational_to_json(length(va))},
             {"length_b", rational_to_json(length(vb))},
             {"score", similarity(va, vb)}});
    };
  });

  // bleu
  auto* bleu_cmd = app.add_subcommand("bleu", "BLEU score of a candidate against a reference");
  std::string reference, candidate, smoothing = "method7-legacy", units_file;
  bleu_cmd->add_option("--reference", reference)->required();
  bleu_cmd->add_option("--candidate", candidate)->required();
  bleu_cmd->add_option("--smoothing", smoothing)->check(CLI::IsMember({"none", "method7", "method7-legacy"}));
  bleu_cmd->add_option("--units", units_file, "Multiword units kept as one token (default: data/bleu/units.txt)")
      ->check(CLI::ExistingFile);
  bleu_cmd->callback([&] {
    action = [&] {
      auto units = read_lines(pick(units_file, data() / "bleu" / "units.txt"));
      auto r = bleu(bleu_tokens(reference, units), bleu_tokens(candidate, units), parse_smoothing(smoothing));
      print(bleu_to_json(r));
    };
  });

  // concept build / distance / translate
  auto* concept_cmd = app.add_subcommand("concept", "Conceptual-space tools");
  concept_cmd->require_subcommand(1);
  auto* cbuild = concept_cmd->add_subcommand("build", "Build a concept for a noun");
  std::string noun, table_file, tree_file, descriptors_file, functions_dir;
  auto* corpus_opt = cbuild->add_option("--corpus", corpus_file)->check(CLI::ExistingFile);
  auto* desc_opt = cbuild->add_option("--descriptors", descriptors_file, "Descriptor table instead of a corpus")
                       ->check(CLI::ExistingFile);
  corpus_opt->excludes(desc_opt);
  cbuild->add_option("--lang", lang_code);
  cbuild->add_option("--noun", noun)->required();
  cbuild->add_option("--table", table_file)->check(CLI::ExistingFile);
  cbuild->add_option("--tree", tree_file)->check(CLI::ExistingFile);
  cbuild->add_option("--tables", functions_dir, "Directory with lemma/function tables (default: data/concepts)")
      ->check(CLI::ExistingDirectory);
  cbuild->callback([&] {
    action = [&] {
      auto lang = language(lang_code);
      auto code = language_code(lang);
      auto schema = PropertySchema::standard();
      auto cdir = data() / "concepts";
      auto table = AdjectiveValueTable::load(pick(table_file, cdir / ("adjectives_" + code + ".txt")), lang, schema);
      auto tree = HypernymTree::load(pick(tree_file, cdir / ("tree_" + code + ".txt")));
      auto tables = CorpusTables::load(pick(functions_dir, cdir), lang);
      Descriptors desc;
      if (!corpus_file.empty()) {
        auto doc = segment_and_tokenize(read_file(corpus_file), lang, tables);
        bool found = false;
        desc = extract_descriptors(doc, noun, table, tree, tables, &found);
        if (!found) std::cerr << "warning: '" << noun << "' does not occur in the corpus\n";
      } else {
        auto all = load_descriptor_table(pick(descriptors_file, cdir / ("descriptors_" + code + ".txt")));
        auto it = all.find(noun);
        if (it == all.end()) throw Error("no descriptor entry for '" + noun + "'");
        desc = lemmatize(it->second, tables);
      }
      std::vector<std::string> dropped;
      auto c = build_concept(desc, table, tree, schema, &dropped);
      c.name = noun;
      for (const auto& d : dropped) std::cerr << "warning: dropped descriptor '" << d << "'\n";
      print(concept_to_json(c, schema));
    };
  });
  auto* cdist = concept_cmd->add_subcommand("distance", "Distance between two concepts");
  std::string a_file, b_file;
  cdist->add_option("--a", a_file)->required()->check(CLI::ExistingFile);
  cdist->add_option("--b", b_file)->required()->check(CLI::ExistingFile);
  cdist->add_option("--tree", tree_file)->check(CLI::ExistingFile);
  cdist->callback([&] {
    action = [&] {
      auto schema = PropertySchema::standard();
      auto tree = HypernymTree::load(pick(tree_file, data() / "concepts" / "tree_en.txt"));
      auto a = concept_from_json(Json::parse(read_file(a_file)), schema);
      auto b = concept_from_json(Json::parse(read_file(b_file)), schema);
      print(distance_to_json(concept_distance(a, b, schema, tree)));
    };
  });
  auto* ctrans = concept_cmd->add_subcommand("translate", "Rank candidate concepts by distance");
  std::string query_file, candidates_dir;
  ctrans->add_option("--query", query_file)->required()->check(CLI::ExistingFile);
  ctrans->add_option("--candidates", candidates_dir, "Directory of concept JSON files")
      ->required()
      ->check(CLI::ExistingDirectory);
  ctrans->add_option("--tree", tree_file)->check(CLI::ExistingFile);
  ctrans->callback([&] {
    action = [&] {
      auto schema = PropertySchema::standard();
      auto tree = HypernymTree::load(pick(tree_file, data() / "concepts" / "tree_en.txt"));
      auto q = concept_from_json(Json::parse(read_file(query_file)), schema);
      std::vector<std::filesystem::path> files;
      for (const auto& e : std::filesystem::directory_iterator(candidates_dir)) {
        if (e.path().extension() == ".json") files.push_back(e.path());
      }
      std::sort(files.begin(), files.end());
      std::vector<Concept> candidates;
      for (const auto& f : files) {
        auto c = concept_from_json(Json::parse(read_file(f)), schema);
        if (c.name.empty()) c.name = f.stem().string();
        candidates.push_back(std::move(c));
      }
      print(ranking_to_json(translate_noun(q, candidates, schema, tree)));
    };
  });

  // reproduce
  auto* repro = app.add_subcommand("reproduce", "Run the regression suites");
  std::string suite = "all";
  bool as_json = false;
  int exit_code = 0;
  std::vector<std::string> suites = reproduce_suites();
  suites.insert(suites.begin(), "all");
  repro->add_option("--suite", suite)->check(CLI::IsMember(suites));
  repro->add_flag("--json", as_json);
  repro->callback([&] {
    action = [&] {
      auto report = reproduce(FixtureData::load(data()), suite);
      if (as_json) {
        Json criteria = Json::array();
        for (const auto& c : report.criteria) {
          Json checks = Json::array();
          for (const auto& k : c.checks) checks.push_back({{"name", k.name}, {"pass", k.pass}, {"detail", k.detail}});
          criteria.push_back({{"id", c.id}, {"title", c.title}, {"pass", c.pass()}, {"checks", checks}});
        }
        Json diags = Json::array();
        for (const auto& d : report.diagnostics) {
          diags.push_back({{"suite", d.suite},
                           {"name", d.name},
                           {"computed", std::isnan(d.computed) ? Json() : Json(d.computed)},
                           {"printed", d.printed ? Json(*d.printed) : Json()},
                           {"note", d.note}});
        }
        print({{"pass", report.pass()}, {"criteria", criteria}, {"diagnostics", diags}});
      } else {
        std::cout << format_report(report);
      }
      exit_code = report.pass() ? 0 : kDomainError;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }
  try {
    action();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomainError;
  }
  return exit_code;
}
