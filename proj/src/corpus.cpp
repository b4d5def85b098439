#include "aistriu/corpus.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <sstream>

namespace aistriu {
namespace {

const std::vector<std::string> kLeadingPunct = {"\"", "'", "(", "\xE2\x80\x9C", "\xE2\x80\x98"};
const std::vector<std::string> kTrailingPunct = {".", ",", ";", ":", "!", "?", "\"", "'", ")",
                                                 "\xE2\x80\x9D", "\xE2\x80\x99"};

bool is_separator(std::string_view s) { return s == "," || s == ";" || s == ":"; }

std::vector<std::string> table_lines(const std::filesystem::path& path) {
  std::vector<std::string> out;
  if (!std::filesystem::exists(path)) return out;
  std::istringstream in(read_file(path));
  for (std::string line; std::getline(in, line);) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (!line.empty()) out.push_back(line);
  }
  return out;
}

std::pair<std::string, std::string> arrow_pair(const std::string& line,
                                                const std::filesystem::path& path) {
  auto pos = line.find("=>");
  if (pos == std::string::npos) throw ParseError(path.string() + ": expected '=>' in: " + line);
  return {trim(line.substr(0, pos)), trim(line.substr(pos + 2))};
}

std::string replace_all(std::string text, const std::string& from, const std::string& to) {
  if (from.empty()) return text;
  std::size_t pos = 0;
  while ((pos = text.find(from, pos)) != std::string::npos) {
    text.replace(pos, from.size(), to);
    pos += to.size();
  }
  return text;
}

std::string hyphenate(const std::string& s) {
  std::string out = s;
  std::replace(out.begin(), out.end(), ' ', '-');
  return out;
}

}  // namespace

CorpusTables CorpusTables::load(const std::filesystem::path& dir, Language lang) {
  CorpusTables t;
  const std::string code = language_code(lang);
  t.multiwords = table_lines(dir / ("multiword_" + code + ".txt"));
  for (const auto& line : table_lines(dir / ("lemma_" + code + ".txt"))) {
    auto [form, head] = arrow_pair(line, dir / ("lemma_" + code + ".txt"));
    t.lemmas[canonical_key(form)] = head;
  }
  for (const auto& line : table_lines(dir / ("substitution_" + code + ".txt"))) {
    t.substitutions.push_back(arrow_pair(line, dir / ("substitution_" + code + ".txt")));
  }
  auto fpath = dir / ("function_" + code + ".txt");
  for (const auto& line : table_lines(fpath)) {
    auto words = split_ws(line);
    if (words.size() != 2) throw ParseError(fpath.string() + ": expected '<kind> <word>': " + line);
    if (words[0] == "determiner") {
      t.determiners.insert(canonical_key(words[1]));
    } else if (words[0] == "particle") {
      t.particles.insert(canonical_key(words[1]));
    } else if (words[0] == "negation") {
      t.negations.insert(canonical_key(words[1]));
    } else {
      throw ParseError(fpath.string() + ": unknown kind '" + words[0] + "'");
    }
  }
  return t;
}

std::vector<std::string> raw_tokens(std::string_view sentence, bool keep_separators) {
  std::vector<std::string> out;
  for (std::string word : split_ws(sentence)) {
    bool changed = true;
    while (changed && !word.empty()) {
      changed = false;
      for (const auto& p : kLeadingPunct) {
        if (word.rfind(p, 0) == 0) {
          word.erase(0, p.size());
          changed = true;
        }
      }
    }
    bool separator = false;
    changed = true;
    while (changed && !word.empty()) {
      changed = false;
      for (const auto& p : kTrailingPunct) {
        if (word.size() >= p.size() && word.compare(word.size() - p.size(), p.size(), p) == 0) {
          if (is_separator(p)) separator = true;
          word.erase(word.size() - p.size());
          changed = true;
        }
      }
    }
    if (!word.empty()) out.push_back(word);
    if (separator && keep_separators) out.emplace_back(",");
  }
  return out;
}

std::vector<std::string> split_sentences(std::string_view text) {
  std::vector<std::string> out;
  std::string current;
  for (char c : text) {
    if (c == '.' || c == '!' || c == '?') {
      if (!trim(current).empty()) out.push_back(trim(current));
      current.clear();
    } else {
      current.push_back(c == '\n' || c == '\r' ? ' ' : c);
    }
  }
  if (!trim(current).empty()) out.push_back(trim(current));
  return out;
}

std::vector<std::string> merge_multiwords(const std::vector<std::string>& tokens,
                                          const std::vector<std::string>& units) {
  std::map<std::string, std::string> by_key;
  std::size_t longest = 1;
  for (const auto& u : units) {
    auto key = canonical_key(u);
    by_key.emplace(key, u);
    longest = std::max(longest, split_ws(key).size());
  }
  std::vector<std::string> out;
  for (std::size_t i = 0; i < tokens.size();) {
    bool matched = false;
    for (std::size_t len = std::min(longest, tokens.size() - i); len >= 1; --len) {
      std::vector<std::string> span(tokens.begin() + i, tokens.begin() + i + len);
      auto it = by_key.find(canonical_key(join(span, " ")));
      if (it != by_key.end()) {
        out.push_back(hyphenate(it->second));
        i += len;
        matched = true;
        break;
      }
    }
    if (!matched) out.push_back(tokens[i++]);
  }
  return out;
}

CorpusDoc segment_and_tokenize(std::string_view text, Language lang, const CorpusTables& tables) {
  std::string body(text);
  for (const auto& [from, to] : tables.substitutions) body = replace_all(body, from, to);

  CorpusDoc doc;
  doc.language = lang;
  for (const auto& sentence : split_sentences(body)) {
    auto tokens = raw_tokens(sentence, true);
    for (auto& t : tokens) {
      if (t == ",") continue;
      if (auto it = tables.lemmas.find(canonical_key(t)); it != tables.lemmas.end()) t = it->second;
    }
    tokens = merge_multiwords(tokens, tables.multiwords);
    std::vector<std::string> words;
    std::vector<int> clause_ids;
    int clause = 0;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      if (tokens[i] == ",") {
        ++clause;
        continue;
      }
      std::string tok = tokens[i];
      if (tables.particles.count(canonical_key(tok)) && i + 1 < tokens.size() &&
          tokens[i + 1] != ",") {
        tok += "-" + tokens[++i];
      }
      words.push_back(tok);
      clause_ids.push_back(clause);
    }
    if (words.empty()) continue;
    doc.sentences.push_back(std::move(words));
    doc.clauses.push_back(std::move(clause_ids));
  }
  return doc;
}

CorpusDoc concat(const CorpusDoc& a, const CorpusDoc& b) {
  CorpusDoc out = a;
  out.sentences.insert(out.sentences.end(), b.sentences.begin(), b.sentences.end());
  out.clauses.insert(out.clauses.end(), b.clauses.begin(), b.clauses.end());
  return out;
}

std::vector<std::int64_t> CooccurrenceTable::at(std::string_view noun) const {
  auto it = counts.find(canonical_key(noun));
  if (it == counts.end()) return std::vector<std::int64_t>(basis.size(), 0);
  return it->second;
}

int modified_noun(const std::vector<std::string>& sentence, std::size_t pos, Language lang,
                  const std::set<std::string>& adjectives, const CorpusTables& tables) {
  auto skippable = [&](std::size_t i) {
    auto k = canonical_key(sentence[i]);
    return adjectives.count(k) > 0 || tables.determiners.count(k) > 0;
  };
  if (lang == Language::English) {
    std::size_t i = pos + 1;
    while (i < sentence.size() && skippable(i)) ++i;
    return i < sentence.size() ? static_cast<int>(i) : -1;
  }
  int i = static_cast<int>(pos) - 1;
  while (i >= 0 && adjectives.count(canonical_key(sentence[i]))) --i;
  return i;
}

CooccurrenceTable window_counts(const CorpusDoc& doc, const std::vector<std::string>& basis,
                                int m, const std::vector<std::string>& adjectives,
                                const CorpusTables& tables) {
  if (basis.empty()) throw ConfigError("empty basis");
  if (m < 1) throw ConfigError("window radius must be at least 1");

  struct Column {
    std::string key;
    bool argument;
  };
  std::vector<Column> columns;
  std::set<std::string> adjective_keys;
  for (const auto& a : adjectives) adjective_keys.insert(canonical_key(a));
  for (const auto& label : basis) {
    std::string key = canonical_key(label);
    if (key.rfind("arg ", 0) == 0) {
      columns.push_back({key.substr(4), true});
      adjective_keys.insert(key.substr(4));
    } else {
      columns.push_back({key, false});
    }
  }

  CooccurrenceTable table;
  table.basis = basis;
  for (const auto& sentence : doc.sentences) {
    std::vector<std::string> keys;
    for (const auto& t : sentence) keys.push_back(canonical_key(t));
    const int n = static_cast<int>(keys.size());

    std::vector<std::vector<int>> modified(columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
      if (!columns[c].argument) continue;
      for (int p = 0; p < n; ++p) {
        if (keys[p] != columns[c].key) continue;
        int r = modified_noun(sentence, p, doc.language, adjective_keys, tables);
        if (r >= 0) modified[c].push_back(r);
      }
    }

    for (int q = 0; q < n; ++q) {
      auto& row = table.counts[keys[q]];
      row.resize(columns.size(), 0);
      for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].argument) {
          for (int r : modified[c]) {
            if (r != q && std::abs(r - q) <= m) ++row[c];
          }
        } else {
          for (int r = std::max(0, q - m); r <= std::min(n - 1, q + m); ++r) {
            if (r != q && keys[r] == columns[c].key) ++row[c];
          }
        }
      }
    }
  }
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].argument) continue;
    auto it = table.counts.find(columns[c].key);
    if (it == table.counts.end()) continue;
    std::fill(it->second.begin(), it->second.end(), 0);
    it->second[c] = 1;
  }
  return table;
}

std::int64_t cooccurrence_events(const CorpusDoc& doc, std::string_view a, std::string_view b,
                                 int m) {
  auto ka = canonical_key(a);
  auto kb = canonical_key(b);
  std::int64_t total = 0;
  for (const auto& sentence : doc.sentences) {
    const int n = static_cast<int>(sentence.size());
    for (int p = 0; p < n; ++p) {
      if (canonical_key(sentence[p]) != ka) continue;
      for (int q = std::max(0, p - m); q <= std::min(n - 1, p + m); ++q) {
        if (q != p && canonical_key(sentence[q]) == kb) ++total;
      }
    }
  }
  return total;
}

}  // namespace aistriu
