#include "aistriu/concepts.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace aistriu {
namespace {

constexpr double kTol = 1e-9;
constexpr std::size_t kMaxGap = 3;

using Words = std::vector<std::string>;

Words words_of(std::string_view text) { return split_ws(canonical_key(text)); }

Property interval(const std::string& name) {
  return Property{name, 1, {{0.0}, {1.0}}, {}};
}

bool points_equal(const Point& a, const Point& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::abs(a[i] - b[i]) > kTol) return false;
  }
  return true;
}

// End of the longest match of `pat` starting at word i, or 0 when none.
std::size_t match_end(const Words& w, const std::vector<bool>& blocked, std::size_t i,
                      const Words& pat, std::size_t k = 0) {
  if (k == pat.size()) return i;
  if (pat[k] == "...") {
    std::size_t best = 0;
    for (std::size_t g = 0; g <= kMaxGap && i + g <= w.size(); ++g) {
      if (g > 0 && blocked[i + g - 1]) break;
      best = std::max(best, match_end(w, blocked, i + g, pat, k + 1));
    }
    return best;
  }
  if (i >= w.size() || blocked[i] || w[i] != pat[k]) return 0;
  return match_end(w, blocked, i + 1, pat, k + 1);
}

struct Match {
  std::size_t begin = 0;
  std::size_t end = 0;
  std::size_t pattern = 0;
};

// Leftmost-longest, non-overlapping matches; ties go to the earlier pattern.
std::vector<Match> scan(const Words& w, const std::vector<bool>& blocked,
                        const std::vector<Words>& patterns) {
  std::vector<Match> out;
  for (std::size_t i = 0; i < w.size();) {
    Match best{i, 0, 0};
    for (std::size_t p = 0; p < patterns.size(); ++p) {
      if (patterns[p].empty()) continue;
      std::size_t e = match_end(w, blocked, i, patterns[p]);
      if (e > best.end) best = {i, e, p};
    }
    if (best.end > i) {
      out.push_back(best);
      i = best.end;
    } else {
      ++i;
    }
  }
  return out;
}

void push_unique(std::vector<std::string>& v, const std::string& s) {
  if (std::find(v.begin(), v.end(), s) == v.end()) v.push_back(s);
}

struct LabelIndex {
  std::vector<Words> patterns;
  std::vector<std::string> labels;
};

LabelIndex label_index(const HypernymTree& tree) {
  LabelIndex idx;
  for (const auto& n : tree.nodes()) {
    for (const auto& l : n.labels) {
      idx.patterns.push_back(words_of(l));
      idx.labels.push_back(l);
    }
  }
  return idx;
}

}  // namespace

PropertySchema::PropertySchema(std::vector<Property> properties)
    : properties_(std::move(properties)) {
  for (const auto& p : properties_) {
    if (p.domain.empty()) throw ConfigError("property '" + p.name + "' has no domain");
    for (const auto& v : p.domain) {
      if (v.size() != p.dimension) throw ConfigError("domain vertex of wrong size in '" + p.name + "'");
    }
  }
}

PropertySchema PropertySchema::standard() {
  std::vector<Property> props;
  for (const char* n : {"dimension", "age", "value", "speed"}) props.push_back(interval(n));
  Property colour{"colour", 3, {}, {}};
  for (int mask = 0; mask < 8; ++mask) {
    colour.domain.push_back({double(mask & 1), double((mask >> 1) & 1), double((mask >> 2) & 1)});
  }
  props.push_back(colour);
  props.push_back(interval("intensity"));
  const double h = std::sqrt(3.0) / 2.0;
  Property taste{"taste", 3, {}, {}};
  taste.named_points = {{"Salt", {1.0, 0.0, 0.0}},
                        {"Sour", {-0.5, -h, 0.0}},
                        {"Bitter", {-0.5, h, 0.0}},
                        {"Sweet", {0.0, 0.0, std::sqrt(2.0)}}};
  for (const char* n : {"Salt", "Sour", "Bitter", "Sweet"}) taste.domain.push_back(taste.named_points[n]);
  props.push_back(taste);
  for (const char* n : {"temperature", "density", "mass", "texture"}) props.push_back(interval(n));
  return PropertySchema(std::move(props));
}

std::size_t PropertySchema::index(std::string_view name) const {
  for (std::size_t i = 0; i < properties_.size(); ++i) {
    if (properties_[i].name == name) return i;
  }
  throw ConfigError("unknown property '" + std::string(name) + "'");
}

std::size_t PropertySchema::total_dimension() const {
  std::size_t d = 0;
  for (const auto& p : properties_) d += p.dimension;
  return d;
}

bool PropertySchema::operator==(const PropertySchema& other) const {
  if (properties_.size() != other.properties_.size()) return false;
  for (std::size_t i = 0; i < properties_.size(); ++i) {
    const auto& a = properties_[i];
    const auto& b = other.properties_[i];
    if (a.name != b.name || a.dimension != b.dimension || a.domain.size() != b.domain.size()) return false;
    for (std::size_t v = 0; v < a.domain.size(); ++v) {
      if (!points_equal(a.domain[v], b.domain[v])) return false;
    }
  }
  return true;
}

ConvexSet ConvexSet::full() {
  ConvexSet s;
  s.full_ = true;
  return s;
}

ConvexSet ConvexSet::hull(std::vector<Point> generators) {
  if (generators.empty()) throw Error("convex hull of no points");
  ConvexSet s;
  s.generators_ = std::move(generators);
  return s;
}

std::vector<Point> ConvexSet::vertices(const Property& property) const {
  return full_ ? property.domain : generators_;
}

ConvexSet ConvexSet::canonical(const Property& property) const {
  if (full_) return *this;
  std::vector<Point> pts;
  for (const auto& g : generators_) {
    if (g.size() != property.dimension) throw Error("point of wrong dimension for " + property.name);
    if (std::none_of(pts.begin(), pts.end(), [&](const Point& q) { return points_equal(q, g); })) {
      pts.push_back(g);
    }
  }
  if (property.dimension == 1 && pts.size() > 2) {
    auto [lo, hi] = std::minmax_element(pts.begin(), pts.end());
    pts = {*lo, *hi};
  }
  for (std::size_t i = 0; i < pts.size() && pts.size() > 1;) {
    std::vector<Point> others;
    for (std::size_t j = 0; j < pts.size(); ++j) {
      if (j != i) others.push_back(pts[j]);
    }
    if (l1_distance_to_hull(pts[i], others) <= kTol) {
      pts.erase(pts.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      ++i;
    }
  }
  std::sort(pts.begin(), pts.end());
  return hull(std::move(pts));
}

bool ConvexSet::contains(const Point& p, const Property& property) const {
  return l1_distance_to_hull(p, vertices(property)) <= kTol;
}

bool ConvexSet::same_set(const ConvexSet& other, const Property& property) const {
  auto a = hull(vertices(property)).canonical(property).generators();
  auto b = hull(other.vertices(property)).canonical(property).generators();
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!points_equal(a[i], b[i])) return false;
  }
  return true;
}

AdjectiveValueTable AdjectiveValueTable::parse(std::string_view text, Language lang,
                                               const PropertySchema& schema) {
  AdjectiveValueTable table;
  table.language = lang;
  std::istringstream in{std::string(text)};
  int line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto where = "adjective table line " + std::to_string(line_no) + ": ";
    auto colon = line.rfind(':');
    if (colon == std::string::npos) throw ParseError(where + "expected 'phrase : property values'");
    AdjectiveValue v;
    v.pattern = trim(line.substr(0, colon));
    auto fields = split_ws(line.substr(colon + 1));
    if (v.pattern.empty() || fields.empty()) throw ParseError(where + "missing phrase or property");
    v.property = fields[0];
    const auto& prop = schema.properties()[schema.index(v.property)];
    std::vector<std::string> values(fields.begin() + 1, fields.end());
    if (values.size() == 1 && prop.named_points.count(values[0])) {
      v.value = prop.named_points.at(values[0]);
    } else if (!values.empty() && values[0] == "rgb") {
      if (values.size() != 4) throw ParseError(where + "rgb needs three values");
      for (std::size_t i = 1; i < 4; ++i) v.value.push_back(parse_real(values[i]) / 255.0);
    } else {
      for (const auto& s : values) v.value.push_back(parse_real(s));
    }
    if (v.value.size() != prop.dimension) throw ParseError(where + "wrong number of values");
    if (!ConvexSet::full().contains(v.value, prop)) {
      throw ParseError(where + "value outside the " + prop.name + " domain");
    }
    table.entries.push_back(std::move(v));
  }
  return table;
}

AdjectiveValueTable AdjectiveValueTable::load(const std::filesystem::path& path, Language lang,
                                              const PropertySchema& schema) {
  try {
    return parse(read_file(path), lang, schema);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

const AdjectiveValue* AdjectiveValueTable::find(std::string_view phrase) const {
  auto key = canonical_key(phrase);
  for (const auto& e : entries) {
    if (canonical_key(e.pattern) == key) return &e;
  }
  return nullptr;
}

HypernymTree HypernymTree::parse(std::string_view text) {
  HypernymTree tree;
  std::istringstream in{std::string(text)};
  int line_no = 0;
  std::size_t roots = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto words = split_ws(line);
    if (words.size() < 3) throw ParseError("tree line " + std::to_string(line_no) + ": expected 'id parent label'");
    TreeNode node;
    node.id = words[0];
    node.parent = words[1] == "-" ? "" : words[1];
    std::string rest = trim(line.substr(line.find(words[1], words[0].size()) + words[1].size()));
    for (const auto& l : split(rest, '|')) {
      if (!l.empty()) node.labels.push_back(l);
    }
    if (tree.index_.count(node.id)) throw ParseError("duplicate tree node " + node.id);
    if (node.parent.empty()) ++roots;
    tree.index_[node.id] = tree.nodes_.size();
    tree.nodes_.push_back(std::move(node));
  }
  if (roots != 1) throw ParseError("tree must have exactly one root");
  std::stable_partition(tree.nodes_.begin(), tree.nodes_.end(),
                        [](const TreeNode& n) { return n.parent.empty(); });
  tree.index_.clear();
  for (std::size_t i = 0; i < tree.nodes_.size(); ++i) tree.index_[tree.nodes_[i].id] = i;
  for (const auto& n : tree.nodes_) {
    if (!n.parent.empty() && !tree.index_.count(n.parent)) {
      throw ParseError("node " + n.id + " has unknown parent " + n.parent);
    }
    tree.path_to_root(n.id);
  }
  return tree;
}

HypernymTree HypernymTree::load(const std::filesystem::path& path) {
  try {
    return parse(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

bool HypernymTree::contains(std::string_view id) const { return index_.count(std::string(id)) > 0; }

const TreeNode& HypernymTree::node(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) throw Error("unknown tree node '" + std::string(id) + "'");
  return nodes_[it->second];
}

std::vector<std::string> HypernymTree::path_to_root(std::string_view id) const {
  std::vector<std::string> path;
  const TreeNode* n = &node(id);
  while (true) {
    path.push_back(n->id);
    if (path.size() > nodes_.size()) throw ParseError("tree contains a cycle through " + std::string(id));
    if (n->parent.empty()) break;
    n = &node(n->parent);
  }
  return path;
}

std::string HypernymTree::join(const std::vector<std::string>& ids) const {
  if (ids.empty()) throw Error("join of no nodes");
  auto common = path_to_root(ids.front());
  std::reverse(common.begin(), common.end());
  for (std::size_t k = 1; k < ids.size(); ++k) {
    auto p = path_to_root(ids[k]);
    std::reverse(p.begin(), p.end());
    std::size_t len = 0;
    while (len < common.size() && len < p.size() && common[len] == p[len]) ++len;
    common.resize(len);
  }
  return common.back();
}

std::set<std::string> HypernymTree::up_closure(const std::vector<std::string>& ids) const {
  std::set<std::string> out{root()};
  for (const auto& id : ids) {
    for (const auto& a : path_to_root(id)) out.insert(a);
  }
  return out;
}

bool HypernymTree::same_structure(const HypernymTree& other) const {
  if (nodes_.size() != other.nodes_.size()) return false;
  for (const auto& n : nodes_) {
    if (!other.contains(n.id) || other.node(n.id).parent != n.parent) return false;
  }
  return true;
}

const TreeNode* HypernymTree::resolve(std::string_view phrase) const {
  auto words = words_of(phrase);
  std::vector<bool> blocked(words.size(), false);
  const TreeNode* best = nullptr;
  std::size_t best_len = 0;
  for (const auto& n : nodes_) {
    for (const auto& l : n.labels) {
      auto pat = words_of(l);
      if (pat.size() <= best_len) continue;
      for (std::size_t i = 0; i + pat.size() <= words.size(); ++i) {
        if (match_end(words, blocked, i, pat) == i + pat.size()) {
          best = &n;
          best_len = pat.size();
          break;
        }
      }
    }
  }
  return best;
}

std::string tree_join(const HypernymTree& tree, const std::vector<std::string>& ids) {
  return tree.join(ids);
}

std::map<std::string, Descriptors> parse_descriptor_table(std::string_view text) {
  std::map<std::string, Descriptors> out;
  std::istringstream in{std::string(text)};
  Descriptors* current = nullptr;
  int line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[' && line.back() == ']') {
      current = &out[trim(line.substr(1, line.size() - 2))];
      continue;
    }
    auto eq = line.find('=');
    if (!current || eq == std::string::npos) {
      throw ParseError("descriptor table line " + std::to_string(line_no) + ": unexpected text");
    }
    auto key = trim(line.substr(0, eq));
    auto items = split(line.substr(eq + 1), ';');
    std::erase_if(items, [](const std::string& s) { return s.empty(); });
    if (key == "adjectives") {
      current->adjectives = items;
    } else if (key == "nouns") {
      current->nouns = items;
    } else {
      throw ParseError("descriptor table line " + std::to_string(line_no) + ": unknown key " + key);
    }
  }
  return out;
}

std::map<std::string, Descriptors> load_descriptor_table(const std::filesystem::path& path) {
  return parse_descriptor_table(read_file(path));
}

Descriptors lemmatize(const Descriptors& descriptors, const CorpusTables& tables) {
  auto phrase = [&](const std::string& text) {
    auto words = split_ws(text);
    for (auto& w : words) {
      if (auto it = tables.lemmas.find(canonical_key(w)); it != tables.lemmas.end()) w = it->second;
    }
    return join(words, " ");
  };
  Descriptors out;
  for (const auto& a : descriptors.adjectives) out.adjectives.push_back(phrase(a));
  for (const auto& n : descriptors.nouns) out.nouns.push_back(phrase(n));
  return out;
}

Descriptors extract_descriptors(const CorpusDoc& doc, std::string_view noun,
                                const AdjectiveValueTable& table, const HypernymTree& tree,
                                const CorpusTables& tables, bool* found) {
  Words target = words_of(noun);
  for (auto& w : target) {
    if (auto it = tables.lemmas.find(w); it != tables.lemmas.end()) w = canonical_key(it->second);
  }
  std::vector<Words> adjective_patterns;
  for (const auto& e : table.entries) adjective_patterns.push_back(words_of(e.pattern));
  auto labels = label_index(tree);

  Descriptors out;
  bool seen = false;
  for (std::size_t s = 0; s < doc.sentences.size(); ++s) {
    Words words;
    std::vector<int> clause;
    for (std::size_t t = 0; t < doc.sentences[s].size(); ++t) {
      for (auto& w : words_of(doc.sentences[s][t])) {
        words.push_back(w);
        clause.push_back(doc.clauses.empty() ? 0 : doc.clauses[s][t]);
      }
    }
    std::vector<bool> none(words.size(), false);
    bool mentions = false;
    for (std::size_t i = 0; i + target.size() <= words.size() && !target.empty(); ++i) {
      if (match_end(words, none, i, target) == i + target.size()) mentions = true;
    }
    if (!mentions) continue;
    seen = true;

    std::vector<bool> blocked(words.size(), false);
    for (std::size_t i = 0; i < words.size(); ++i) {
      if (!tables.negations.count(words[i])) continue;
      for (std::size_t j = i; j < words.size() && clause[j] == clause[i]; ++j) blocked[j] = true;
    }
    for (const auto& m : scan(words, blocked, adjective_patterns)) {
      push_unique(out.adjectives, table.entries[m.pattern].pattern);
      for (std::size_t k = m.begin; k < m.end; ++k) blocked[k] = true;
    }
    for (const auto& m : scan(words, blocked, labels.patterns)) {
      push_unique(out.nouns, labels.labels[m.pattern]);
    }
  }
  if (found) *found = seen;
  return out;
}

Concept build_concept(const Descriptors& descriptors, const AdjectiveValueTable& table,
                      const HypernymTree& tree, const PropertySchema& schema,
                      std::vector<std::string>* dropped) {
  std::vector<std::vector<Point>> points(schema.properties().size());
  std::vector<Words> patterns;
  for (const auto& e : table.entries) patterns.push_back(words_of(e.pattern));
  for (const auto& adj : descriptors.adjectives) {
    std::vector<const AdjectiveValue*> hits;
    if (const auto* exact = table.find(adj)) {
      hits.push_back(exact);
    } else {
      auto words = words_of(adj);
      for (const auto& m : scan(words, std::vector<bool>(words.size(), false), patterns)) {
        hits.push_back(&table.entries[m.pattern]);
      }
    }
    if (hits.empty() && dropped) dropped->push_back(adj);
    for (const auto* h : hits) points[schema.index(h->property)].push_back(h->value);
  }
  std::vector<std::string> nodes;
  for (const auto& n : descriptors.nouns) {
    if (const auto* node = tree.resolve(n)) {
      nodes.push_back(node->id);
    } else if (dropped) {
      dropped->push_back(n);
    }
  }
  Concept c;
  for (std::size_t p = 0; p < points.size(); ++p) {
    c.properties.push_back(points[p].empty()
                               ? ConvexSet::full()
                               : ConvexSet::hull(points[p]).canonical(schema.properties()[p]));
  }
  c.tree_set = tree.up_closure(nodes);
  return c;
}

}  // namespace aistriu
