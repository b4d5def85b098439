#pragma once

#include "aistriu/common.hpp"
#include "aistriu/corpus.hpp"
#include "aistriu/lp.hpp"

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace aistriu {

struct Property {
  std::string name;
  std::size_t dimension = 1;
  std::vector<Point> domain;  // vertices whose hull is the whole property space
  std::map<std::string, Point> named_points;
};

class PropertySchema {
 public:
  PropertySchema() = default;
  explicit PropertySchema(std::vector<Property> properties);

  // dimension, age, value, speed, colour, intensity, taste, temperature,
  // density, mass, texture: 15 numeric dimensions.
  static PropertySchema standard();

  const std::vector<Property>& properties() const { return properties_; }
  std::size_t index(std::string_view name) const;
  std::size_t total_dimension() const;
  bool operator==(const PropertySchema& other) const;

 private:
  std::vector<Property> properties_;
};

class ConvexSet {
 public:
  static ConvexSet full();
  static ConvexSet hull(std::vector<Point> generators);

  bool is_full() const { return full_; }
  const std::vector<Point>& generators() const { return generators_; }

  // Generators of the set itself; FULL expands to the domain vertices.
  std::vector<Point> vertices(const Property& property) const;

  // Drops duplicate and interior generators and sorts the rest.
  ConvexSet canonical(const Property& property) const;
  bool contains(const Point& p, const Property& property) const;

  bool same_set(const ConvexSet& other, const Property& property) const;

 private:
  bool full_ = false;
  std::vector<Point> generators_;
};

struct AdjectiveValue {
  std::string pattern;  // canonical words; "..." matches a short gap
  std::string property;
  Point value;
};

struct AdjectiveValueTable {
  Language language = Language::English;
  std::vector<AdjectiveValue> entries;

  // Lines "pattern : property v1 [v2 v3]". Values are numbers or fractions,
  // "rgb r g b" for 8-bit colours, or a named point such as "Bitter".
  static AdjectiveValueTable parse(std::string_view text, Language lang,
                                   const PropertySchema& schema);
  static AdjectiveValueTable load(const std::filesystem::path& path, Language lang,
                                  const PropertySchema& schema);

  const AdjectiveValue* find(std::string_view phrase) const;
};

struct TreeNode {
  std::string id;
  std::string parent;  // empty for the root
  std::vector<std::string> labels;
};

class HypernymTree {
 public:
  // Lines "id parent-id label | synonym ..."; the root's parent is "-".
  static HypernymTree parse(std::string_view text);
  static HypernymTree load(const std::filesystem::path& path);

  const std::vector<TreeNode>& nodes() const { return nodes_; }
  const std::string& root() const { return nodes_.front().id; }
  bool contains(std::string_view id) const;
  const TreeNode& node(std::string_view id) const;
  std::vector<std::string> path_to_root(std::string_view id) const;
  std::string join(const std::vector<std::string>& ids) const;
  std::set<std::string> up_closure(const std::vector<std::string>& ids) const;
  bool same_structure(const HypernymTree& other) const;

  // Node whose label occurs as the longest contiguous word run in `phrase`.
  const TreeNode* resolve(std::string_view phrase) const;

 private:
  std::vector<TreeNode> nodes_;
  std::map<std::string, std::size_t> index_;
};

std::string tree_join(const HypernymTree& tree, const std::vector<std::string>& ids);

struct Concept {
  std::string name;
  std::vector<ConvexSet> properties;  // aligned with the schema
  std::set<std::string> tree_set;
};

struct Descriptors {
  std::vector<std::string> adjectives;
  std::vector<std::string> nouns;
};

// Per-noun descriptor lists: "[Noun]" headers followed by
// "adjectives = a; b" and "nouns = x; y" lines.
std::map<std::string, Descriptors> parse_descriptor_table(std::string_view text);
std::map<std::string, Descriptors> load_descriptor_table(const std::filesystem::path& path);

// Replaces every word that has a lemma entry by its head form.
Descriptors lemmatize(const Descriptors& descriptors, const CorpusTables& tables);

// Adjective-table phrases and tree labels found in sentences mentioning
// `noun`, outside negated clauses. `found` reports whether the noun occurs.
Descriptors extract_descriptors(const CorpusDoc& doc, std::string_view noun,
                                const AdjectiveValueTable& table, const HypernymTree& tree,
                                const CorpusTables& tables, bool* found = nullptr);

// Descriptors that match no table entry or tree label go to `dropped`.
Concept build_concept(const Descriptors& descriptors, const AdjectiveValueTable& table,
                      const HypernymTree& tree, const PropertySchema& schema,
                      std::vector<std::string>* dropped = nullptr);

}  // namespace aistriu
