#pragma once

#include "aistriu/concepts.hpp"

#include <string>
#include <utility>
#include <vector>

namespace aistriu {

struct DistanceReport {
  std::vector<std::pair<std::string, double>> properties;  // schema order
  long tree_distance = 0;
  double total = 0.0;
};

// Hausdorff distance under the L1 ground metric within one property.
double hausdorff(const ConvexSet& x, const ConvexSet& y, const Property& property);

// max(|A \ B|, |B \ A|). Both sets must be node sets of `tree`.
long tree_set_distance(const std::set<std::string>& a, const std::set<std::string>& b,
                       const HypernymTree& tree);

DistanceReport concept_distance(const Concept& a, const Concept& b, const PropertySchema& schema,
                                const HypernymTree& tree);

struct RankedCandidate {
  std::string name;
  double distance = 0.0;
  bool tied = false;  // shares its distance with another candidate
};

// Candidates by ascending distance, ties ordered by name.
std::vector<RankedCandidate> translate_noun(const Concept& query,
                                            const std::vector<Concept>& candidates,
                                            const PropertySchema& schema,
                                            const HypernymTree& tree);

}  // namespace aistriu
