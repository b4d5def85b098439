#include "aistriu/metric.hpp"

#include <algorithm>
#include <cmath>

namespace aistriu {
namespace {

constexpr double kTieTol = 1e-9;

double directed(const std::vector<Point>& from, const std::vector<Point>& to) {
  double d = 0.0;
  for (const auto& p : from) d = std::max(d, l1_distance_to_hull(p, to));
  return d;
}

}  // namespace

double hausdorff(const ConvexSet& x, const ConvexSet& y, const Property& property) {
  if (x.is_full() && y.is_full()) return 0.0;
  auto xs = x.vertices(property);
  auto ys = y.vertices(property);
  return std::max(directed(xs, ys), directed(ys, xs));
}

long tree_set_distance(const std::set<std::string>& a, const std::set<std::string>& b,
                       const HypernymTree& tree) {
  long only_a = 0;
  long only_b = 0;
  for (const auto& id : a) {
    if (!tree.contains(id)) throw Error("node '" + id + "' is not in the tree");
    if (!b.count(id)) ++only_a;
  }
  for (const auto& id : b) {
    if (!tree.contains(id)) throw Error("node '" + id + "' is not in the tree");
    if (!a.count(id)) ++only_b;
  }
  return std::max(only_a, only_b);
}

DistanceReport concept_distance(const Concept& a, const Concept& b, const PropertySchema& schema,
                                const HypernymTree& tree) {
  const auto& props = schema.properties();
  if (a.properties.size() != props.size() || b.properties.size() != props.size()) {
    throw Error("concept does not match the property schema");
  }
  DistanceReport r;
  for (std::size_t i = 0; i < props.size(); ++i) {
    double d = hausdorff(a.properties[i], b.properties[i], props[i]);
    r.properties.emplace_back(props[i].name, d);
    r.total += d;
  }
  r.tree_distance = tree_set_distance(a.tree_set, b.tree_set, tree);
  r.total += static_cast<double>(r.tree_distance);
  return r;
}

std::vector<RankedCandidate> translate_noun(const Concept& query,
                                            const std::vector<Concept>& candidates,
                                            const PropertySchema& schema,
                                            const HypernymTree& tree) {
  if (candidates.empty()) throw Error("no candidate concepts");
  std::vector<RankedCandidate> out;
  for (const auto& c : candidates) {
    out.push_back({c.name, concept_distance(query, c, schema, tree).total, false});
  }
  std::sort(out.begin(), out.end(), [](const RankedCandidate& x, const RankedCandidate& y) {
    if (std::abs(x.distance - y.distance) > kTieTol) return x.distance < y.distance;
    return x.name < y.name;
  });
  for (std::size_t i = 0; i + 1 < out.size(); ++i) {
    if (std::abs(out[i].distance - out[i + 1].distance) <= kTieTol) {
      out[i].tied = out[i + 1].tied = true;
    }
  }
  return out;
}

}  // namespace aistriu
