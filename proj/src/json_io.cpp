#include "aistriu/json_io.hpp"

namespace aistriu {

Json concept_to_json(const Concept& c, const PropertySchema& schema) {
  const auto& props = schema.properties();
  if (c.properties.size() != props.size()) throw Error("concept does not match the property schema");
  Json properties = Json::object();
  for (std::size_t i = 0; i < props.size(); ++i) {
    if (c.properties[i].is_full()) {
      properties[props[i].name] = "full";
    } else {
      properties[props[i].name] = c.properties[i].generators();
    }
  }
  return Json{{"name", c.name}, {"properties", properties}, {"tree_set", c.tree_set}};
}

Concept concept_from_json(const Json& j, const PropertySchema& schema) {
  try {
    Concept c;
    c.name = j.value("name", "");
    const Json props = j.value("properties", Json::object());
    for (const auto& p : schema.properties()) {
      if (!props.contains(p.name)) {
        c.properties.push_back(ConvexSet::full());
        continue;
      }
      const auto& v = props.at(p.name);
      if (v.is_string()) {
        if (v.get<std::string>() != "full") throw ParseError("property " + p.name + ": expected \"full\"");
        c.properties.push_back(ConvexSet::full());
        continue;
      }
      auto gens = v.get<std::vector<Point>>();
      for (const auto& g : gens) {
        if (g.size() != p.dimension) throw ParseError("property " + p.name + ": wrong point dimension");
        if (!ConvexSet::full().contains(g, p)) throw ParseError("property " + p.name + ": point outside domain");
      }
      c.properties.push_back(ConvexSet::hull(std::move(gens)).canonical(p));
    }
    for (const auto& [key, _] : props.items()) schema.index(key);
    c.tree_set = j.at("tree_set").get<std::set<std::string>>();
    return c;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("concept JSON: ") + e.what());
  } catch (const ConfigError& e) {
    throw ParseError(std::string("concept JSON: ") + e.what());
  }
}

Json distance_to_json(const DistanceReport& r) {
  Json props = Json::object();
  for (const auto& [name, d] : r.properties) props[name] = d;
  return Json{{"properties", props}, {"tree_distance", r.tree_distance}, {"total", r.total}};
}

Json ranking_to_json(const std::vector<RankedCandidate>& ranking) {
  Json out = Json::array();
  for (const auto& c : ranking) {
    out.push_back(Json{{"name", c.name}, {"distance", c.distance}, {"tied", c.tied}});
  }
  return out;
}

Json bleu_to_json(const BleuReport& r) {
  Json precisions = Json::array();
  for (const auto& p : r.precisions) precisions.push_back(Json{{"matched", p.matched}, {"total", p.total}});
  return Json{{"precisions", precisions},
              {"smoothed", r.smoothed},
              {"brevity_penalty", r.brevity_penalty},
              {"score", r.score},
              {"smoothing", to_string(r.smoothing)}};
}

Json rational_to_json(const Rational& r) {
  if (r.denominator() == 1) return r.numerator();
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Json meaning_to_json(const SentenceMeaning& m) {
  Json coeffs = Json::array();
  for (const auto& [ij, v] : m.coeffs) {
    coeffs.push_back(Json::array({ij.first + 1, ij.second + 1, rational_to_json(v)}));
  }
  return Json{{"coefficients", coeffs}, {"text", to_string(m)}};
}

}  // namespace aistriu
