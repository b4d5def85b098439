#pragma once

#include "aistriu/bleu.hpp"
#include "aistriu/concepts.hpp"
#include "aistriu/distrib.hpp"
#include "aistriu/metric.hpp"

#include <json.hpp>

namespace aistriu {

using Json = nlohmann::json;

// Concept layout: {"name", "properties": {prop: "full" | [[x..], ..]}, "tree_set": [ids]}.
Json concept_to_json(const Concept& c, const PropertySchema& schema);
Concept concept_from_json(const Json& j, const PropertySchema& schema);

Json distance_to_json(const DistanceReport& r);
Json ranking_to_json(const std::vector<RankedCandidate>& ranking);
Json bleu_to_json(const BleuReport& r);
// {"coefficients": [[i, j, "num/den"], ..], "text": "{(2,1):320}"} with 1-based indices.
Json meaning_to_json(const SentenceMeaning& m);
Json rational_to_json(const Rational& r);

}  // namespace aistriu
