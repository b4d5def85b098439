#pragma once

#include "aistriu/reproduce.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace aistriu::props {

struct Outcome {
  std::string name;
  bool pass = true;
  std::size_t cases = 0;
  std::string detail;  // first counterexample, if any

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

inline constexpr std::uint64_t kSeed = 20240611;

// Adjoint round trips, parse/print round trips, and reductions of random
// planar-reducible sequences, plus agreement with an exhaustive interval
// oracle on short random sequences.
Outcome pregroup_invariants(int count, std::uint64_t seed = kSeed);

// Dense tensor-network contraction of every fixture sentence against the
// structured evaluator.
Outcome tensor_oracle(const FixtureData& data);

// Symmetry and triangle inequality over the ten fixture concepts and random ones.
Outcome metric_axioms(const FixtureData& data, int random_concepts, std::uint64_t seed = kSeed);

// Hausdorff distances against grid and lattice brute force.
Outcome hausdorff_grid(const FixtureData& data, int cases, std::uint64_t seed = kSeed);

// Joint-space Hausdorff of product sets against the per-property sum.
Outcome product_grid(int cases, std::uint64_t seed = kSeed);

// Commutativity, associativity and idempotence of tree_join; the join is the
// deepest common ancestor.
Outcome join_semilattice(const HypernymTree& tree, int triples, std::uint64_t seed = kSeed);

// Concept invariants: up-closed tree sets, idempotent and monotone construction.
Outcome concept_invariants(const FixtureData& data, int cases, std::uint64_t seed = kSeed);

// Random concept over the schema and tree.
Concept random_concept(std::mt19937_64& rng, const PropertySchema& schema, const HypernymTree& tree);

}  // namespace aistriu::props
