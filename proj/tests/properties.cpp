#include "properties.hpp"

#include <algorithm>
#include <array>
#include <iterator>
#include <set>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>

namespace aistriu::props {
namespace {

constexpr double kTol = 1e-9;

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
double unit(std::mt19937_64& rng) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng); }

SimpleType random_simple(std::mt19937_64& rng, int zlo, int zhi) {
  return {uniform(rng, 0, 1) ? BasicType::n : BasicType::s, uniform(rng, zlo, zhi)};
}

PregroupType random_type(std::mt19937_64& rng, int len, int zlo, int zhi) {
  PregroupType t;
  for (int i = 0; i < len; ++i) t.simples.push_back(random_simple(rng, zlo, zhi));
  return t;
}

const PregroupType kSentence{{{BasicType::s, 0}}};

// Balanced sequence of m cancelling pairs.
void balanced(std::mt19937_64& rng, int m, std::vector<SimpleType>& out) {
  if (m == 0) return;
  int inside = uniform(rng, 0, m - 1);
  SimpleType x = random_simple(rng, kMinAdjointOrder, kMaxAdjointOrder - 1);
  out.push_back(x);
  balanced(rng, inside, out);
  out.push_back({x.base, x.adjoint_order + 1});
  balanced(rng, m - 1 - inside, out);
}

std::vector<PregroupType> chunk(std::mt19937_64& rng, const std::vector<SimpleType>& flat) {
  std::vector<PregroupType> words;
  for (std::size_t i = 0; i < flat.size();) {
    std::size_t len = std::min<std::size_t>(flat.size() - i, uniform(rng, 1, 3));
    words.push_back(PregroupType{{flat.begin() + i, flat.begin() + i + len}});
    i += len;
  }
  return words;
}

// Exhaustive interval oracle: does flat reduce to exactly s by contractions?
bool reduces_to_sentence(const std::vector<SimpleType>& f) {
  const std::size_t n = f.size();
  std::vector<std::vector<char>> empty(n + 1, std::vector<char>(n + 1, 0));
  for (std::size_t i = 0; i <= n; ++i) empty[i][i] = 1;
  for (std::size_t len = 2; len <= n; len += 2) {
    for (std::size_t i = 0; i + len <= n; ++i) {
      std::size_t j = i + len;
      for (std::size_t k = i + 1; k < j && !empty[i][j]; k += 2) {
        if (cancels(f[i], f[k]) && empty[i + 1][k] && empty[k + 1][j]) empty[i][j] = 1;
      }
    }
  }
  for (std::size_t p = 0; p < n; ++p) {
    if (f[p] == SimpleType{BasicType::s, 0} && empty[0][p] && empty[p + 1][n]) return true;
  }
  return false;
}

std::string show(const std::vector<PregroupType>& words) {
  std::string out;
  for (const auto& w : words) out += "[" + to_string(w) + "] ";
  return out;
}

// Dense contraction of the word tensors along the plan's pairings.
SentenceMeaning contract(const ParsedSentence& parsed, const DistribModel& model) {
  const auto& plan = parsed.plan;
  const auto& tokens = parsed.tokens;
  const std::size_t wires = plan.flat.size();
  std::vector<int> var_of(wires, -1);
  std::vector<int> range;
  auto dim = [&](std::size_t w) { return plan.flat[w].base == BasicType::s ? 25 : 5; };
  for (std::size_t w = 0; w < wires; ++w) {
    if (var_of[w] >= 0) continue;
    var_of[w] = static_cast<int>(range.size());
    range.push_back(dim(w));
    if (auto p = plan.partner(w)) var_of[*p] = var_of[w];
  }
  if (plan.residual_wires.size() != 1) throw Error("not a sentence");
  const int result_var = var_of[plan.residual_wires.front()];

  // Verbs whose sentence wire feeds a relative pronoun read relative_roles.
  std::vector<bool> in_relative(tokens.size(), false);
  for (std::size_t w = 0; w < wires; ++w) {
    const auto& ref = plan.wires[w];
    const auto& e = tokens[ref.token].entry;
    bool pronoun = e.category == Category::RelativePronounSubject ||
                   e.category == Category::RelativePronounObject;
    if (pronoun && e.roles[ref.slot] == Role::Sentence) {
      if (auto p = plan.partner(w)) in_relative[plan.wires[*p].token] = true;
    }
  }

  struct Factor {
    std::vector<int> vars;
    std::function<Rational(const std::vector<int>&)> value;
  };
  std::vector<Factor> factors;
  for (std::size_t t = 0; t < tokens.size(); ++t) {
    const auto& e = tokens[t].entry;
    const auto& roles = in_relative[t] ? e.relative_roles : e.roles;
    Factor f;
    for (std::size_t s = 0; s < roles.size(); ++s) f.vars.push_back(var_of[plan.wire_index(t, s)]);
    auto slot = [roles](Role r) {
      auto it = std::find(roles.begin(), roles.end(), r);
      if (it == roles.end()) throw Error("missing role");
      return static_cast<std::size_t>(it - roles.begin());
    };
    auto delta = [](std::size_t a, std::size_t b) {
      return [a, b](const std::vector<int>& x) { return x[a] == x[b] ? Rational(1) : Rational(0); };
    };
    switch (e.category) {
      case Category::Noun: {
        NounVector v = model.noun(e.model_key);
        std::size_t o = slot(Role::Output);
        f.value = [v, o](const std::vector<int>& x) { return v[x[o]]; };
        break;
      }
      case Category::Adjective:
      case Category::PrepositionPhrase: {
        NounVector a = e.category == Category::Adjective ? model.adjective(e.model_key) : model.noun(e.object);
        std::size_t i = slot(Role::Input), o = slot(Role::Output);
        f.value = [a, i, o](const std::vector<int>& x) { return x[i] == x[o] ? a[x[i]] : Rational(0); };
        break;
      }
      case Category::Preposition:
      case Category::Adverb:
        f.value = delta(slot(Role::Input), slot(Role::Output));
        break;
      case Category::TransitiveVerb:
      case Category::Copula: {
        VerbMatrix m = model.verb(e.model_key);
        std::size_t su = slot(Role::Subject), se = slot(Role::Sentence), ob = slot(Role::Object);
        f.value = [m, su, se, ob](const std::vector<int>& x) {
          int a = x[se] / 5, b = x[se] % 5;
          return a == x[su] && b == x[ob] ? m.weight(a, b) : Rational(0);
        };
        break;
      }
      case Category::RelativePronounSubject:
      case Category::RelativePronounObject: {
        std::size_t h = slot(Role::Head), o = slot(Role::Output), g = slot(Role::Argument);
        f.value = [h, o, g](const std::vector<int>& x) {
          return x[h] == x[o] && x[o] == x[g] ? Rational(1) : Rational(0);
        };
        break;
      }
      default:
        throw Error("no tensor for category " + to_string(e.category));
    }
    factors.push_back(std::move(f));
  }

  const int nvars = static_cast<int>(range.size());
  std::vector<std::vector<std::size_t>> ready(nvars);
  for (std::size_t k = 0; k < factors.size(); ++k) {
    ready[*std::max_element(factors[k].vars.begin(), factors[k].vars.end())].push_back(k);
  }
  std::vector<int> assign(nvars, 0);
  SentenceMeaning out;
  std::vector<int> local;
  std::function<void(int, Rational)> dfs = [&](int v, Rational acc) {
    if (v == nvars) {
      out.add(assign[result_var] / 5, assign[result_var] % 5, acc);
      return;
    }
    for (int x = 0; x < range[v]; ++x) {
      assign[v] = x;
      Rational val = acc;
      for (auto k : ready[v]) {
        std::vector<int> args;
        for (int var : factors[k].vars) args.push_back(assign[var]);
        val *= factors[k].value(args);
        if (val == Rational(0)) break;
      }
      if (val != Rational(0)) dfs(v + 1, val);
    }
  };
  dfs(0, Rational(1));
  return out;
}

std::vector<Point> lattice(const std::vector<Point>& gens, int steps) {
  std::vector<Point> out;
  const std::size_t k = gens.size();
  const std::size_t d = gens.front().size();
  std::vector<int> w(k, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i + 1 == k) {
      w[i] = left;
      Point p(d, 0.0);
      for (std::size_t g = 0; g < k; ++g) {
        for (std::size_t c = 0; c < d; ++c) p[c] += gens[g][c] * w[g] / steps;
      }
      out.push_back(p);
      return;
    }
    for (int a = 0; a <= left; ++a) {
      w[i] = a;
      rec(i + 1, left - a);
    }
  };
  rec(0, steps);
  return out;
}

double directed_sampled(const std::vector<Point>& from, const std::vector<Point>& to) {
  double sup = 0.0;
  for (const auto& p : from) {
    double inf = INFINITY;
    for (const auto& q : to) inf = std::min(inf, l1_distance(p, q));
    sup = std::max(sup, inf);
  }
  return sup;
}

std::vector<double> grid_1d(const ConvexSet& s, const Property& p) {
  auto v = s.vertices(p);
  double lo = INFINITY, hi = -INFINITY;
  for (const auto& x : v) {
    lo = std::min(lo, x[0]);
    hi = std::max(hi, x[0]);
  }
  std::vector<double> out{lo, hi};
  for (double x = std::ceil(lo * 100.0) / 100.0; x < hi; x += 0.01) out.push_back(x);
  return out;
}

double directed_1d(const std::vector<double>& from, const std::vector<double>& to) {
  double sup = 0.0;
  for (double x : from) {
    double inf = INFINITY;
    for (double y : to) inf = std::min(inf, std::abs(x - y));
    sup = std::max(sup, inf);
  }
  return sup;
}

Point random_in(std::mt19937_64& rng, const Property& p) {
  if (p.dimension == 1) return {std::round(unit(rng) * 1000.0) / 1000.0};
  std::vector<double> w(p.domain.size());
  double total = 0.0;
  for (auto& x : w) total += (x = -std::log(1.0 - unit(rng)));
  Point out(p.dimension, 0.0);
  for (std::size_t g = 0; g < w.size(); ++g) {
    for (std::size_t c = 0; c < p.dimension; ++c) out[c] += p.domain[g][c] * w[g] / total;
  }
  return out;
}

ConvexSet random_set(std::mt19937_64& rng, const Property& p, int max_gens, bool allow_full) {
  if (allow_full && uniform(rng, 0, 3) == 0) return ConvexSet::full();
  std::vector<Point> gens;
  int k = uniform(rng, 1, max_gens);
  for (int i = 0; i < k; ++i) {
    // Occasionally reuse a domain vertex so corners are exercised.
    gens.push_back(uniform(rng, 0, 4) == 0 ? p.domain[uniform(rng, 0, int(p.domain.size()) - 1)]
                                           : random_in(rng, p));
  }
  return ConvexSet::hull(gens).canonical(p);
}

}  // namespace

Concept random_concept(std::mt19937_64& rng, const PropertySchema& schema, const HypernymTree& tree) {
  Concept c;
  for (const auto& p : schema.properties()) c.properties.push_back(random_set(rng, p, 3, true));
  std::vector<std::string> picks;
  int k = uniform(rng, 0, 3);
  for (int i = 0; i < k; ++i) picks.push_back(tree.nodes()[uniform(rng, 0, int(tree.nodes().size()) - 1)].id);
  c.tree_set = tree.up_closure(picks);
  return c;
}

Outcome pregroup_invariants(int count, std::uint64_t seed) {
  Outcome o{"pregroup round trips, planarity and soundness"};
  std::mt19937_64 rng(seed);
  for (int i = 0; i < count; ++i) {
    auto t = random_type(rng, uniform(rng, 1, 5), -1, 1);
    auto l = adjoint(t, Side::Left);
    auto r = adjoint(t, Side::Right);
    if (adjoint(l, Side::Right) != t || adjoint(r, Side::Left) != t) o.fail("adjoint round trip of " + to_string(t));
    for (std::size_t k = 0; k < t.simples.size(); ++k) {
      const auto& x = t.simples[k];
      const auto& xl = l.simples[t.simples.size() - 1 - k];
      const auto& xr = r.simples[t.simples.size() - 1 - k];
      if (!cancels(xl, x) || !cancels(x, xr)) o.fail("adjoint does not cancel in " + to_string(t));
    }
    auto wide = random_type(rng, uniform(rng, 1, 5), kMinAdjointOrder, kMaxAdjointOrder);
    if (parse_type(to_string(wide)) != wide) o.fail("print/parse round trip of " + to_string(wide));

    std::vector<SimpleType> flat;
    balanced(rng, uniform(rng, 0, 4), flat);
    flat.push_back(kSentence.simples.front());
    balanced(rng, uniform(rng, 0, 4), flat);
    auto words = chunk(rng, flat);
    try {
      auto plan = reduce(words);
      if (!is_planar(plan.pairings)) o.fail("non-planar reduction of " + show(words));
      if (apply_pairings(plan.flat, plan.pairings) != kSentence) o.fail("unsound reduction of " + show(words));
    } catch (const std::exception& e) {
      o.fail("reducible sequence rejected: " + show(words) + e.what());
    }

    auto shortseq = chunk(rng, random_type(rng, uniform(rng, 1, 8), kMinAdjointOrder, kMaxAdjointOrder).simples);
    auto joined = concat(shortseq).simples;
    auto found = find_reduction(shortseq, kSentence);
    if (found.has_value() != reduces_to_sentence(joined)) o.fail("oracle disagrees on " + show(shortseq));
    if (found && (!is_planar(found->pairings) || apply_pairings(found->flat, found->pairings) != kSentence)) {
      o.fail("invalid plan for " + show(shortseq));
    }
    o.cases += 3;
  }
  return o;
}

Outcome tensor_oracle(const FixtureData& data) {
  Outcome o{"tensor-network oracle equals structured evaluation"};
  for (const auto& [sentence, lang] : fixture_sentences()) {
    try {
      auto parsed = parse_sentence(sentence, lang, data.lexicon(lang));
      auto structured = evaluate(parsed.plan, parsed.tokens, data.model(lang));
      auto dense = contract(parsed, data.model(lang));
      if (!(dense == structured)) {
        o.fail(sentence + ": oracle " + to_string(dense) + " vs " + to_string(structured));
      }
    } catch (const std::exception& e) {
      o.fail(sentence + ": " + e.what());
    }
    ++o.cases;
  }
  return o;
}

Outcome metric_axioms(const FixtureData& data, int random_concepts, std::uint64_t seed) {
  Outcome o{"metric symmetry and triangle inequality"};
  auto concepts = fixture_concepts(data, Language::English, false);
  for (auto& c : fixture_concepts(data, Language::Irish, false)) concepts.push_back(c);
  std::mt19937_64 rng(seed);
  for (int i = 0; i < random_concepts; ++i) {
    concepts.push_back(random_concept(rng, data.schema, data.tree_en));
    concepts.back().name = "random" + std::to_string(i);
  }
  const std::size_t n = concepts.size();
  std::vector<std::vector<double>> d(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) d[i][j] = concept_distance(concepts[i], concepts[j], data.schema, data.tree_en).total;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(d[i][i]) > kTol) o.fail("d(c, c) != 0 for " + concepts[i].name);
    for (std::size_t j = 0; j < n; ++j) {
      if (d[i][j] < -kTol) o.fail("negative distance");
      if (std::abs(d[i][j] - d[j][i]) > kTol) o.fail("asymmetric: " + concepts[i].name + ", " + concepts[j].name);
      for (std::size_t k = 0; k < n; ++k) {
        if (d[i][k] > d[i][j] + d[j][k] + kTol) {
          o.fail("triangle: " + concepts[i].name + ", " + concepts[j].name + ", " + concepts[k].name);
        }
        ++o.cases;
      }
    }
  }
  return o;
}

Outcome hausdorff_grid(const FixtureData& data, int cases, std::uint64_t seed) {
  Outcome o{"Hausdorff grid oracle (tolerance 0.02)"};
  const double tol = 0.02;
  std::mt19937_64 rng(seed);
  const auto& schema = data.schema;
  std::vector<const Property*> ones, threes;
  for (const auto& p : schema.properties()) (p.dimension == 1 ? ones : threes).push_back(&p);
  for (int i = 0; i < cases; ++i) {
    const Property& p = *ones[uniform(rng, 0, int(ones.size()) - 1)];
    auto x = random_set(rng, p, 3, true);
    auto y = random_set(rng, p, 3, true);
    auto gx = grid_1d(x, p), gy = grid_1d(y, p);
    double oracle = std::max(directed_1d(gx, gy), directed_1d(gy, gx));
    double got = hausdorff(x, y, p);
    if (std::abs(oracle - got) > tol) {
      std::ostringstream s;
      s << p.name << ": grid " << oracle << " vs " << got;
      o.fail(s.str());
    }
    ++o.cases;
  }
  for (int i = 0; i < cases / 4; ++i) {
    const Property& p = *threes[uniform(rng, 0, int(threes.size()) - 1)];
    auto x = random_set(rng, p, 3, false);
    auto y = random_set(rng, p, 3, false);
    auto coarse_x = lattice(x.vertices(p), 10), fine_x = lattice(x.vertices(p), 150);
    auto coarse_y = lattice(y.vertices(p), 10), fine_y = lattice(y.vertices(p), 150);
    double oracle = std::max(directed_sampled(coarse_x, fine_y), directed_sampled(coarse_y, fine_x));
    double got = hausdorff(x, y, p);
    if (std::abs(oracle - got) > tol) {
      std::ostringstream s;
      s << p.name << ": lattice " << oracle << " vs " << got;
      o.fail(s.str());
    }
    ++o.cases;
  }
  return o;
}

Outcome product_grid(int cases, std::uint64_t seed) {
  Outcome o{"joint product grid vs per-property sum (tolerance 0.02)"};
  const double tol = 0.02;
  std::mt19937_64 rng(seed);
  Property p{"unit", 1, {{0.0}, {1.0}}, {}};
  for (int i = 0; i < cases; ++i) {
    std::array<ConvexSet, 2> x{random_set(rng, p, 2, true), random_set(rng, p, 2, true)};
    std::array<ConvexSet, 2> y{random_set(rng, p, 2, true), random_set(rng, p, 2, true)};
    std::array<std::vector<double>, 2> gx{grid_1d(x[0], p), grid_1d(x[1], p)};
    std::array<std::vector<double>, 2> gy{grid_1d(y[0], p), grid_1d(y[1], p)};
    // Brute force over the joint grid; the L1 infimum over a product grid
    // splits into per-axis minima.
    auto joint = [](const std::array<std::vector<double>, 2>& from, const std::array<std::vector<double>, 2>& to) {
      std::array<std::vector<double>, 2> near;
      for (int a = 0; a < 2; ++a) {
        for (double v : from[a]) {
          double best = INFINITY;
          for (double w : to[a]) best = std::min(best, std::abs(v - w));
          near[a].push_back(best);
        }
      }
      double sup = 0.0;
      for (double u : near[0]) {
        for (double v : near[1]) sup = std::max(sup, u + v);
      }
      return sup;
    };
    double xy = joint(gx, gy), yx = joint(gy, gx);
    double sum_xy = directed_1d(gx[0], gy[0]) + directed_1d(gx[1], gy[1]);
    double sum_yx = directed_1d(gy[0], gx[0]) + directed_1d(gy[1], gx[1]);
    double per_property = hausdorff(x[0], y[0], p) + hausdorff(x[1], y[1], p);
    if (std::abs(xy - sum_xy) > tol || std::abs(yx - sum_yx) > tol) o.fail("directed joint term differs from sum");
    if (std::max(xy, yx) > per_property + tol) o.fail("per-property sum is not an upper bound");
    ++o.cases;
  }
  return o;
}

Outcome join_semilattice(const HypernymTree& tree, int triples, std::uint64_t seed) {
  Outcome o{"tree_join semilattice laws"};
  std::mt19937_64 rng(seed);
  const auto& nodes = tree.nodes();
  auto pick = [&] { return nodes[uniform(rng, 0, int(nodes.size()) - 1)].id; };
  auto depth = [&](const std::string& id) { return tree.path_to_root(id).size(); };
  for (int i = 0; i < triples; ++i) {
    auto a = pick(), b = pick(), c = pick();
    auto ab = tree_join(tree, {a, b});
    if (ab != tree_join(tree, {b, a})) o.fail("not commutative: " + a + ", " + b);
    if (tree_join(tree, {ab, c}) != tree_join(tree, {a, tree_join(tree, {b, c})}) ||
        tree_join(tree, {ab, c}) != tree_join(tree, {a, b, c})) {
      o.fail("not associative: " + a + ", " + b + ", " + c);
    }
    if (tree_join(tree, {a, a}) != a || tree_join(tree, {a}) != a) o.fail("not idempotent: " + a);
    auto abc = tree_join(tree, {a, b, c});
    std::set<std::string> common = tree.up_closure({a});
    for (const auto& s : {b, c}) {
      auto up = tree.up_closure({s});
      std::set<std::string> keep;
      std::set_intersection(common.begin(), common.end(), up.begin(), up.end(), std::inserter(keep, keep.end()));
      common = keep;
    }
    std::string deepest = *std::max_element(common.begin(), common.end(), [&](const auto& x, const auto& y) {
      return depth(x) < depth(y);
    });
    if (abc != deepest) o.fail("join of " + a + ", " + b + ", " + c + " is not the lowest common ancestor");
    ++o.cases;
  }
  return o;
}

Outcome concept_invariants(const FixtureData& data, int cases, std::uint64_t seed) {
  Outcome o{"concept up-closure, idempotence and monotonicity"};
  std::mt19937_64 rng(seed);
  for (auto lang : {Language::English, Language::Irish}) {
    const auto& table = lang == Language::English ? data.adjectives_en : data.adjectives_ga;
    const auto& tree = lang == Language::English ? data.tree_en : data.tree_ga;
    std::vector<std::string> labels;
    for (const auto& n : tree.nodes()) labels.insert(labels.end(), n.labels.begin(), n.labels.end());
    for (int i = 0; i < cases; ++i) {
      Descriptors d;
      for (int k = uniform(rng, 0, 4); k > 0; --k) d.adjectives.push_back(table.entries[uniform(rng, 0, int(table.entries.size()) - 1)].pattern);
      for (int k = uniform(rng, 0, 3); k > 0; --k) d.nouns.push_back(labels[uniform(rng, 0, int(labels.size()) - 1)]);
      auto c1 = build_concept(d, table, tree, data.schema);
      auto c2 = build_concept(d, table, tree, data.schema);
      const auto& props = data.schema.properties();
      for (std::size_t p = 0; p < props.size(); ++p) {
        if (!c1.properties[p].same_set(c2.properties[p], props[p])) o.fail("construction not idempotent");
      }
      if (!c1.tree_set.count(tree.root())) o.fail("tree set misses the root");
      for (const auto& id : c1.tree_set) {
        const auto& parent = tree.node(id).parent;
        if (!parent.empty() && !c1.tree_set.count(parent)) o.fail("tree set not up-closed at " + id);
      }
      auto more = d;
      if (uniform(rng, 0, 1)) {
        more.adjectives.push_back(table.entries[uniform(rng, 0, int(table.entries.size()) - 1)].pattern);
      } else {
        more.nouns.push_back(labels[uniform(rng, 0, int(labels.size()) - 1)]);
      }
      auto c3 = build_concept(more, table, tree, data.schema);
      for (std::size_t p = 0; p < props.size(); ++p) {
        if (c1.properties[p].is_full()) continue;  // unmentioned properties start as the whole domain
        for (const auto& v : c1.properties[p].vertices(props[p])) {
          if (!c3.properties[p].contains(v, props[p])) o.fail("adding a descriptor shrank " + props[p].name);
        }
      }
      if (!std::includes(c3.tree_set.begin(), c3.tree_set.end(), c1.tree_set.begin(), c1.tree_set.end())) {
        o.fail("adding a descriptor shrank the tree set");
      }
      ++o.cases;
    }
  }
  return o;
}

}  // namespace aistriu::props
