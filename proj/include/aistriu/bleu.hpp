#pragma once

#include "aistriu/common.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace aistriu {

using Tokens = std::vector<std::string>;

// Method7 follows the current reference implementation; Method7Legacy keeps
// the older method4 substitute 1 / (i + k / ln |C|) used by NLTK up to 3.4.
enum class Smoothing { None, Method7, Method7Legacy };

Smoothing parse_smoothing(std::string_view text);
std::string to_string(Smoothing s);

struct Precision {
  std::int64_t matched = 0;
  std::int64_t total = 0;

  Rational value() const { return total == 0 ? Rational(0) : Rational(matched, total); }
};

struct BleuReport {
  std::array<Precision, 4> precisions;
  std::vector<double> smoothed;  // p_1..p_4 after smoothing
  double brevity_penalty = 1.0;
  double score = 0.0;
  Smoothing smoothing = Smoothing::None;
};

// Lowercased, punctuation-stripped tokens; `units` are merged when given.
Tokens bleu_tokens(std::string_view text, const std::vector<std::string>& units = {});

Precision modified_precision(const Tokens& reference, const Tokens& candidate, int n);
double brevity_penalty(const Tokens& reference, const Tokens& candidate);
BleuReport bleu(const Tokens& reference, const Tokens& candidate,
                Smoothing smoothing = Smoothing::Method7);

}  // namespace aistriu
