#include "aistriu/bleu.hpp"

#include "aistriu/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace aistriu {
namespace {

constexpr double kMethod4K = 5.0;

std::map<Tokens, std::int64_t> ngram_counts(const Tokens& tokens, int n) {
  std::map<Tokens, std::int64_t> out;
  for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
    ++out[Tokens(tokens.begin() + i, tokens.begin() + i + n)];
  }
  return out;
}

double as_real(const Precision& p) {
  return static_cast<double>(p.matched) / static_cast<double>(std::max<std::int64_t>(1, p.total));
}

}  // namespace

Smoothing parse_smoothing(std::string_view text) {
  if (text == "none") return Smoothing::None;
  if (text == "method7") return Smoothing::Method7;
  if (text == "method7-legacy") return Smoothing::Method7Legacy;
  throw ParseError("unknown smoothing '" + std::string(text) + "'");
}

std::string to_string(Smoothing s) {
  switch (s) {
    case Smoothing::None: return "none";
    case Smoothing::Method7: return "method7";
    case Smoothing::Method7Legacy: return "method7-legacy";
  }
  return "?";
}

Tokens bleu_tokens(std::string_view text, const std::vector<std::string>& units) {
  Tokens tokens = raw_tokens(text);
  if (!units.empty()) tokens = merge_multiwords(tokens, units);
  for (auto& t : tokens) t = lowercase(t);
  return tokens;
}

Precision modified_precision(const Tokens& reference, const Tokens& candidate, int n) {
  if (n < 1) throw Error("n-gram order must be at least 1");
  auto cand = ngram_counts(candidate, n);
  auto ref = ngram_counts(reference, n);
  Precision p;
  for (const auto& [gram, count] : cand) {
    auto it = ref.find(gram);
    p.matched += std::min(count, it == ref.end() ? std::int64_t{0} : it->second);
    p.total += count;
  }
  return p;
}

double brevity_penalty(const Tokens& reference, const Tokens& candidate) {
  if (candidate.empty()) throw Error("empty candidate");
  const double r = static_cast<double>(reference.size());
  const double c = static_cast<double>(candidate.size());
  return c > r ? 1.0 : std::exp(1.0 - r / c);
}

BleuReport bleu(const Tokens& reference, const Tokens& candidate, Smoothing smoothing) {
  if (candidate.empty()) throw Error("empty candidate");
  BleuReport report;
  report.smoothing = smoothing;
  for (int n = 1; n <= 4; ++n) report.precisions[n - 1] = modified_precision(reference, candidate, n);
  report.brevity_penalty = brevity_penalty(reference, candidate);
  for (const auto& p : report.precisions) report.smoothed.push_back(as_real(p));
  if (report.precisions[0].matched == 0) return report;

  const double hyp_len = static_cast<double>(candidate.size());
  auto& p = report.smoothed;
  if (smoothing == Smoothing::None) {
    if (std::any_of(p.begin(), p.end(), [](double x) { return x <= 0.0; })) return report;
  } else {
    // method4: decaying substitute for zero counts.
    if (smoothing == Smoothing::Method7) {
      int incvnt = 1;
      for (std::size_t i = 0; i < p.size(); ++i) {
        if (report.precisions[i].matched == 0 && candidate.size() > 1) {
          double numerator = 1.0 / (std::pow(2.0, incvnt) * kMethod4K / std::log(hyp_len));
          p[i] = numerator / static_cast<double>(std::max<std::int64_t>(1, report.precisions[i].total));
          ++incvnt;
        }
      }
    } else {
      for (std::size_t i = 0; i < p.size(); ++i) {
        if (report.precisions[i].matched == 0) {
          p[i] = 1.0 / (static_cast<double>(i) + kMethod4K / std::log(hyp_len));
        }
      }
    }
    // method5: average with the neighbouring orders.
    std::vector<double> next = p;
    next.push_back(as_real(modified_precision(reference, candidate, 5)));
    double prev = p[0] + 1.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      p[i] = (prev + p[i] + next[i + 1]) / 3.0;
      prev = p[i];
    }
  }
  double log_sum = 0.0;
  for (double x : p) log_sum += 0.25 * std::log(x);
  report.score = report.brevity_penalty * std::exp(log_sum);
  return report;
}

}  // namespace aistriu
