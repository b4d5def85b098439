#include "aistriu/common.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#ifndef AISTRIU_DEFAULT_DATA_DIR
#define AISTRIU_DEFAULT_DATA_DIR "data"
#endif

namespace aistriu {

Language parse_language(std::string_view code) {
  std::string c = lowercase(code);
  if (c == "en" || c == "english") return Language::English;
  if (c == "ga" || c == "irish") return Language::Irish;
  throw ParseError("unknown language '" + std::string(code) + "'");
}

std::string language_code(Language lang) {
  return lang == Language::English ? "en" : "ga";
}

std::string lowercase(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    auto c = static_cast<unsigned char>(text[i]);
    if (c >= 'A' && c <= 'Z') {
      out.push_back(static_cast<char>(c - 'A' + 'a'));
    } else if (c == 0xC3 && i + 1 < text.size()) {
      // U+00C0..U+00DE (except U+00D7) map to U+00E0..U+00FE.
      auto d = static_cast<unsigned char>(text[i + 1]);
      if (d >= 0x80 && d <= 0x9E && d != 0x97) d += 0x20;
      out.push_back(static_cast<char>(c));
      out.push_back(static_cast<char>(d));
      ++i;
    } else {
      out.push_back(static_cast<char>(c));
    }
  }
  return out;
}

std::string canonical_key(std::string_view text) {
  std::string lower = lowercase(text);
  std::string out;
  bool pending_space = false;
  for (char c : lower) {
    if (c == '-' || c == ' ' || c == '\t') {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.push_back(c);
  }
  return out;
}

std::string trim(std::string_view text) {
  const char* ws = " \t\r\n";
  auto b = text.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = text.find_last_not_of(ws);
  return std::string(text.substr(b, e - b + 1));
}

std::vector<std::string> split_ws(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto pos = text.find(sep, start);
    out.push_back(trim(text.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

Rational parse_rational(std::string_view text) {
  std::string t = trim(text);
  if (t.empty()) throw ParseError("empty number");
  try {
    if (auto slash = t.find('/'); slash != std::string::npos) {
      std::size_t used = 0;
      std::int64_t num = std::stoll(t.substr(0, slash), &used);
      if (used != slash) throw ParseError("bad number '" + t + "'");
      std::string den_text = t.substr(slash + 1);
      std::int64_t den = std::stoll(den_text, &used);
      if (used != den_text.size() || den == 0) throw ParseError("bad number '" + t + "'");
      return Rational(num, den);
    }
    auto dot = t.find('.');
    std::string digits = t;
    std::int64_t den = 1;
    if (dot != std::string::npos) {
      std::string frac = t.substr(dot + 1);
      digits = t.substr(0, dot) + frac;
      for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    }
    std::size_t used = 0;
    std::int64_t num = std::stoll(digits, &used);
    if (used != digits.size()) throw ParseError("bad number '" + t + "'");
    return Rational(num, den);
  } catch (const std::logic_error&) {
    throw ParseError("bad number '" + t + "'");
  }
}

double parse_real(std::string_view text) { return to_double(parse_rational(text)); }

double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::filesystem::path data_dir() {
  if (const char* env = std::getenv("AISTRIU_DATA_DIR"); env && *env) return env;
  return AISTRIU_DEFAULT_DATA_DIR;
}

}  // namespace aistriu
