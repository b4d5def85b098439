#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace aistriu {

using Rational = boost::rational<std::int64_t>;

enum class Language { English, Irish };

Language parse_language(std::string_view code);
std::string language_code(Language lang);

// Base for all domain errors. The CLI maps these to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

// Lowercases ASCII and the Latin-1 accented capitals used by Irish.
std::string lowercase(std::string_view text);

// Lookup key: lowercase, hyphens read as spaces, runs of spaces collapsed.
std::string canonical_key(std::string_view text);

std::string trim(std::string_view text);
std::vector<std::string> split_ws(std::string_view text);
std::vector<std::string> split(std::string_view text, char sep);
std::string join(const std::vector<std::string>& parts, std::string_view sep);

// Parses "3", "-2", "3/4" or "0.25" into an exact rational.
Rational parse_rational(std::string_view text);
// Parses the same forms into a double.
double parse_real(std::string_view text);
double to_double(const Rational& r);

std::string read_file(const std::filesystem::path& path);

// Fixture directory: $AISTRIU_DATA_DIR when set, else the build-time default.
std::filesystem::path data_dir();

}  // namespace aistriu
