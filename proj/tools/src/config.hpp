// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "chronop/exact.hpp"

namespace chronop::cli {

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Plain-text experiment definition:
///
///   # comment
///   [section]
///   key = value
///
/// Keys are addressed as "section.key". Values stay raw strings until a
/// typed accessor pulls them; trailing '#' comments are stripped.
class Config {
  public:
    static Config parse_file(const std::string& path);
    static Config parse_string(const std::string& text, const std::string& origin);

    bool has(const std::string& key) const { return entries_.count(key) != 0; }
    const std::map<std::string, std::string>& entries() const { return entries_; }

    /// Directory of the config file, for resolving relative paths.
    const std::string& base_dir() const { return base_dir_; }

    std::string get_string(const std::string& key) const;
    long get_int(const std::string& key) const;
    double get_double(const std::string& key) const;
    bool get_bool(const std::string& key) const;
    Rational get_rational(const std::string& key) const;
    std::vector<double> get_double_list(const std::string& key) const;

    std::string get_string_or(const std::string& key, const std::string& fallback) const;
    long get_int_or(const std::string& key, long fallback) const;
    double get_double_or(const std::string& key, double fallback) const;
    bool get_bool_or(const std::string& key, bool fallback) const;
    Rational get_rational_or(const std::string& key, const Rational& fallback) const;

  private:
    std::map<std::string, std::string> entries_;
    std::string base_dir_;
};

/// Value kinds a schema can require.
enum class KeyKind { string_, int_, double_, bool_, rational_, double_list };

struct KeySpec {
    const char* key;
    KeyKind kind;
    bool required;
};

/// Rejects unknown keys, missing required keys and unparsable values —
/// all before a command produces any output.
void validate_config(const Config& config, const std::vector<KeySpec>& schema);

}  // namespace chronop::cli
