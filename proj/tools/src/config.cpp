// SPDX-License-Identifier: Apache-2.0
#include "config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace chronop::cli {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

}  // namespace

Config Config::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    Config c = parse_string(buf.str(), path);
    c.base_dir_ = std::filesystem::path(path).parent_path().string();
    if (c.base_dir_.empty()) c.base_dir_ = ".";
    return c;
}

Config Config::parse_string(const std::string& text, const std::string& origin) {
    Config c;
    c.base_dir_ = ".";
    std::istringstream in(text);
    std::string line, section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConfigError(origin + ":" + std::to_string(lineno) +
                                  ": unterminated section header");
            section = trim(line.substr(1, line.size() - 2));
            if (section.empty())
                throw ConfigError(origin + ":" + std::to_string(lineno) +
                                  ": empty section name");
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(origin + ":" + std::to_string(lineno) +
                              ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            throw ConfigError(origin + ":" + std::to_string(lineno) + ": empty key");
        const std::string full = section.empty() ? key : section + "." + key;
        if (!c.entries_.emplace(full, value).second)
            throw ConfigError(origin + ":" + std::to_string(lineno) +
                              ": duplicate key " + full);
    }
    return c;
}

std::string Config::get_string(const std::string& key) const {
    auto it = entries_.find(key);
    if (it == entries_.end()) throw ConfigError("missing config key: " + key);
    return it->second;
}

long Config::get_int(const std::string& key) const {
    const std::string v = get_string(key);
    long out = 0;
    const auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || p != v.data() + v.size())
        throw ConfigError("key " + key + ": expected integer, got \"" + v + "\"");
    return out;
}

double Config::get_double(const std::string& key) const {
    const std::string v = get_string(key);
    try {
        std::size_t used = 0;
        const double out = std::stod(v, &used);
        if (used != v.size()) throw std::invalid_argument(v);
        return out;
    } catch (const std::exception&) {
        throw ConfigError("key " + key + ": expected number, got \"" + v + "\"");
    }
}

bool Config::get_bool(const std::string& key) const {
    std::string v = get_string(key);
    std::transform(v.begin(), v.end(), v.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    if (v == "true" || v == "on" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "off" || v == "0" || v == "no") return false;
    throw ConfigError("key " + key + ": expected boolean, got \"" + v + "\"");
}

Rational Config::get_rational(const std::string& key) const {
    try {
        return parse_rational(get_string(key));
    } catch (const std::invalid_argument& e) {
        throw ConfigError("key " + key + ": " + e.what());
    }
}

std::vector<double> Config::get_double_list(const std::string& key) const {
    const std::string v = get_string(key);
    std::vector<double> out;
    std::istringstream in(v);
    std::string item;
    while (std::getline(in, item, ',')) {
        item = trim(item);
        try {
            std::size_t used = 0;
            const double d = std::stod(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            out.push_back(d);
        } catch (const std::exception&) {
            throw ConfigError("key " + key + ": bad list element \"" + item + "\"");
        }
    }
    if (out.empty()) throw ConfigError("key " + key + ": empty list");
    return out;
}

std::string Config::get_string_or(const std::string& key,
                                  const std::string& fallback) const {
    return has(key) ? get_string(key) : fallback;
}
long Config::get_int_or(const std::string& key, long fallback) const {
    return has(key) ? get_int(key) : fallback;
}
double Config::get_double_or(const std::string& key, double fallback) const {
    return has(key) ? get_double(key) : fallback;
}
bool Config::get_bool_or(const std::string& key, bool fallback) const {
    return has(key) ? get_bool(key) : fallback;
}
Rational Config::get_rational_or(const std::string& key, const Rational& fallback) const {
    return has(key) ? get_rational(key) : fallback;
}

void validate_config(const Config& config, const std::vector<KeySpec>& schema) {
    for (const auto& [key, value] : config.entries()) {
        const auto it = std::find_if(schema.begin(), schema.end(),
                                     [&](const KeySpec& s) { return key == s.key; });
        if (it == schema.end()) throw ConfigError("unknown config key: " + key);
        switch (it->kind) {  // eager parse so bad values fail before any output
            case KeyKind::string_: break;
            case KeyKind::int_: config.get_int(key); break;
            case KeyKind::double_: config.get_double(key); break;
            case KeyKind::bool_: config.get_bool(key); break;
            case KeyKind::rational_: config.get_rational(key); break;
            case KeyKind::double_list: config.get_double_list(key); break;
        }
    }
    for (const KeySpec& s : schema)
        if (s.required && !config.has(s.key))
            throw ConfigError(std::string("missing required config key: ") + s.key);
}

}  // namespace chronop::cli
