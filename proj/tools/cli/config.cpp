#include "config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "ssz/error.hpp"

namespace ssz::cli {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& v) {
    std::size_t pos = 0;
    double d = 0;
    try {
        d = std::stod(v, &pos);
    } catch (const std::exception&) {
        throw ConfigError("bad number for " + key + ": " + v);
    }
    if (pos != v.size() || !std::isfinite(d)) throw ConfigError("bad number for " + key + ": " + v);
    return d;
}

std::uint64_t parse_u64(const std::string& key, const std::string& v) {
    std::size_t pos = 0;
    unsigned long long u = 0;
    try {
        u = std::stoull(v, &pos);
    } catch (const std::exception&) {
        throw ConfigError("bad integer for " + key + ": " + v);
    }
    if (pos != v.size() || v.front() == '-') throw ConfigError("bad integer for " + key + ": " + v);
    return u;
}

bool parse_bool(const std::string& key, const std::string& v) {
    if (v == "true" || v == "1" || v == "on" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "off" || v == "no") return false;
    throw ConfigError("bad boolean for " + key + ": " + v);
}

} // namespace

Config parse_config(const std::string& text) {
    Config cfg;
    std::vector<EtaAnchor> extra;
    bool keep_defaults = true;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw ConfigError("line " + std::to_string(lineno) + ": empty key or value");
        cfg.entries.emplace_back(key, value);

        if (key == "sieve_limit") {
            cfg.sieve_limit = parse_u64(key, value);
        } else if (key == "precision_bits") {
            cfg.precision_bits = static_cast<int>(parse_u64(key, value));
        } else if (key == "cache_dir") {
            cfg.cache_dir = value;
        } else if (key == "eta_anchor") {
            const auto colon = value.find(':');
            if (colon == std::string::npos) throw ConfigError("eta_anchor needs T : bound, got " + value);
            const double T = parse_double(key, trim(value.substr(0, colon)));
            const double b = parse_double(key, trim(value.substr(colon + 1)));
            if (T < 1 || T != std::floor(T)) throw ConfigError("eta_anchor height must be a positive integer");
            if (b < 0) throw ConfigError("eta_anchor bound must be nonnegative");
            extra.push_back({T, b});
        } else if (key == "eta_default_anchors") {
            keep_defaults = parse_bool(key, value);
        } else if (key == "eta_global_lower") {
            cfg.eta.global_lower = parse_double(key, value);
        } else {
            throw ConfigError("unknown config key: " + key);
        }
    }
    if (!keep_defaults) cfg.eta.anchors.clear();
    cfg.eta.anchors.insert(cfg.eta.anchors.end(), extra.begin(), extra.end());
    if (cfg.eta.anchors.empty()) throw ConfigError("no eta anchors configured");
    if (cfg.precision_bits != 53)
        throw ConfigError("precision_bits = " + std::to_string(cfg.precision_bits) + " unsupported; enclosures are binary64");
    return cfg;
}

Config load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

} // namespace ssz::cli
