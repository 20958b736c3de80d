#pragma once

// Run configuration read from a "key = value" text file.
//
//   sieve_limit = 33554432
//   precision_bits = 53
//   cache_dir = cache
//   eta_anchor = 2097152 : 0.00105      # T : sup_{t >= T} |eta(t)|, repeatable
//   eta_default_anchors = false         # drop the two built-in anchors
//   eta_global_lower = -0.00000305
//
// Blank lines and text after '#' are ignored.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ssz/arith.hpp"

namespace ssz::cli {

struct Config {
    EtaBoundConfig eta{};
    std::optional<std::uint64_t> sieve_limit;
    int precision_bits = 53;
    std::optional<std::filesystem::path> cache_dir;
    // Every key/value pair as read, for the run manifest.
    std::vector<std::pair<std::string, std::string>> entries;
};

Config parse_config(const std::string& text);
Config load_config(const std::filesystem::path& path);

} // namespace ssz::cli
