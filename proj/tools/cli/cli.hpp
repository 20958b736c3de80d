#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ssz::cli {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitResource = 3;
inline constexpr int kExitConfig = 4;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ssz::cli
