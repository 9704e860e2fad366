#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nvmio::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitValidation = 2;

/// Runs one `nvmio-lab` invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

/// Parses sizes like `32KB`, `2MB`, `1GB` or a bare number of MB.
double parse_size_mb(const std::string& text);

}  // namespace nvmio::cli
