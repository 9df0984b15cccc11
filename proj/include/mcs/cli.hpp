#pragma once

#include <string>
#include <vector>

namespace mcs {

// Full command-line surface; returns the process exit code
// (0 success, 2 usage/validation, 3 runtime failure).
int run_cli(const std::vector<std::string>& args);

// "key=value" per line, '#' comments; used as defaults under CLI flags.
std::vector<std::pair<std::string, std::string>> load_config(const std::string& path);

}  // namespace mcs
