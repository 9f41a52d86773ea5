#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "confspace/connectivity.hpp"

namespace confspace::cli {

enum ExitCode { ok = 0, mismatch = 1, input_error = 2 };

// Test-only injection points.
struct Hooks {
    std::function<void(Prediction&)> adjust_prediction;
};

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Hooks& hooks = {});

// FNV-1a, 16 hex digits.
std::string digest(const std::string& bytes);

}  // namespace confspace::cli
