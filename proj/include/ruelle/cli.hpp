#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "ruelle/transfer.hpp"

namespace ruelle::cli {

/// Problems with the invocation itself (unknown preset, malformed filter
/// JSON, bad option values). Mapped to exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FilterSpec {
    enum class Source { Preset, Inline, File };
    Source source = Source::Preset;
    std::string value;  // preset name, inline JSON text, or file path
};

/// "@path" selects a file, a leading '{' selects inline JSON, anything else
/// is a preset name ("haar" or "stretched:<odd p>").
FilterSpec classify_filter_arg(const std::string& arg);

Filter parse_filter(const FilterSpec& spec);

/// Central table of numeric defaults shared by every subcommand and printed
/// by `rl config`.
struct Defaults {
    double tol = 1e-9;
    int n = 20;
    int K = 1000;
    int grid = 256;
    double floor_eps = 1e-8;
    unsigned long long seed = 2024;
    int count = 100;
};

/// Defaults with the RL_DEFAULT_TOL environment override applied.
/// Throws UsageError if the variable is set but not a decimal number.
Defaults defaults_with_env();

/// Dispatches a command line (without the program name). Data goes to
/// `out`, diagnostics to `err`. Returns 0 on success, 1 on analysis errors,
/// 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace ruelle::cli
