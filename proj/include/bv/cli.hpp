#pragma once

#include <string>

#include "bv/report_io.hpp"

namespace bv {

// Everything a run needs, as flat key=value strings; "command" (and, for
// subcommands, "sub") included. The manifest written next to the outputs
// echoes exactly this map with every default resolved, and can be re-fed
// through --config to reproduce the run byte for byte.
struct RunConfig {
    KeyValues kv;
};

// Grammar: bv <command> [<sub>] [--key value]... [--extended] [--config FILE]
// A config file is applied first; positionals and flags override it.
// Key spelling uses '_' internally; '-' in flags is normalized.
RunConfig parse_args(int argc, const char* const* argv);

// Dispatches and returns the exit code: 0 all PASS (or a plain computation),
// 1 any FAIL, 3 any INCONCLUSIVE without FAIL. Usage problems throw
// std::invalid_argument (mapped to exit 2 by the binary); size caps throw
// ResourceError (also exit 2).
int run(const RunConfig& cfg);

std::string usage_text();

}  // namespace bv
