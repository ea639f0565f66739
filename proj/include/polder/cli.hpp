#pragma once

// Command-line front end: parses configs, orchestrates sweeps, emits
// CSV (default) or JSON. Exit codes: 0 success, 2 configuration error,
// 3 numerical failure.

namespace polder {

int run_cli(int argc, const char* const* argv);

}  // namespace polder
