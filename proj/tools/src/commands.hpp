// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "config.hpp"

namespace chronop::cli {

bool known_command(const std::string& command);

/// Runs one batch command with an already-parsed config. Throws
/// ConfigError (and module precondition errors) on ill-formed input;
/// returns 0 on success, 1 when a verification failed or a tolerance was
/// exceeded. Output files are written atomically into out_dir.
int run_with_config(const std::string& command, const Config& config,
                    const std::string& out_dir, std::uint64_t seed);

/// Shell entry point: parses the config file, maps config and
/// precondition errors to exit code 2 (diagnostics to diag), everything
/// else as run_with_config.
int run_command(const std::string& command, const std::string& config_path,
                const std::string& out_dir, std::uint64_t seed, std::ostream& diag);

}  // namespace chronop::cli
