#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tjr::app
{

// Exit codes shared by every subcommand.
inline constexpr int exit_ok = 0;
inline constexpr int exit_violated = 1; // verify: axiom fails; selfcheck: a check failed
inline constexpr int exit_input = 2;    // malformed input or unmet precondition
inline constexpr int exit_capacity = 3;
inline constexpr int exit_infeasible = 4;

// Runs one invocation. `args` excludes the program name.
int run_cli( const std::vector< std::string >& args, std::ostream& out, std::ostream& err );

} // namespace tjr::app
