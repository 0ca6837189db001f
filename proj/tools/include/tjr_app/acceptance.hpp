#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace tjr::app
{

struct CheckOptions
{
    bool quick = false; // reduced sizes, for `selfcheck --quick`
    std::uint64_t seed = 1;
};

struct CheckResult
{
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

struct Check
{
    std::string name;
    double time_limit_seconds;
    std::function< CheckResult( const CheckOptions& ) > run;
};

// The acceptance checks, numbered as in the README.
[[nodiscard]] std::vector< Check > acceptance_checks();

// Runs every check, printing one "PASS|FAIL name (time) detail" line each.
// True iff all passed within their time limits.
bool run_checks( const CheckOptions& options, std::ostream& out );

} // namespace tjr::app
