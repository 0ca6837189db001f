#pragma once

#include <stdexcept>
#include <string>

namespace tjr
{

// Malformed or out-of-range input: bad indices, wrong lengths, unparsable files.
class InputError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// An operation's structural precondition does not hold (e.g. a monotonic-only
// verifier called on a non-monotonic election).
class PreconditionError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// The instance is too large for the configured enumeration budget.
class CapacityError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

} // namespace tjr
