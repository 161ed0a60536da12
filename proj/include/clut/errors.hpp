#pragma once

#include <stdexcept>
#include <string>

namespace clut {

// Base class for all toolkit errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed or out-of-contract input: parse failures, invalid vertex indices,
// precondition violations on user-supplied data.  Maps to CLI exit code 2.
class InputError : public Error {
public:
    using Error::Error;
};

// An explicit resource budget (vertex cap, enumeration cap) was exceeded.
// Never silently truncates: the message reports the cap and the partial count.
class BudgetError : public Error {
public:
    using Error::Error;
};

} // namespace clut
