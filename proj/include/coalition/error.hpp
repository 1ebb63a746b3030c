#pragma once

#include <stdexcept>
#include <string>

namespace coalition {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed text input (graph6 lines, partition strings, edge lists).
class ParseError : public Error {
public:
    using Error::Error;
};

// An operation was called with arguments outside its contract.
class PreconditionError : public Error {
public:
    using Error::Error;
};

}  // namespace coalition
