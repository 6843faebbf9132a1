#pragma once

#include <stdexcept>
#include <string>

namespace cornerlab {

/// An input violates a documented precondition.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A computed result contradicts an invariant that must hold for valid input.
class InternalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace cornerlab
