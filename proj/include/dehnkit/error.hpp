#pragma once

#include <stdexcept>
#include <string>

namespace dehnkit {

// Base class for all toolkit errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Non-primitive or zero slope coordinates.
struct InvalidSlopeError : Error {
    using Error::Error;
};

// Structurally malformed data: slot conflicts, dangling ids, bad rotation data.
struct StructureError : Error {
    using Error::Error;
};

// Operation invoked outside its stated precondition.
struct PreconditionError : Error {
    using Error::Error;
};

// File or inline-argument parsing failure.
struct ParseError : Error {
    using Error::Error;
};

// A search that a theorem guarantees to succeed failed. Carries a dump of the
// offending instance; seeing one of these on admissible input would be
// mathematically significant.
struct CounterexampleError : Error {
    explicit CounterexampleError(const std::string& what, std::string instance_dump)
        : Error(what), instance(std::move(instance_dump)) {}
    std::string instance;
};

} // namespace dehnkit
