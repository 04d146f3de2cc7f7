#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "mixedfair/rational.hpp"

namespace mixedfair {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Bad arguments to an operation (index out of range, interval outside the
/// cake, malformed weights, ...).
struct DomainError : Error {
    using Error::Error;
};

/// An instance (or allocation) failed invariant checks; every violation is
/// listed with its location.
struct ValidationError : Error {
    std::vector<std::string> violations;
    explicit ValidationError(std::vector<std::string> v)
        : Error(v.empty() ? "validation failed" : v.front() + (v.size() > 1 ? " (+" + std::to_string(v.size() - 1) + " more)" : "")),
          violations(std::move(v)) {}
};

/// A Cut query asked for more value than the remaining cake holds.
struct InsufficientValueError : Error {
    Rational shortfall;
    InsufficientValueError(const std::string& msg, Rational short_by)
        : Error(msg + " (short by " + short_by.str() + ")"), shortfall(std::move(short_by)) {}
};

/// An exhaustive routine was asked to run beyond its configured guard.
struct SizeGuardError : Error {
    using Error::Error;
};

/// The requested computation is outside the supported instance classes.
struct UnsupportedError : Error {
    using Error::Error;
};

/// A caller-supplied precondition was violated mid-run (names the agent).
struct ContractViolationError : Error {
    int agent = -1;
    ContractViolationError(const std::string& msg, int agent_idx)
        : Error(msg), agent(agent_idx) {}
};

/// A plug-in allocator failed to meet its declared guarantee.
struct PluginError : Error {
    using Error::Error;
};

}  // namespace mixedfair
