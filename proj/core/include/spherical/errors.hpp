#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace spherical {

/// Caller supplied parameters outside the documented domain.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An enumeration would exceed its configured size bound. Oracles refuse
/// rather than truncate.
class ResourceLimitExceeded : public std::runtime_error {
public:
    ResourceLimitExceeded(const std::string& what, std::uint64_t requested, std::uint64_t bound)
        : std::runtime_error(what + " (requested " + std::to_string(requested) + ", bound " +
                             std::to_string(bound) + ")"),
          requested_(requested),
          bound_(bound) {}

    std::uint64_t requested() const noexcept { return requested_; }
    std::uint64_t bound() const noexcept { return bound_; }

private:
    std::uint64_t requested_;
    std::uint64_t bound_;
};

/// A runtime-checked mathematical identity failed. Indicates a bug.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace spherical
