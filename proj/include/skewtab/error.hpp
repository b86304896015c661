#pragma once

#include <stdexcept>
#include <string>

namespace skewtab {

// Invalid input for an operation (cell outside a diagram, malformed shape, ...).
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// An enumeration was refused because it exceeds its configured budget.
struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// A composite object (puzzle, tiling) violates a local rule; the message names it.
struct StructureError : std::runtime_error {
    explicit StructureError(const std::string& what) : std::runtime_error(what) {}
};

// A cross-checked identity failed inside the library itself.
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace skewtab
