#pragma once

#include <stdexcept>
#include <string>

namespace cforge {

// Precondition violated by the caller: bad argument, out-of-table index,
// non-unit constant term, unknown identifier.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A configured size cap would be exceeded.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An internal identity failed (odd value halved, non-integral formula).
// Indicates a transcription or implementation bug, not bad input.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace cforge
