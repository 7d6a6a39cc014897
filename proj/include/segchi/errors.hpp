#pragma once

#include <stdexcept>
#include <string>

namespace segchi {

// Common base so the CLI boundary can catch the whole family at once.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad value: non-canonical rational, degenerate segment, inconsistent family data.
struct ValueError : Error { using Error::Error; };

// Malformed family file (syntax, missing fields, wrong types).
struct ParseError : Error { using Error::Error; };

// Query outside a segment's y-span.
struct OutOfRange : Error { using Error::Error; };

struct InvalidK : Error { using Error::Error; };
struct DegenerateRect : Error { using Error::Error; };
struct EmptyRoot : Error { using Error::Error; };
struct TooLarge : Error { using Error::Error; };
struct InvalidBudget : Error { using Error::Error; };

// An internal cross-check failed during construction. Indicates a bug,
// never expected on valid input.
struct ConstructionInvariantViolation : Error { using Error::Error; };

} // namespace segchi
