#pragma once

#include <stdexcept>
#include <string>

namespace oscsym {

// Root of the library's error hierarchy.  Everything thrown on purpose
// derives from this, so callers can catch one type at the boundary.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Caller bug: operands of incompatible dimension.
struct DimensionError : Error {
    using Error::Error;
};

// Requested (name, ordering) pair is not stored in the catalog.
struct CatalogMissError : Error {
    using Error::Error;
};

// Identification was asked for a half-sum name that is not a signed
// multiple of a single catalog generator.
struct NoSingleGeneratorError : Error {
    using Error::Error;
};

// A bracket left the span of the supplied basis; message names the pair.
struct NotClosedError : Error {
    using Error::Error;
};

// The requested generator has no quadratic ladder-operator realization.
struct NoQuantumRealizationError : Error {
    using Error::Error;
};

// Oscillator parameters violate positivity / discriminant constraints.
struct InadmissibleParametersError : Error {
    using Error::Error;
};

// Two phase-space objects use different coordinate orderings.
struct OrderingMismatchError : Error {
    using Error::Error;
};

// Malformed input text (rational strings, matrix JSON).
struct ParseError : Error {
    using Error::Error;
};

}  // namespace oscsym
