#pragma once

#include <stdexcept>
#include <string>

namespace cfree {

/// Size argument outside the supported (hard-capped) range.
class BoundError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Odd ground-set size where a pairing was requested.
class ParityError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Value has the wrong shape for the operation (e.g. a non-pair partition).
class ShapeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Truncation orders of two sequences differ.
class OrderMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Requested degree exceeds the supplied moment data.
class DegreeOverflow : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Floating point evaluation hit a (near) singular step.
class NumericalDegeneracy : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Adaptive integration did not reach its error target.
class IntegrationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace cfree
