// errors.hpp — Exception types shared by all twistlat modules

#pragma once

#include <stdexcept>
#include <string>

namespace twistlat {

// Bad (m,n) indices or other invalid integer input.
struct InvalidIndexError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A constructed object failed one of its own closed-form checks.
struct InternalConsistencyError : std::logic_error {
    using std::logic_error::logic_error;
};

// Requested object would exceed the addressable-size budget.
struct CapacityError : std::length_error {
    using std::length_error::length_error;
};

// A detuning or splitting that must be nonzero is zero.
struct SingularParameterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Trap depth at or below the recoil energy.
struct ShallowTrapError : std::domain_error {
    using std::domain_error::domain_error;
};

// Emitter detuning lies inside a bath band.
struct NotInGapError : std::domain_error {
    using std::domain_error::domain_error;
};

// Root search interval does not bracket a sign change.
struct BracketError : std::domain_error {
    using std::domain_error::domain_error;
};

// Eigensolver or integrator failed to meet its accuracy contract.
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace twistlat
