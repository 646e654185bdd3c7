#ifndef WFTG_ERRORS_HPP
#define WFTG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wftg {

// Base for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed or insufficient input data (bad point cloud, bad file, ...).
struct InputError : Error {
    using Error::Error;
};

struct DegenerateInput : InputError {
    using InputError::InputError;
};
struct DisconnectedGraph : InputError {
    using InputError::InputError;
};
struct ZeroDegree : InputError {
    using InputError::InputError;
};
struct UnknownFamily : InputError {
    using InputError::InputError;
};
struct DimensionMismatch : InputError {
    using InputError::InputError;
};
struct MetaMismatch : InputError {
    using InputError::InputError;
};
struct DomainViolation : InputError {
    using InputError::InputError;
};
struct ScaleOverflow : InputError {
    using InputError::InputError;
};
struct TooLarge : InputError {
    using InputError::InputError;
};
struct SingleClassLabels : InputError {
    using InputError::InputError;
};
struct ZeroReference : InputError {
    using InputError::InputError;
};

// Numerical failures (iteration budgets, divergence).
struct NumericalError : Error {
    using Error::Error;
};

struct NoConvergence : NumericalError {
    using NumericalError::NumericalError;
};
struct NearDegenerate : NumericalError {
    using NumericalError::NumericalError;
};
struct NonFinite : NumericalError {
    using NumericalError::NumericalError;
};

} // namespace wftg

#endif // WFTG_ERRORS_HPP
