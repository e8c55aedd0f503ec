#ifndef SCINT_ERRORS_HPP
#define SCINT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace scint {

/// Parameter validation failure; the message names the offending parameter.
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Integrand evaluated at a point where it is declared singular.
struct SingularInputError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Adaptive quadrature exhausted its budget without meeting the tolerance.
struct NonConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Integrand returned NaN; the message carries the offending coordinates.
struct NanSampleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Distribution does not vanish at the grid edge.
struct BoundaryLeakageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A computed quantity violated a structural invariant of the model.
struct InternalConsistencyError : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace scint

#endif
