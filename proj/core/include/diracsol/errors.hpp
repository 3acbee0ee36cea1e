#pragma once

#include <stdexcept>
#include <string>

namespace diracsol {

// Invalid argument outside the mathematical domain of a routine
// (e.g. kappa = 0, negative quantum number, nonpositive radius).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A caller-visible contract was violated (bad configuration, inconsistent
// options) as opposed to a value merely being out of mathematical range.
class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// The polynomial-method branch construction failed: no admissible root
// selection yields a normalizable solution family.
class BranchError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The effective angular index would be complex (discriminant under the
// square root is negative), so no real power-law behaviour exists at the
// origin.
class ComplexIndexError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The energy quadratic has no real roots for the requested state.
class NoRealSolution : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A dividing denominator in the coupled first-order system vanishes at
// some radius inside the integration window.
class SingularDenominator : public std::runtime_error {
public:
    SingularDenominator(const std::string& what, double radius)
        : std::runtime_error(what), radius_(radius) {}
    double radius() const noexcept { return radius_; }

private:
    double radius_;
};

// Fixed-step integration overflowed or produced non-finite values even
// after rescaling; the problem is too stiff for the configured grid.
class StiffnessError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An eigenvalue search window does not bracket the requested state.
class BracketError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The node count is not monotone across the search window, so bisection
// on it cannot be trusted.
class AmbiguousBracket : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace diracsol
