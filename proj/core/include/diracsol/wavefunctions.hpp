#pragma once

#include <optional>
#include <vector>

#include "diracsol/model.hpp"

namespace diracsol {

enum class Component { Upper, Lower };

// Closed-form radial factor N r^power e^{-decay r} L_degree^alpha(scale r)
// with analytic first and second derivatives. Everything downstream
// (companion components, oracle seeds, norm checks) evaluates through
// this instead of re-deriving exponents.
struct AnalyticForm {
    double normalizer = 1.0;
    double power = 1.0;
    double decay = 0.0;
    double alpha = 0.0;
    int degree = 0;
    double scale = 0.0; // argument of the Laguerre factor is scale * r

    double value(double r) const;
    double derivative(double r) const;
    double second_derivative(double r) const;
};

// Grid for tabulated output. Zeros mean "choose from the decay constant":
// [1e-4, 40] / eps. Points are log-spaced over roughly the first twentieth
// of the range and linear after that, so both the r^power rise at the
// origin and the exponential tail are resolved.
struct GridSpec {
    double r_min = 0.0;
    double r_max = 0.0;
    int points = 2000;
};

std::vector<double> make_grid(const GridSpec& spec, double eps);

// Unit-L2-norm prefactor of r^{index+1} e^{-eps r} L_n^{2 index+1}(2 eps r)
// on (0, inf):
//   sqrt( n! (2 eps)^{2 index + 3} / (2 (n + index + 1) Gamma(n + 2 index + 2)) )
// evaluated through log-gamma so large n and index do not overflow.
// Throws DomainError unless eps > 0, index > -1/2, n >= 0.
double normalization_constant(double eps, double index, int n);

// One radial component tabulated on a grid. `normalized` marks whether
// the values carry the closed-form unit-norm prefactor (true for the
// component the symmetry mode singles out) or are the raw companion
// obtained from the first-order relation (false; its norm is recorded in
// norm_estimate instead). strict_index_condition is false when the
// effective angular index lies in (-1/2, 0], where the closed form is
// still normalizable but the origin behaviour is weaker than r^1.
struct RadialFunction {
    SymmetryMode mode = SymmetryMode::Spin;
    Component component = Component::Upper;
    QuantumNumbers qn;
    double energy = 0.0;
    double eps = 0.0;
    double index = 0.0;
    std::vector<double> grid;
    std::vector<double> values;
    double norm_estimate = 0.0;
    bool normalized = false;
    bool strict_index_condition = false;
    std::optional<AnalyticForm> analytic;
};

// Closed-form bound-state component singled out by the mode (upper for
// spin, lower for pseudospin) at energy E, unit-normalized on (0, inf).
// Throws ComplexIndexError for complex index, DomainError when eps^2 <= 0
// at E (not a bound-window energy), PreconditionError for a malformed
// grid.
RadialFunction primary_wavefunction(SymmetryMode mode,
                                    const PhysicalParams& params,
                                    const QuantumNumbers& qn, double E,
                                    const GridSpec& grid = {});

// The other component, recovered from the primary through the first-order
// coupling relation (upper' +- kappa/r terms divided by the channel
// factor). Left unnormalized; norm_estimate records its actual norm.
// Throws SingularDenominator when the dividing factor vanishes inside the
// grid.
RadialFunction companion_wavefunction(SymmetryMode mode,
                                      const PhysicalParams& params,
                                      const QuantumNumbers& qn, double E,
                                      const RadialFunction& primary);

struct SpinorPair {
    RadialFunction primary;
    RadialFunction companion;
};

SpinorPair wavefunction_pair(SymmetryMode mode, const PhysicalParams& params,
                             const QuantumNumbers& qn, double E,
                             const GridSpec& grid = {});

// Unit-normalized radial function of the nonrelativistic limit, with its
// own origin exponent (1 + alpha)/2, alpha = sqrt((2l+1)^2 + 4b(b-q)).
RadialFunction nonrelativistic_wavefunction(const PhysicalParams& params,
                                            int n, int l,
                                            const GridSpec& grid = {});

// Count strict sign changes in tabulated values, ignoring entries below
// `floor` in absolute value (grid points where the function has not yet
// risen from the origin or has decayed into rounding noise).
int count_nodes(const std::vector<double>& values, double floor = 0.0);

} // namespace diracsol
