#pragma once

#include <cstddef>
#include <limits>
#include <utility>
#include <vector>

#include "diracsol/model.hpp"
#include "diracsol/wavefunctions.hpp"

namespace diracsol {

// Which radial equation the shooting integrator drives.
//  - ReducedSpin / ReducedPseudospin: the single second-order equation
//    u'' = (eps^2 - beta_ode/r + centrifugal/r^2) u that the closed-form
//    construction solves; exact cross-check of the quantization at any b.
//  - FullUpper / FullLower: the coupled first-order system reduced without
//    dropping anything, i.e. including the derivative-of-the-channel-factor
//    term that the closed form omits for b != 0. Coincides with the
//    Reduced variant exactly when b = 0.
enum class OdeVariant { ReducedSpin, ReducedPseudospin, FullUpper, FullLower };

SymmetryMode variant_mode(OdeVariant v);

struct ShootingConfig {
    double r_min = 0.0; // 0 = auto: 1e-4 / eps
    double r_max = 0.0; // 0 = auto: 35 / eps
    int steps = 6000;   // RK4 steps across the whole grid
    double bracket_lo = 0.0; // both 0 = auto: the eps^2 > 0 energy window
    double bracket_hi = 0.0;
    double tol = 1e-9;       // bisection width, on the scale of m0c2
    double eps_floor = 1e-3; // grid decay constant floor near window edges
};

struct IntegrationResult {
    double mismatch = 0.0; // scaled log-derivative jump at the match point;
                           // NaN when E lies outside the bound window (no
                           // decaying tail to match against)
    int nodes = 0;         // strict sign changes of the outward solution
    std::size_t match_index = 0;
    std::vector<double> grid;
    std::vector<double> values; // outward solution (defined up to scale)
};

// Energies between which eps^2 > 0 (the only place normalizable states can
// live): (A - m, m) in spin mode, (-m, m + A) in pseudospin mode.
std::pair<double, double> bound_window(SymmetryMode mode,
                                       const PhysicalParams& params);

// Integrate the chosen equation at trial energy E: outward from a
// power-series start at r_min, inward from a decaying-tail start at r_max,
// log-derivatives matched where the outward solution peaks in magnitude
// (never a node, and the physical maximum at an eigenvalue). Throws
// ComplexIndexError when no real power-law start exists,
// SingularDenominator when the channel factor of a Full variant vanishes
// inside the grid, StiffnessError when the solution is not finite even
// after rescaling.
IntegrationResult integrate_once(OdeVariant v, const PhysicalParams& params,
                                 const QuantumNumbers& qn, double E,
                                 const ShootingConfig& config = {});

// Locate the eigenvalue with qn.n radial nodes by bisection on the node
// count of the outward solution. The count is monotone in E across the
// bound branch (rising in spin mode, falling in pseudospin mode); the
// bracket must straddle exactly one transition. Throws BracketError when
// the bracket contains no transition and AmbiguousBracket when a scan
// finds more than one.
double shoot_eigenvalue(OdeVariant v, const PhysicalParams& params,
                        const QuantumNumbers& qn,
                        const ShootingConfig& config = {});

// Maximum pointwise residual of a tabulated component against the chosen
// equation, over the grid interior, scaled by |eps^2| times the peak of
// the component. Uses the analytic derivatives when the function carries
// its closed form, otherwise nonuniform finite-difference stencils on the
// samples. The all-zero function reports 0 by convention.
double residual_profile(const RadialFunction& f, OdeVariant v,
                        const PhysicalParams& params, double E);

// One closed-form-versus-numerics comparison at a bound state, including
// the gap between the eigenvalue of the full coupled equation and the
// reduced one actually solved by the closed form.
struct VerificationReport {
    SymmetryMode mode = SymmetryMode::Spin;
    OdeVariant reduced_variant = OdeVariant::ReducedSpin;
    OdeVariant full_variant = OdeVariant::FullUpper;
    PhysicalParams params;
    QuantumNumbers qn;
    double E_analytic = 0.0; // closed-form bound root
    double E_numeric = 0.0;  // shooting eigenvalue of the reduced equation
    double abs_deviation = 0.0;
    double rel_deviation = 0.0;
    double residual_max = 0.0; // closed form against the reduced equation
    double E_full = std::numeric_limits<double>::quiet_NaN();
    double approximation_gap =
        std::numeric_limits<double>::quiet_NaN(); // |E_full - E_numeric|
    bool full_converged = false;
};

// Shoot both the reduced and the full equation near the closed-form bound
// root and report the deviations. The bracket defaults to a window around
// the analytic energy (widened or narrowed on bracketing failures); a
// caller-supplied bracket in `config` is used as-is. Throws DomainError
// when the requested state is not bound; reduced-shot failures propagate,
// full-shot failures are recorded as full_converged = false with NaN gap.
VerificationReport approximation_audit(SymmetryMode mode,
                                       const PhysicalParams& params,
                                       const QuantumNumbers& qn,
                                       const ShootingConfig& config = {});

} // namespace diracsol
