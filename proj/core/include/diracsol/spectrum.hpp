#pragma once

#include <optional>
#include <utility>

#include "diracsol/model.hpp"

namespace diracsol {

// One root of the energy quadratic together with the admissibility flags
// that decide whether it labels a normalizable state:
//  - eps_positive: the decay constant squared is positive at this energy,
//  - index_real:   the effective angular index is real,
//  - nu_branch:    the root sits on the branch whose Coulomb coefficient
//                  has the attractive sign required by the quantization
//                  condition (numerator > 0).
// Only roots with all three flags correspond to bound states; the others
// are formal roots introduced by squaring the quantization condition.
struct RootInfo {
    double energy = 0.0;
    double residual = 0.0; // quantization-condition residual, NaN if eps^2 <= 0
    bool eps_positive = false;
    bool index_real = false;
    bool nu_branch = false;

    bool bound() const { return eps_positive && index_real && nu_branch; }
};

// Both roots of the energy quadratic for one (n, kappa) state. `particle`
// is the algebraically larger root, `antiparticle` the smaller. B_nk is
// the principal combination n + index + 1 entering the quadratic.
struct EnergySolution {
    SymmetryMode mode = SymmetryMode::Spin;
    QuantumNumbers qn;
    RootInfo particle;
    RootInfo antiparticle;
    bool degenerate = false;   // double root
    double discriminant = 0.0; // of the energy quadratic
    double B_nk = 0.0;         // n + index + 1
    double index = 0.0;        // effective angular index (E-independent)
};

// Solve the closed-form energy quadratic for the given state. Throws
// ComplexIndexError when the angular index is complex and NoRealSolution
// when the quadratic has no real roots.
EnergySolution solve_energy(SymmetryMode mode, const PhysicalParams& params,
                            const QuantumNumbers& qn);

// Quantization-condition residual (2n+1) eps - beta_ode
// + 2 eps sqrt(1/4 + centrifugal) at the energy baked into `rc`; zero (to
// rounding) exactly at the closed-form eigenvalues on the bound branch.
double closed_form_residual(const ReducedCoefficients& rc, int n);

// Spin-mode spectrum at A = 0 written as an explicit radical instead of a
// quadratic solve: returns (E_plus, E_minus). The argument of the inner
// square root is positive for every real-index state; NoRealSolution is
// thrown only as a guard.
std::pair<double, double> energy_A0_spin(const PhysicalParams& params,
                                         const QuantumNumbers& qn);

// Constant-mass (b = 0), A = 0 spectra in closed form:
//   spin:       { m (B^2-q^2)/(B^2+q^2), -m }
//   pseudospin: { +m,  -m (B^2-q^2)/(B^2+q^2) }
// with B = n + index + 1. Returned as (larger, smaller); the +-m entries
// carry eps^2 = 0 and are not bound states.
std::pair<double, double> energy_constant_mass(SymmetryMode mode,
                                               const PhysicalParams& params,
                                               const QuantumNumbers& qn);

// Lowest angular channel written out literally, sharing no code with
// solve_energy: spin mode fixes kappa = -1 and returns the particle root,
// pseudospin mode fixes kappa = +1 and returns the bound root.
double s_wave_energy(SymmetryMode mode, const PhysicalParams& params, int n);

// At the coupling ratio q = b/2 (and A = 0) the spin-mode spectrum and the
// constant-mass spectrum at the same q exchange roles up to an overall
// sign: the first returned solution is the variable-mass spectrum
// {+m, -R}, the second the constant-mass one {+R, -m}, with the same
// R = m (B^2-q^2)/(B^2+q^2). Elementwise, spectrum1 = -reversed(spectrum2).
// Throws PreconditionError off the q = b/2, A = 0 slice.
std::pair<EnergySolution, EnergySolution> duality_spectra(
    const PhysicalParams& params, const QuantumNumbers& qn);

// Nonrelativistic limit of the spin-mode spectrum:
//   E = -(m0c2/2) (q-b)^2 / (n + 1/2 + sqrt((l+1/2)^2 + b(b-2q)))^2.
double nonrelativistic_energy(const PhysicalParams& params, int n, int l);

} // namespace diracsol
