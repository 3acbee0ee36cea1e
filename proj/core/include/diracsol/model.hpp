#pragma once

#include <cmath>

namespace diracsol {

// Which exact-symmetry sector of the coupled radial problem is being solved.
// Spin:       the scalar-vector difference is the constant A and the upper
//             component obeys a Coulomb-like single equation.
// Pseudospin: the scalar-vector sum is the constant A and the lower
//             component plays that role instead.
enum class SymmetryMode { Spin, Pseudospin };

// Model parameters. Natural units by default (m0c2 = hbar_c = 1); setting
// m0c2/hbar_c to physical values (MeV, MeV*fm) makes every derived energy
// come out in MeV and every radius in fm. b and q are dimensionless Coulomb
// strengths (mass tail hbar_c*b/r, potential -hbar_c*q/r per component),
// A carries energy units.
struct PhysicalParams {
    double m0c2 = 1.0;
    double hbar_c = 1.0;
    double b = 0.0; // 1/r tail of the position-dependent mass
    double q = 0.0; // Coulomb strength of the potential
    double A = 0.0; // constant part of the symmetry-breaking combination

    double mass_at(double r) const; // m(r)c^2, throws DomainError for r <= 0
};

// Relativistic quantum numbers for one radial state. kappa != 0; l and
// l_tilde are the orbital angular momenta seen by the upper and lower
// components (centrifugal strengths kappa(kappa+1) and kappa(kappa-1)),
// j = |kappa| - 1/2.
struct QuantumNumbers {
    int n = 0;
    int kappa = -1;
    int l = 0;
    int l_tilde = 1;
    double j = 0.5;
};

// Fill in l, l_tilde, j from kappa. Throws DomainError if kappa == 0 or
// n < 0.
QuantumNumbers map_kappa(int kappa, int n = 0);

// Same state seen through the component-exchange map (kappa -> -kappa).
QuantumNumbers component_swap(const QuantumNumbers& qn);

// Coefficients of the reduced second-order equation
//   u'' = (eps_sq - beta_ode/r + centrifugal()/r^2) u
// for the component singled out by the symmetry mode. `beta` keeps the
// sign convention of the closed-form quantization condition (negative in
// pseudospin mode for bound configurations); `beta_ode` is the coefficient
// that actually multiplies -1/r in the equation above. `gamma` is the bare
// 1/r^2 strength written with kappa(kappa+1) in both modes; the physical
// centrifugal strength always goes through `index`:
//   centrifugal() = index*(index+1),
// which equals kappa(kappa+1)+b(b-2q) in spin mode and
// kappa(kappa-1)+b(b+2q) in pseudospin mode.
struct ReducedCoefficients {
    SymmetryMode mode = SymmetryMode::Spin;
    double eps_sq = 0.0;   // 1/length^2; > 0 inside the bound window
    double epsilon = 0.0;  // sqrt(eps_sq), NaN when eps_sq <= 0
    double beta = 0.0;     // printed-form linear coefficient
    double beta_ode = 0.0; // attractive-sign Coulomb coefficient of the ODE
    double gamma = 0.0;    // bare 1/r^2 coefficient, printed form
    double index = 0.0;    // effective angular index (delta or eta)
    bool eps_real = false;   // eps_sq > 0
    bool index_real = false; // discriminant under the index root >= 0

    double centrifugal() const { return index * (index + 1.0); }
};

// Evaluate the reduced-equation coefficients at trial energy E.
ReducedCoefficients reduced_coefficients(SymmetryMode mode,
                                         const PhysicalParams& params,
                                         const QuantumNumbers& qn,
                                         double E);

// The two dividing factors of the coupled first-order system and their
// radial derivatives, evaluated at r. The system reads
//   F' + (kappa/r) F = (u_minus/hbar_c) G
//   G' - (kappa/r) G = (u_plus/hbar_c)  F
// so u_minus divides when eliminating G, u_plus when eliminating F.
struct ChannelTerms {
    double u_minus = 0.0;
    double u_plus = 0.0;
    double du_minus = 0.0; // d(u_minus)/dr
    double du_plus = 0.0;  // d(u_plus)/dr
};

ChannelTerms coupled_terms(SymmetryMode mode, const PhysicalParams& params,
                           double E, double r);

// Radius (if any) in (0, inf) where the dividing factor of the given mode
// vanishes: u_minus for spin, u_plus for pseudospin. Returns 0 when the
// factor keeps one sign on the whole half line.
double dividing_zero(SymmetryMode mode, const PhysicalParams& params,
                     double E);

// Image of a pseudospin configuration under the sign map
// (q, A, E) -> (-q, -A, -E); composing with component_swap turns one
// sector's closed-form problem into the other's.
struct MappedProblem {
    PhysicalParams params;
    double energy;
};

MappedProblem pseudospin_parameter_map(const PhysicalParams& params,
                                       double E);

} // namespace diracsol
