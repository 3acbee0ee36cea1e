#pragma once

#include <optional>
#include <vector>

namespace diracsol {

// Template second-order equation
//   psi'' + (c1 - c2 s) / (s (c3 - c4 s)) psi'
//         + (-xi1 s^2 + xi2 s - xi3) / (s (c3 - c4 s))^2 psi = 0
// solved by reduction to a hypergeometric-type equation. The Coulomb-like
// radial problems handled here land on the c1 = c2 = c4 = 0, c3 = 1
// special case; the general template (including the Jacobi regime
// c4 != 0) is kept so the reduction itself can be tested independently of
// any physics.
struct NuProblem {
    double c1 = 0.0;
    double c2 = 0.0;
    double c3 = 0.0;
    double c4 = 0.0;
    double xi1 = 0.0;
    double xi2 = 0.0;
    double xi3 = 0.0;
};

// One root selection: a choice of k (which makes the discriminant of the
// quadratic under the square root vanish) together with the sign in front
// of that square root. pi(s) = pi0 + pi1 s, tau(s) = tau0 + tau1 s.
struct NuBranch {
    double k = 0.0;
    double pi0 = 0.0;
    double pi1 = 0.0;
    double tau0 = 0.0;
    double tau1 = 0.0;
    int root_sign = -1;      // sign in front of the square-root polynomial
    bool k_upper = false;    // true for the '+' root of k
    bool admissible = false; // tau1 < 0 and pi0 > 0
};

struct NuDerived {
    NuProblem problem;

    // Intermediate constants of the reduction.
    double c5 = 0.0, c6 = 0.0, c7 = 0.0, c8 = 0.0, c9 = 0.0, c10 = 0.0;

    // All four root selections, in the order (k-,-), (k-,+), (k+,-), (k+,+).
    std::vector<NuBranch> branches;

    // The branch everything downstream uses: the admissible one with the
    // largest pi0 (the principal behaviour at the origin) after removing
    // duplicates. When nothing is admissible this falls back to the
    // (k-, -) selection and bound_branch is false.
    NuBranch selected;
    bool bound_branch = false;

    // Eigenfunction building blocks for the selected branch:
    //   weight  rho(s) = s^c11              * (c3 - c4 s)^c12   (c4 != 0)
    //                  = s^c11 e^{-c15 s}                       (c4 == 0)
    //   phi(s)        = s^c13              * (c3 - c4 s)^c14    (c4 != 0)
    //                  = s^c13 e^{-c16 s}                       (c4 == 0)
    double c11 = 0.0;
    double c13 = 0.0;
    bool laguerre_limit = false;       // c4 == 0
    double c15 = 0.0, c16 = 0.0;       // set when laguerre_limit
    std::optional<double> c12, c14;    // set when !laguerre_limit
};

// Run the reduction. Throws BranchError when c9 < 0 or c10 < 0 (the square
// roots of the construction would be complex) or when the template is
// degenerate (c3 == 0 with nonvanishing numerators).
NuDerived derive_constants(const NuProblem& problem);

// lambda_n - lambda for level n on the selected branch, i.e.
// (-n tau1 + n(n-1) c4) - (k + pi1). A configuration is quantized exactly
// when this vanishes.
double quantization_residual(const NuDerived& derived, int n);

// phi(s), the weight rho(s), the polynomial y_n(s) (Laguerre or Jacobi
// depending on the regime), and the full radial factor phi * y_n.
double nu_phi(const NuDerived& derived, double s);
double nu_weight(const NuDerived& derived, double s);
double nu_polynomial(const NuDerived& derived, int n, double s);
double nu_eigenfunction(const NuDerived& derived, int n, double s);

} // namespace diracsol
