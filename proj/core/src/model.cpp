#include "diracsol/model.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "diracsol/errors.hpp"

namespace diracsol {

namespace {
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
}

double PhysicalParams::mass_at(double r) const {
    if (!(r > 0.0))
        throw DomainError("mass_at: radius must be positive, got " +
                          std::to_string(r));
    return m0c2 + hbar_c * b / r;
}

QuantumNumbers map_kappa(int kappa, int n) {
    if (kappa == 0)
        throw DomainError("map_kappa: kappa must be a nonzero integer");
    if (n < 0)
        throw DomainError("map_kappa: radial quantum number must be >= 0");
    QuantumNumbers qn;
    qn.n = n;
    qn.kappa = kappa;
    qn.l = kappa > 0 ? kappa : -kappa - 1;
    qn.l_tilde = kappa > 0 ? kappa - 1 : -kappa;
    qn.j = std::abs(kappa) - 0.5;
    return qn;
}

QuantumNumbers component_swap(const QuantumNumbers& qn) {
    return map_kappa(-qn.kappa, qn.n);
}

ReducedCoefficients reduced_coefficients(SymmetryMode mode,
                                         const PhysicalParams& params,
                                         const QuantumNumbers& qn,
                                         double E) {
    const double m = params.m0c2;
    const double hc = params.hbar_c;
    const double b = params.b;
    const double q = params.q;
    const double A = params.A;
    const double kappa = qn.kappa;

    ReducedCoefficients rc;
    rc.mode = mode;

    double disc; // discriminant under the index square root
    if (mode == SymmetryMode::Spin) {
        rc.eps_sq = (m * m - E * E - A * (m - E)) / (hc * hc);
        rc.beta = (2.0 * q * (m + E - A) + b * (A - 2.0 * m)) / hc;
        rc.beta_ode = rc.beta;
        rc.gamma = b * (b - 2.0 * q) + kappa * (kappa + 1.0);
        disc = (kappa + 0.5) * (kappa + 0.5) + b * (b - 2.0 * q);
    } else {
        rc.eps_sq = (m * m - E * E + A * (m + E)) / (hc * hc);
        rc.beta = -(2.0 * q * (m - E + A) + b * (2.0 * m + A)) / hc;
        rc.beta_ode = -rc.beta;
        rc.gamma = b * (b + 2.0 * q) + kappa * (kappa + 1.0);
        disc = (kappa - 0.5) * (kappa - 0.5) + b * (b + 2.0 * q);
    }

    rc.eps_real = rc.eps_sq > 0.0;
    rc.epsilon = rc.eps_real ? std::sqrt(rc.eps_sq) : kNaN;
    rc.index_real = disc >= 0.0;
    rc.index = rc.index_real ? std::sqrt(disc) - 0.5 : kNaN;
    return rc;
}

ChannelTerms coupled_terms(SymmetryMode mode, const PhysicalParams& params,
                           double E, double r) {
    if (!(r > 0.0))
        throw DomainError("coupled_terms: radius must be positive, got " +
                          std::to_string(r));
    const double m = params.m0c2;
    const double hc = params.hbar_c;
    const double b = params.b;
    const double q = params.q;
    const double A = params.A;

    ChannelTerms t;
    if (mode == SymmetryMode::Spin) {
        t.u_minus = (m + E - A) + hc * b / r;
        t.u_plus = (m - E) + hc * (b - 2.0 * q) / r;
        t.du_minus = -hc * b / (r * r);
        t.du_plus = -hc * (b - 2.0 * q) / (r * r);
    } else {
        t.u_plus = (m - E + A) + hc * b / r;
        t.u_minus = (m + E) + hc * (b - 2.0 * q) / r;
        t.du_plus = -hc * b / (r * r);
        t.du_minus = -hc * (b - 2.0 * q) / (r * r);
    }
    return t;
}

double dividing_zero(SymmetryMode mode, const PhysicalParams& params,
                     double E) {
    // The dividing factor has the form C + D/r; it crosses zero at a
    // positive radius only when C and D have opposite signs.
    const double C = mode == SymmetryMode::Spin
                         ? params.m0c2 + E - params.A
                         : params.m0c2 - E + params.A;
    const double D = params.hbar_c * params.b;
    if (D == 0.0 || C == 0.0) return 0.0;
    const double r0 = -D / C;
    return r0 > 0.0 ? r0 : 0.0;
}

MappedProblem pseudospin_parameter_map(const PhysicalParams& params,
                                       double E) {
    MappedProblem mp;
    mp.params = params;
    mp.params.q = -params.q;
    mp.params.A = -params.A;
    mp.energy = -E;
    return mp;
}

} // namespace diracsol
