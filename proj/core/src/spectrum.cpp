#include "diracsol/spectrum.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "diracsol/errors.hpp"

namespace diracsol {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Stable quadratic solve a2 x^2 + a1 x + a0 = 0 (a2 > 0, disc >= 0):
// compute the root that avoids cancellation first, recover the other from
// the product a0/a2.
std::pair<double, double> stable_roots(double a2, double a1, double a0,
                                       double disc) {
    const double sq = std::sqrt(disc);
    if (a1 == 0.0) {
        const double r = sq / (2.0 * a2);
        return {r, -r};
    }
    const double qq = -0.5 * (a1 + (a1 > 0.0 ? sq : -sq));
    const double r1 = qq / a2;
    const double r2 = qq != 0.0 ? a0 / qq : 0.0;
    return r1 >= r2 ? std::make_pair(r1, r2) : std::make_pair(r2, r1);
}

// Coefficients of the energy quadratic a2 E^2 + a1 E + a0 = 0 and of the
// branch discriminator num(E) = s*q*E + w (the sign of which tells whether
// the root sits on the attractive-Coulomb branch).
struct QuadraticForm {
    double a2, a1, a0;
    double w;
    double num_sign; // +1 spin, -1 pseudospin
};

QuadraticForm energy_quadratic(SymmetryMode mode, const PhysicalParams& p,
                               double B) {
    const double m = p.m0c2;
    const double q = p.q;
    const double b = p.b;
    const double A = p.A;
    QuadraticForm f{};
    if (mode == SymmetryMode::Spin) {
        f.w = q * (m - A) + b * (0.5 * A - m);
        f.a2 = B * B + q * q;
        f.a1 = 2.0 * q * f.w - B * B * A;
        f.a0 = f.w * f.w - B * B * (m * m - A * m);
        f.num_sign = 1.0;
    } else {
        f.w = q * (m + A) + b * (m + 0.5 * A);
        f.a2 = B * B + q * q;
        f.a1 = -(B * B * A + 2.0 * q * f.w);
        f.a0 = f.w * f.w - B * B * (m * m + A * m);
        f.num_sign = -1.0;
    }
    return f;
}

RootInfo classify_root(SymmetryMode mode, const PhysicalParams& p,
                       const QuantumNumbers& qn, const QuadraticForm& f,
                       double E) {
    RootInfo info;
    info.energy = E;
    const ReducedCoefficients rc = reduced_coefficients(mode, p, qn, E);
    info.eps_positive = rc.eps_real;
    info.index_real = rc.index_real;
    info.nu_branch = f.num_sign * p.q * E + f.w > 0.0;
    info.residual =
        rc.eps_real ? closed_form_residual(rc, qn.n) : kNaN;
    return info;
}

} // namespace

EnergySolution solve_energy(SymmetryMode mode, const PhysicalParams& params,
                            const QuantumNumbers& qn) {
    const ReducedCoefficients probe =
        reduced_coefficients(mode, params, qn, 0.0);
    if (!probe.index_real)
        throw ComplexIndexError(
            "solve_energy: effective angular index is complex for kappa=" +
            std::to_string(qn.kappa) + ", b=" + std::to_string(params.b) +
            ", q=" + std::to_string(params.q));

    EnergySolution sol;
    sol.mode = mode;
    sol.qn = qn;
    sol.index = probe.index;
    sol.B_nk = qn.n + probe.index + 1.0;

    const QuadraticForm f = energy_quadratic(mode, params, sol.B_nk);
    sol.discriminant = f.a1 * f.a1 - 4.0 * f.a2 * f.a0;
    if (sol.discriminant < 0.0)
        throw NoRealSolution(
            "solve_energy: energy quadratic has no real roots (discriminant " +
            std::to_string(sol.discriminant) + ")");

    const auto [hi, lo] = stable_roots(f.a2, f.a1, f.a0, sol.discriminant);
    sol.particle = classify_root(mode, params, qn, f, hi);
    sol.antiparticle = classify_root(mode, params, qn, f, lo);
    sol.degenerate = sol.discriminant == 0.0;
    return sol;
}

double closed_form_residual(const ReducedCoefficients& rc, int n) {
    if (n < 0)
        throw DomainError("closed_form_residual: level must be >= 0");
    const double root = std::sqrt(0.25 + rc.centrifugal());
    return (2.0 * n + 1.0) * rc.epsilon - rc.beta_ode +
           2.0 * rc.epsilon * root;
}

std::pair<double, double> energy_A0_spin(const PhysicalParams& params,
                                         const QuantumNumbers& qn) {
    const double m = params.m0c2;
    const double b = params.b;
    const double q = params.q;
    const double t = b * (b - 2.0 * q);
    const double disc = (qn.kappa + 0.5) * (qn.kappa + 0.5) + t;
    if (disc < 0.0)
        throw ComplexIndexError("energy_A0_spin: complex angular index");
    const double B = qn.n + 0.5 + std::sqrt(disc);
    const double s2 = B * B - t;
    if (s2 < 0.0)
        throw NoRealSolution("energy_A0_spin: negative radicand");
    const double S = std::sqrt(s2);
    const double denom = q * q + B * B;
    return {m * (q * (b - q) + B * S) / denom,
            m * (q * (b - q) - B * S) / denom};
}

std::pair<double, double> energy_constant_mass(SymmetryMode mode,
                                               const PhysicalParams& params,
                                               const QuantumNumbers& qn) {
    if (params.b != 0.0)
        throw PreconditionError("energy_constant_mass: requires b = 0");
    if (params.A != 0.0)
        throw PreconditionError("energy_constant_mass: requires A = 0");
    const double m = params.m0c2;
    const double q = params.q;
    const int ell = mode == SymmetryMode::Spin ? qn.l : qn.l_tilde;
    const double B = qn.n + ell + 1.0;
    const double R = m * (B * B - q * q) / (B * B + q * q);
    if (mode == SymmetryMode::Spin) return {R, -m};
    return {m, -R};
}

double s_wave_energy(SymmetryMode mode, const PhysicalParams& params, int n) {
    if (n < 0)
        throw DomainError("s_wave_energy: level must be >= 0");
    const double m = params.m0c2;
    const double b = params.b;
    const double q = params.q;
    const double A = params.A;

    if (mode == SymmetryMode::Spin) {
        // kappa = -1 channel, written out from scratch.
        const double disc = 0.25 + b * (b - 2.0 * q);
        if (disc < 0.0)
            throw ComplexIndexError("s_wave_energy: complex angular index");
        const double B = n + 0.5 + std::sqrt(disc);
        const double w = q * (m - A) + b * (0.5 * A - m);
        const double a2 = B * B + q * q;
        const double a1 = 2.0 * q * w - B * B * A;
        const double a0 = w * w - B * B * (m * m - A * m);
        const double d = a1 * a1 - 4.0 * a2 * a0;
        if (d < 0.0)
            throw NoRealSolution("s_wave_energy: no real roots");
        return (-a1 + std::sqrt(d)) / (2.0 * a2);
    }

    // kappa = +1 channel; the bound family sits on the lower root.
    const double disc = 0.25 + b * (b + 2.0 * q);
    if (disc < 0.0)
        throw ComplexIndexError("s_wave_energy: complex angular index");
    const double B = n + 0.5 + std::sqrt(disc);
    const double w = q * (m + A) + b * (m + 0.5 * A);
    const double a2 = B * B + q * q;
    const double a1 = -(B * B * A + 2.0 * q * w);
    const double a0 = w * w - B * B * (m * m + A * m);
    const double d = a1 * a1 - 4.0 * a2 * a0;
    if (d < 0.0)
        throw NoRealSolution("s_wave_energy: no real roots");
    return (-a1 - std::sqrt(d)) / (2.0 * a2);
}

std::pair<EnergySolution, EnergySolution> duality_spectra(
    const PhysicalParams& params, const QuantumNumbers& qn) {
    if (params.A != 0.0)
        throw PreconditionError("duality_spectra: requires A = 0");
    const double scale =
        std::max(1.0, std::max(std::abs(params.q), std::abs(params.b)));
    if (std::abs(params.q - 0.5 * params.b) > 1e-12 * scale)
        throw PreconditionError("duality_spectra: requires q = b/2");
    PhysicalParams flat = params;
    flat.b = 0.0;
    return {solve_energy(SymmetryMode::Spin, params, qn),
            solve_energy(SymmetryMode::Spin, flat, qn)};
}

double nonrelativistic_energy(const PhysicalParams& params, int n, int l) {
    if (n < 0 || l < 0)
        throw DomainError("nonrelativistic_energy: need n >= 0 and l >= 0");
    const double b = params.b;
    const double q = params.q;
    const double disc = (l + 0.5) * (l + 0.5) + b * (b - 2.0 * q);
    if (disc < 0.0)
        throw ComplexIndexError(
            "nonrelativistic_energy: complex angular index");
    const double denom = n + 0.5 + std::sqrt(disc);
    const double c = q - b;
    return -0.5 * params.m0c2 * c * c / (denom * denom);
}

} // namespace diracsol
