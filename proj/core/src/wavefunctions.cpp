#include "diracsol/wavefunctions.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "diracsol/errors.hpp"
#include "diracsol/quadrature.hpp"
#include "diracsol/special.hpp"
#include "diracsol/spectrum.hpp"

namespace diracsol {

double AnalyticForm::value(double r) const {
    if (!(r > 0.0))
        throw DomainError("AnalyticForm::value: radius must be positive");
    return normalizer * std::pow(r, power) * std::exp(-decay * r) *
           laguerre(degree, alpha, scale * r);
}

double AnalyticForm::derivative(double r) const {
    if (!(r > 0.0))
        throw DomainError("AnalyticForm::derivative: radius must be positive");
    const double g = std::pow(r, power) * std::exp(-decay * r);
    const double x = scale * r;
    const double L = laguerre(degree, alpha, x);
    const double L1 =
        degree > 0 ? -laguerre(degree - 1, alpha + 1.0, x) : 0.0;
    return normalizer * g * ((power / r - decay) * L + scale * L1);
}

double AnalyticForm::second_derivative(double r) const {
    if (!(r > 0.0))
        throw DomainError(
            "AnalyticForm::second_derivative: radius must be positive");
    const double g = std::pow(r, power) * std::exp(-decay * r);
    const double x = scale * r;
    const double L = laguerre(degree, alpha, x);
    const double L1 =
        degree > 0 ? -laguerre(degree - 1, alpha + 1.0, x) : 0.0;
    const double L2 =
        degree > 1 ? laguerre(degree - 2, alpha + 2.0, x) : 0.0;
    const double quad =
        power * (power - 1.0) / (r * r) - 2.0 * power * decay / r +
        decay * decay;
    return normalizer * g *
           (quad * L + 2.0 * (power / r - decay) * scale * L1 +
            scale * scale * L2);
}

std::vector<double> make_grid(const GridSpec& spec, double eps) {
    if (!(eps > 0.0))
        throw DomainError("make_grid: decay constant must be positive");
    const double r_min = spec.r_min > 0.0 ? spec.r_min : 1e-4 / eps;
    const double r_max = spec.r_max > 0.0 ? spec.r_max : 40.0 / eps;
    if (!(r_max > r_min))
        throw PreconditionError("make_grid: need r_max > r_min");
    if (spec.points < 16)
        throw PreconditionError("make_grid: need at least 16 points");

    // Log-spaced head so the r^power rise near the origin is resolved,
    // linear tail for the exponential decay region.
    const double r_break = r_min + (r_max - r_min) / 20.0;
    const int n_log = std::max(2, 2 * spec.points / 5);
    const int n_lin = spec.points - n_log;

    std::vector<double> grid;
    grid.reserve(spec.points);
    const double ratio = r_break / r_min;
    for (int i = 0; i < n_log; ++i)
        grid.push_back(r_min *
                       std::pow(ratio, static_cast<double>(i) / (n_log - 1)));
    for (int j = 1; j <= n_lin; ++j)
        grid.push_back(r_break + (r_max - r_break) * j /
                                     static_cast<double>(n_lin));
    return grid;
}

namespace {

double log_normalizer(int n, double index, double eps) {
    // Unit L2 norm on (0, inf) for r^{index+1} e^{-eps r}
    // L_n^{2 index + 1}(2 eps r).
    return 0.5 * (std::lgamma(n + 1.0) +
                  (2.0 * index + 3.0) * std::log(2.0 * eps) -
                  std::log(2.0) - std::log(n + index + 1.0) -
                  std::lgamma(n + 2.0 * index + 2.0));
}

double grid_norm(const AnalyticForm& af, double a, double b) {
    const double val = integrate(
        [&af](double r) {
            const double v = af.value(r);
            return v * v;
        },
        a, b, 1e-10);
    return std::sqrt(val);
}

} // namespace

double normalization_constant(double eps, double index, int n) {
    if (!(eps > 0.0))
        throw DomainError(
            "normalization_constant: decay constant must be positive");
    if (!(index > -0.5))
        throw DomainError("normalization_constant: index must exceed -1/2");
    if (n < 0)
        throw DomainError("normalization_constant: level must be >= 0");
    return std::exp(log_normalizer(n, index, eps));
}

RadialFunction primary_wavefunction(SymmetryMode mode,
                                    const PhysicalParams& params,
                                    const QuantumNumbers& qn, double E,
                                    const GridSpec& grid) {
    const ReducedCoefficients rc = reduced_coefficients(mode, params, qn, E);
    if (!rc.index_real)
        throw ComplexIndexError(
            "primary_wavefunction: effective angular index is complex");
    if (!rc.eps_real)
        throw DomainError(
            "primary_wavefunction: energy lies outside the bound window "
            "(eps^2 <= 0)");

    RadialFunction f;
    f.mode = mode;
    f.component =
        mode == SymmetryMode::Spin ? Component::Upper : Component::Lower;
    f.qn = qn;
    f.energy = E;
    f.eps = rc.epsilon;
    f.index = rc.index;
    f.strict_index_condition = rc.index > 0.0;

    AnalyticForm af;
    af.power = rc.index + 1.0;
    af.decay = rc.epsilon;
    af.alpha = 2.0 * rc.index + 1.0;
    af.degree = qn.n;
    af.scale = 2.0 * rc.epsilon;
    af.normalizer = std::exp(log_normalizer(qn.n, rc.index, rc.epsilon));

    f.grid = make_grid(grid, rc.epsilon);
    f.values.reserve(f.grid.size());
    for (const double r : f.grid) f.values.push_back(af.value(r));
    f.norm_estimate = grid_norm(af, f.grid.front(), f.grid.back());
    f.normalized = true;
    f.analytic = af;
    return f;
}

RadialFunction companion_wavefunction(SymmetryMode mode,
                                      const PhysicalParams& params,
                                      const QuantumNumbers& qn, double E,
                                      const RadialFunction& primary) {
    if (!primary.analytic)
        throw PreconditionError(
            "companion_wavefunction: primary carries no analytic form");
    const AnalyticForm& af = *primary.analytic;

    const double r0 = dividing_zero(mode, params, E);
    if (r0 > 0.0 && r0 <= primary.grid.back())
        throw SingularDenominator(
            "companion_wavefunction: channel factor vanishes at r = " +
                std::to_string(r0),
            r0);

    const double hc = params.hbar_c;
    const double kappa = qn.kappa;
    auto value = [&](double r) {
        const ChannelTerms t = coupled_terms(mode, params, E, r);
        if (mode == SymmetryMode::Spin)
            return hc * (af.derivative(r) + kappa * af.value(r) / r) /
                   t.u_minus;
        return hc * (af.derivative(r) - kappa * af.value(r) / r) / t.u_plus;
    };

    RadialFunction g;
    g.mode = mode;
    g.component =
        mode == SymmetryMode::Spin ? Component::Lower : Component::Upper;
    g.qn = qn;
    g.energy = E;
    g.eps = primary.eps;
    g.index = primary.index;
    g.strict_index_condition = primary.strict_index_condition;
    g.grid = primary.grid;
    g.values.reserve(g.grid.size());
    for (const double r : g.grid) g.values.push_back(value(r));
    const double norm_sq = integrate(
        [&](double r) {
            const double v = value(r);
            return v * v;
        },
        g.grid.front(), g.grid.back(), 1e-10);
    g.norm_estimate = std::sqrt(norm_sq);
    g.normalized = false;
    return g;
}

SpinorPair wavefunction_pair(SymmetryMode mode, const PhysicalParams& params,
                             const QuantumNumbers& qn, double E,
                             const GridSpec& grid) {
    SpinorPair pair;
    pair.primary = primary_wavefunction(mode, params, qn, E, grid);
    pair.companion =
        companion_wavefunction(mode, params, qn, E, pair.primary);
    return pair;
}

RadialFunction nonrelativistic_wavefunction(const PhysicalParams& params,
                                            int n, int l,
                                            const GridSpec& grid) {
    if (n < 0 || l < 0)
        throw DomainError(
            "nonrelativistic_wavefunction: need n >= 0 and l >= 0");
    const double b = params.b;
    const double q = params.q;
    const double alpha_sq = (2.0 * l + 1.0) * (2.0 * l + 1.0) +
                            4.0 * b * (b - q);
    if (alpha_sq < 0.0)
        throw ComplexIndexError(
            "nonrelativistic_wavefunction: complex angular index");
    const double alpha = std::sqrt(alpha_sq);

    const double E = nonrelativistic_energy(params, n, l);
    if (!(E < 0.0))
        throw DomainError(
            "nonrelativistic_wavefunction: no binding (E >= 0) for these "
            "parameters");
    const double eps_s = std::sqrt(-2.0 * params.m0c2 * E) / params.hbar_c;

    RadialFunction f;
    f.mode = SymmetryMode::Spin;
    f.component = Component::Upper;
    f.qn = map_kappa(-(l + 1), n);
    f.energy = E;
    f.eps = eps_s;
    f.index = 0.5 * (alpha - 1.0);
    f.strict_index_condition = f.index > 0.0;

    AnalyticForm af;
    af.power = 0.5 * (1.0 + alpha);
    af.decay = eps_s;
    af.alpha = alpha;
    af.degree = n;
    af.scale = 2.0 * eps_s;
    af.normalizer = std::exp(
        0.5 * (std::lgamma(n + 1.0) + (alpha + 2.0) * std::log(2.0 * eps_s) -
               std::log(2.0 * n + alpha + 1.0) -
               std::lgamma(n + alpha + 1.0)));

    f.grid = make_grid(grid, eps_s);
    f.values.reserve(f.grid.size());
    for (const double r : f.grid) f.values.push_back(af.value(r));
    f.norm_estimate = grid_norm(af, f.grid.front(), f.grid.back());
    f.normalized = true;
    f.analytic = af;
    return f;
}

int count_nodes(const std::vector<double>& values, double floor) {
    int nodes = 0;
    int last_sign = 0;
    for (const double v : values) {
        if (std::abs(v) <= floor) continue;
        const int s = v > 0.0 ? 1 : -1;
        if (last_sign != 0 && s != last_sign) ++nodes;
        last_sign = s;
    }
    return nodes;
}

} // namespace diracsol
