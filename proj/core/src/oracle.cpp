#include "diracsol/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "diracsol/errors.hpp"
#include "diracsol/spectrum.hpp"

namespace diracsol {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kRescaleLimit = 1e250;

struct Equation {
    OdeVariant variant;
    SymmetryMode mode;
    PhysicalParams params;
    QuantumNumbers qn;
    double E;
    ReducedCoefficients rc;
    bool full;

    // u'' for the chosen equation. Reduced variants carry no first-order
    // term; Full variants add the derivative-of-the-channel-factor term.
    double accel(double r, double u, double v) const {
        if (!full) {
            const double W = rc.eps_sq - rc.beta_ode / r +
                             rc.centrifugal() / (r * r);
            return W * u;
        }
        const ChannelTerms t = coupled_terms(mode, params, E, r);
        const double hc2 = params.hbar_c * params.hbar_c;
        const double kappa = qn.kappa;
        if (variant == OdeVariant::FullUpper) {
            const double W = kappa * (kappa + 1.0) / (r * r) +
                             t.u_minus * t.u_plus / hc2;
            return W * u + (t.du_minus / t.u_minus) * (v + kappa * u / r);
        }
        const double W = kappa * (kappa - 1.0) / (r * r) +
                         t.u_minus * t.u_plus / hc2;
        return W * u + (t.du_plus / t.u_plus) * (v - kappa * u / r);
    }
};

// Leading power p and first correction c of the outward start
// u = r^p (1 + c r), plus the 1/r coefficient governing the far tail.
struct SeriesStart {
    double p;
    double c;
    double beta_eff;
};

SeriesStart start_coefficients(const Equation& eq) {
    if (!eq.full || eq.params.b == 0.0) {
        // Reduced equation (the Full system collapses onto it at b = 0).
        if (!eq.rc.index_real)
            throw ComplexIndexError(
                "integrate_once: no real power-law behaviour at the origin");
        const double p = eq.rc.index + 1.0;
        return {p, -eq.rc.beta_ode / (2.0 * p), eq.rc.beta_ode};
    }

    // Coupled system with a 1/r mass tail: expand the channel factors
    // U = a + b_coul/r directly.
    const double m = eq.params.m0c2;
    const double hc = eq.params.hbar_c;
    const double b = eq.params.b;
    const double q = eq.params.q;
    const double A = eq.params.A;
    const double kappa = eq.qn.kappa;
    double am, bm, ap, bp;
    if (eq.mode == SymmetryMode::Spin) {
        am = m + eq.E - A;
        bm = hc * b;
        ap = m - eq.E;
        bp = hc * (b - 2.0 * q);
    } else {
        ap = m - eq.E + A;
        bp = hc * b;
        am = m + eq.E;
        bm = hc * (b - 2.0 * q);
    }
    const double p_sq = kappa * kappa + bm * bp / (hc * hc);
    if (p_sq <= 0.0)
        throw ComplexIndexError(
            "integrate_once: no real power-law behaviour at the origin");
    const double p = std::sqrt(p_sq);
    const double cf1 = (am * bp + ap * bm) / (hc * hc);
    const double c =
        eq.variant == OdeVariant::FullUpper
            ? (cf1 + (p + kappa) * am / bm) / (2.0 * p + 1.0)
            : (cf1 + (p - kappa) * ap / bp) / (2.0 * p + 1.0);
    return {p, c, -cf1};
}

std::vector<double> shooting_grid(double r_min, double r_max, double knee,
                                  int steps) {
    // Geometric spacing up to the knee (resolves the 1/r^2 region without
    // shrinking the global step), uniform beyond it.
    const int n_log = std::max(2, 2 * steps / 5);
    const int n_lin = steps - n_log;
    std::vector<double> grid;
    grid.reserve(steps + 1);
    const double ratio = knee / r_min;
    for (int i = 0; i <= n_log; ++i)
        grid.push_back(r_min *
                       std::pow(ratio, static_cast<double>(i) / n_log));
    for (int j = 1; j <= n_lin; ++j)
        grid.push_back(knee +
                       (r_max - knee) * j / static_cast<double>(n_lin));
    return grid;
}

// One RK4 step of (u, v)' = (v, accel) from r to r + h.
void rk4_step(const Equation& eq, double r, double h, double& u, double& v) {
    const double k1u = v;
    const double k1v = eq.accel(r, u, v);
    const double k2u = v + 0.5 * h * k1v;
    const double k2v =
        eq.accel(r + 0.5 * h, u + 0.5 * h * k1u, v + 0.5 * h * k1v);
    const double k3u = v + 0.5 * h * k2v;
    const double k3v =
        eq.accel(r + 0.5 * h, u + 0.5 * h * k2u, v + 0.5 * h * k2v);
    const double k4u = v + h * k3v;
    const double k4v = eq.accel(r + h, u + h * k3u, v + h * k3v);
    u += h / 6.0 * (k1u + 2.0 * k2u + 2.0 * k3u + k4u);
    v += h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
}

} // namespace

SymmetryMode variant_mode(OdeVariant v) {
    return (v == OdeVariant::ReducedSpin || v == OdeVariant::FullUpper)
               ? SymmetryMode::Spin
               : SymmetryMode::Pseudospin;
}

std::pair<double, double> bound_window(SymmetryMode mode,
                                       const PhysicalParams& params) {
    if (mode == SymmetryMode::Spin)
        return {params.A - params.m0c2, params.m0c2};
    return {-params.m0c2, params.m0c2 + params.A};
}

IntegrationResult integrate_once(OdeVariant v, const PhysicalParams& params,
                                 const QuantumNumbers& qn, double E,
                                 const ShootingConfig& config) {
    if (config.steps < 16)
        throw PreconditionError("integrate_once: need at least 16 steps");
    const SymmetryMode mode = variant_mode(v);
    Equation eq{v,
                mode,
                params,
                qn,
                E,
                reduced_coefficients(mode, params, qn, E),
                v == OdeVariant::FullUpper || v == OdeVariant::FullLower};

    const double eps_grid =
        std::max(config.eps_floor, eq.rc.eps_real ? eq.rc.epsilon : 0.0);
    const double r_min =
        config.r_min > 0.0 ? config.r_min : 1e-4 / eps_grid;
    const double r_max = config.r_max > 0.0 ? config.r_max : 35.0 / eps_grid;
    if (!(r_max > r_min))
        throw PreconditionError("integrate_once: need r_max > r_min");

    if (eq.full) {
        const double r0 = dividing_zero(mode, params, E);
        if (r0 > r_min && r0 < r_max)
            throw SingularDenominator(
                "integrate_once: channel factor vanishes at r = " +
                    std::to_string(r0),
                r0);
    }

    const SeriesStart st = start_coefficients(eq);
    double knee = 1.0 / eps_grid;
    if (!(knee > 2.0 * r_min && knee < 0.5 * r_max))
        knee = std::sqrt(r_min * r_max);

    IntegrationResult res;
    res.grid = shooting_grid(r_min, r_max, knee, config.steps);
    const std::size_t npts = res.grid.size();
    res.values.resize(npts);
    std::vector<double> slopes(npts);

    double u = std::pow(r_min, st.p) * (1.0 + st.c * r_min);
    double vel = std::pow(r_min, st.p - 1.0) *
                 (st.p + (st.p + 1.0) * st.c * r_min);
    res.values[0] = u;
    slopes[0] = vel;
    for (std::size_t i = 0; i + 1 < npts; ++i) {
        rk4_step(eq, res.grid[i], res.grid[i + 1] - res.grid[i], u, vel);
        if (!std::isfinite(u) || !std::isfinite(vel))
            throw StiffnessError(
                "integrate_once: outward solution is not finite at r = " +
                std::to_string(res.grid[i + 1]));
        if (std::abs(u) > kRescaleLimit || std::abs(vel) > kRescaleLimit) {
            const double scale = 1.0 / kRescaleLimit;
            u *= scale;
            vel *= scale;
            for (std::size_t j = 0; j <= i; ++j) {
                res.values[j] *= scale;
                slopes[j] *= scale;
            }
        }
        res.values[i + 1] = u;
        slopes[i + 1] = vel;
    }

    int nodes = 0;
    int last_sign = 0;
    for (const double val : res.values) {
        if (val == 0.0) continue;
        const int s = val > 0.0 ? 1 : -1;
        if (last_sign != 0 && s != last_sign) ++nodes;
        last_sign = s;
    }
    res.nodes = nodes;

    // Match where the outward solution is largest in magnitude over the
    // inner half of the grid. That point is never a node (a fixed match
    // radius can collide with one: the first Laguerre node of an n = 1
    // state sits exactly at (index+1)/eps), and at an eigenvalue it is the
    // physical peak, where both passes are at their most accurate. The
    // far tail is excluded: even on-eigenvalue, rounding feeds the growing
    // mode, and by e^(eps r_max) ~ e^35 it dominates the outward values;
    // at r_max/2 that contamination is still ~e^17 times smaller than the
    // peak. Off-eigenvalue the cut half grows genuinely and the matched
    // log-derivatives disagree at order one, as they should.
    const double r_cut = 0.5 * r_max;
    std::size_t mi = 0;
    for (std::size_t i = 1; i < npts; ++i) {
        if (res.grid[i] > r_cut)
            break;
        if (std::abs(res.values[i]) > std::abs(res.values[mi]))
            mi = i;
    }
    res.match_index = mi;

    if (!eq.rc.eps_real) {
        res.mismatch = kNaN;
        return res;
    }

    // Inward pass from the decaying-tail start; only its log-derivative at
    // the match point is needed.
    const double eps = eq.rc.epsilon;
    double ui = 1.0;
    double vi = -eps + st.beta_eff / (2.0 * eps * r_max);
    for (std::size_t i = npts - 1; i > mi; --i) {
        rk4_step(eq, res.grid[i], res.grid[i - 1] - res.grid[i], ui, vi);
        if (!std::isfinite(ui) || !std::isfinite(vi))
            throw StiffnessError(
                "integrate_once: inward solution is not finite at r = " +
                std::to_string(res.grid[i - 1]));
        if (std::abs(ui) > kRescaleLimit || std::abs(vi) > kRescaleLimit) {
            ui /= kRescaleLimit;
            vi /= kRescaleLimit;
        }
    }

    const double l_out = slopes[mi] / res.values[mi];
    const double l_in = vi / ui;
    res.mismatch =
        (l_out - l_in) / (1.0 + std::abs(l_out) + std::abs(l_in));
    return res;
}

double shoot_eigenvalue(OdeVariant v, const PhysicalParams& params,
                        const QuantumNumbers& qn,
                        const ShootingConfig& config) {
    const SymmetryMode mode = variant_mode(v);
    const auto [wlo, whi] = bound_window(mode, params);
    if (!(whi > wlo))
        throw BracketError("shoot_eigenvalue: empty bound window");

    double lo = config.bracket_lo;
    double hi = config.bracket_hi;
    if (lo == 0.0 && hi == 0.0) {
        const double span = whi - wlo;
        lo = wlo + 1e-9 * span;
        hi = whi - 1e-9 * span;
    }
    if (!(hi > lo))
        throw PreconditionError(
            "shoot_eigenvalue: bracket_hi must exceed bracket_lo");

    const int target = qn.n;
    auto above = [&](double E) {
        return integrate_once(v, params, qn, E, config).nodes > target;
    };

    bool alo = above(lo);
    const bool ahi = above(hi);
    if (alo == ahi) {
        // Scan for the transition; more than one means the count is not
        // monotone across this bracket and bisection cannot be trusted.
        constexpr int kScan = 24;
        double prev_e = lo;
        bool prev = alo;
        double t_lo = 0.0, t_hi = 0.0;
        int found = 0;
        for (int k = 1; k <= kScan; ++k) {
            const double e = lo + (hi - lo) * k / kScan;
            const bool cur = above(e);
            if (cur != prev) {
                ++found;
                t_lo = prev_e;
                t_hi = e;
            }
            prev = cur;
            prev_e = e;
        }
        if (found == 0)
            throw BracketError(
                "shoot_eigenvalue: no node-count transition inside "
                "bracket [" +
                std::to_string(lo) + ", " + std::to_string(hi) + "]");
        if (found > 1)
            throw AmbiguousBracket(
                "shoot_eigenvalue: node count changes direction inside "
                "the bracket; narrow it around one state");
        lo = t_lo;
        hi = t_hi;
        alo = above(lo);
    }

    for (int iter = 0; iter < 100; ++iter) {
        if (hi - lo <=
            config.tol * std::max({1.0, std::abs(lo), std::abs(hi)}))
            break;
        const double mid = 0.5 * (lo + hi);
        if (above(mid) == alo)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

double residual_profile(const RadialFunction& f, OdeVariant v,
                        const PhysicalParams& params, double E) {
    const SymmetryMode mode = variant_mode(v);
    const std::size_t npts = f.grid.size();
    if (npts < 3 || f.values.size() != npts)
        throw PreconditionError(
            "residual_profile: need at least 3 matching samples");
    Equation eq{v,
                mode,
                params,
                f.qn,
                E,
                reduced_coefficients(mode, params, f.qn, E),
                v == OdeVariant::FullUpper || v == OdeVariant::FullLower};

    double peak = 0.0;
    for (const double u : f.values) peak = std::max(peak, std::abs(u));
    const double scale = std::abs(eq.rc.eps_sq) * peak;
    if (scale == 0.0) return 0.0; // zero function (or window edge): degenerate

    double worst = 0.0;
    for (std::size_t i = 1; i + 1 < npts; ++i) {
        const double r = f.grid[i];
        double u, du, d2u;
        if (f.analytic) {
            u = f.analytic->value(r);
            du = f.analytic->derivative(r);
            d2u = f.analytic->second_derivative(r);
        } else {
            const double hl = f.grid[i] - f.grid[i - 1];
            const double hr = f.grid[i + 1] - f.grid[i];
            const double denom = hl * hr * (hl + hr);
            u = f.values[i];
            du = (f.values[i + 1] * hl * hl - f.values[i - 1] * hr * hr +
                  f.values[i] * (hr * hr - hl * hl)) /
                 denom;
            d2u = 2.0 *
                  (f.values[i - 1] * hr - f.values[i] * (hl + hr) +
                   f.values[i + 1] * hl) /
                  denom;
        }
        worst = std::max(worst, std::abs(d2u - eq.accel(r, u, du)));
    }
    return worst / scale;
}

VerificationReport approximation_audit(SymmetryMode mode,
                                       const PhysicalParams& params,
                                       const QuantumNumbers& qn,
                                       const ShootingConfig& config) {
    VerificationReport rep;
    rep.mode = mode;
    rep.reduced_variant = mode == SymmetryMode::Spin
                              ? OdeVariant::ReducedSpin
                              : OdeVariant::ReducedPseudospin;
    rep.full_variant = mode == SymmetryMode::Spin ? OdeVariant::FullUpper
                                                  : OdeVariant::FullLower;
    rep.params = params;
    rep.qn = qn;

    const EnergySolution sol = solve_energy(mode, params, qn);
    const RootInfo& root =
        mode == SymmetryMode::Spin ? sol.particle : sol.antiparticle;
    if (!root.bound())
        throw DomainError(
            "approximation_audit: requested state is not bound");
    rep.E_analytic = root.energy;

    const auto [wlo, whi] = bound_window(mode, params);
    const double span = whi - wlo;
    const bool auto_bracket =
        config.bracket_lo == 0.0 && config.bracket_hi == 0.0;

    auto shoot_near = [&](OdeVariant v) {
        if (!auto_bracket) return shoot_eigenvalue(v, params, qn, config);
        double h = 0.08 * span;
        for (int attempt = 0; attempt < 4; ++attempt) {
            ShootingConfig local = config;
            local.bracket_lo =
                std::max(wlo + 1e-9 * span, rep.E_analytic - h);
            local.bracket_hi =
                std::min(whi - 1e-9 * span, rep.E_analytic + h);
            try {
                return shoot_eigenvalue(v, params, qn, local);
            } catch (const BracketError&) {
                h *= 2.5; // state sits further out than the window guessed
            } catch (const AmbiguousBracket&) {
                h *= 0.4; // a second family intruded; tighten around ours
            }
        }
        return shoot_eigenvalue(v, params, qn, config);
    };

    rep.E_numeric = shoot_near(rep.reduced_variant);
    rep.abs_deviation = std::abs(rep.E_numeric - rep.E_analytic);
    rep.rel_deviation =
        rep.abs_deviation / std::max(1.0, std::abs(rep.E_analytic));

    const RadialFunction f =
        primary_wavefunction(mode, params, qn, rep.E_analytic);
    rep.residual_max =
        residual_profile(f, rep.reduced_variant, params, rep.E_analytic);

    try {
        rep.E_full = shoot_near(rep.full_variant);
        rep.approximation_gap = std::abs(rep.E_full - rep.E_numeric);
        rep.full_converged = true;
    } catch (const BracketError&) {
    } catch (const AmbiguousBracket&) {
    } catch (const SingularDenominator&) {
    } catch (const StiffnessError&) {
    }
    return rep;
}

} // namespace diracsol
