#include "diracsol/nu.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "diracsol/errors.hpp"
#include "diracsol/special.hpp"

namespace diracsol {

NuDerived derive_constants(const NuProblem& p) {
    NuDerived d;
    d.problem = p;

    d.c5 = (p.c3 - p.c1) / 2.0;
    d.c6 = (p.c2 - 2.0 * p.c4) / 2.0;
    d.c7 = d.c6 * d.c6 + p.xi1;
    d.c8 = 2.0 * d.c5 * d.c6 - p.xi2;
    d.c9 = d.c5 * d.c5 + p.xi3;
    d.c10 = p.c4 * (p.c3 * d.c8 + p.c4 * d.c9) + p.c3 * p.c3 * d.c7;

    if (d.c9 < 0.0)
        throw BranchError("derive_constants: c9 < 0, square root is complex");
    if (d.c10 < 0.0)
        throw BranchError("derive_constants: c10 < 0, square root is complex");

    // The two k roots annihilate the discriminant of the quadratic under
    // the square root of pi.
    double k_lo = 0.0, k_hi = 0.0;
    const double num_base = -(p.c3 * d.c8 + 2.0 * p.c4 * d.c9);
    const double num_off = 2.0 * std::sqrt(d.c9 * d.c10);
    if (p.c3 != 0.0) {
        k_lo = (num_base - num_off) / (p.c3 * p.c3);
        k_hi = (num_base + num_off) / (p.c3 * p.c3);
    } else if (num_base == 0.0 && num_off == 0.0) {
        // Fully degenerate template (e.g. all coefficients zero): both k
        // roots collapse to zero and the branch filter below rejects
        // everything.
        k_lo = k_hi = 0.0;
    } else {
        throw BranchError("derive_constants: degenerate template (c3 == 0)");
    }

    const double scale =
        1.0 + std::abs(d.c7) + std::abs(d.c8) + std::abs(d.c9) +
        std::abs(k_lo) * (std::abs(p.c3) + std::abs(p.c4)) +
        std::abs(k_hi) * (std::abs(p.c3) + std::abs(p.c4));

    d.branches.reserve(4);
    for (const double k : {k_lo, k_hi}) {
        // Linear factorization (alpha s + g0)^2 of the quadratic under the
        // square root; rounding can push alpha^2 slightly negative.
        double alpha_sq = d.c7 - k * p.c4;
        if (alpha_sq < 0.0 && alpha_sq > -1e-12 * scale) alpha_sq = 0.0;
        if (alpha_sq < 0.0) continue; // no real factorization for this k
        const double alpha = std::sqrt(alpha_sq);
        const double cross = d.c8 + k * p.c3;
        const double g0 = (cross >= 0.0 ? 1.0 : -1.0) * std::sqrt(d.c9);

        for (const int sign : {-1, +1}) {
            NuBranch br;
            br.k = k;
            br.k_upper = (k == k_hi && k_hi != k_lo);
            br.root_sign = sign;
            br.pi0 = d.c5 + sign * g0;
            br.pi1 = d.c6 + sign * alpha;
            br.tau0 = p.c1 + 2.0 * br.pi0;
            br.tau1 = -p.c2 + 2.0 * br.pi1;
            br.admissible = br.tau1 < 0.0 && br.pi0 > 0.0;
            d.branches.push_back(br);
        }
    }

    // Deduplicate (identical pi means identical solution family).
    auto same = [&](const NuBranch& a, const NuBranch& b) {
        const double t = 1e-12 * scale;
        return std::abs(a.pi0 - b.pi0) <= t && std::abs(a.pi1 - b.pi1) <= t &&
               std::abs(a.k - b.k) <= t;
    };
    std::vector<NuBranch> unique_branches;
    for (const auto& br : d.branches) {
        bool dup = false;
        for (const auto& u : unique_branches)
            if (same(br, u)) {
                dup = true;
                break;
            }
        if (!dup) unique_branches.push_back(br);
    }

    const NuBranch* best = nullptr;
    for (const auto& br : unique_branches) {
        if (!br.admissible) continue;
        if (!best || br.pi0 > best->pi0) best = &br;
    }
    if (best) {
        d.selected = *best;
        d.bound_branch = true;
    } else {
        // Fall back to the (k-, -) selection so the constants can still be
        // inspected; nothing downstream should treat it as a bound family.
        d.selected = d.branches.empty() ? NuBranch{} : d.branches.front();
        d.bound_branch = false;
    }

    const NuBranch& s = d.selected;
    if (p.c3 != 0.0) {
        d.c11 = (p.c1 + 2.0 * s.pi0 - p.c3) / p.c3;
        d.c13 = s.pi0 / p.c3;
        d.laguerre_limit = p.c4 == 0.0;
        if (d.laguerre_limit) {
            d.c15 = -s.tau1 / p.c3;
            d.c16 = -s.pi1 / p.c3;
        } else {
            const double r_star = p.c3 / p.c4;
            d.c12 = -(s.tau0 + s.tau1 * r_star + p.c3) / p.c3;
            d.c14 = -(s.pi0 + s.pi1 * r_star) / p.c3;
        }
    }
    return d;
}

double quantization_residual(const NuDerived& d, int n) {
    if (n < 0)
        throw DomainError("quantization_residual: level must be >= 0");
    const double lambda_n =
        -static_cast<double>(n) * d.selected.tau1 +
        static_cast<double>(n) * (n - 1.0) * d.problem.c4;
    const double lambda = d.selected.k + d.selected.pi1;
    return lambda_n - lambda;
}

double nu_phi(const NuDerived& d, double s) {
    if (!(s > 0.0))
        throw DomainError("nu_phi: argument must be positive");
    if (d.laguerre_limit)
        return std::pow(s, d.c13) * std::exp(-d.c16 * s);
    return std::pow(s, d.c13) *
           std::pow(d.problem.c3 - d.problem.c4 * s, *d.c14);
}

double nu_weight(const NuDerived& d, double s) {
    if (!(s > 0.0))
        throw DomainError("nu_weight: argument must be positive");
    if (d.laguerre_limit)
        return std::pow(s, d.c11) * std::exp(-d.c15 * s);
    return std::pow(s, d.c11) *
           std::pow(d.problem.c3 - d.problem.c4 * s, *d.c12);
}

double nu_polynomial(const NuDerived& d, int n, double s) {
    if (n < 0)
        throw DomainError("nu_polynomial: level must be >= 0");
    if (d.laguerre_limit) return laguerre(n, d.c11, d.c15 * s);
    return jacobi(n, d.c11, *d.c12,
                  1.0 - 2.0 * d.problem.c4 * s / d.problem.c3);
}

double nu_eigenfunction(const NuDerived& d, int n, double s) {
    return nu_phi(d, s) * nu_polynomial(d, n, s);
}

} // namespace diracsol
