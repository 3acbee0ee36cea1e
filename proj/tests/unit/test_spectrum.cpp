#include <cmath>

#include "diracsol/errors.hpp"
#include "diracsol/model.hpp"
#include "diracsol/spectrum.hpp"
#include "doctest.h"

using namespace diracsol;

namespace {

PhysicalParams natural(double b, double q, double A = 0.0) {
    PhysicalParams p;
    p.b = b;
    p.q = q;
    p.A = A;
    return p;
}

} // namespace

TEST_CASE("constant-mass spin spectrum: hydrogen-like particle root plus "
          "the formal -m root") {
    const PhysicalParams p = natural(0.0, 1.0);
    const QuantumNumbers qn = map_kappa(-1, 0);
    const EnergySolution sol = solve_energy(SymmetryMode::Spin, p, qn);

    CHECK(sol.B_nk == doctest::Approx(1.0));
    CHECK(sol.particle.energy == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(sol.antiparticle.energy == doctest::Approx(-1.0));
    CHECK(sol.particle.bound());
    CHECK_FALSE(sol.antiparticle.bound());
    CHECK_FALSE(sol.antiparticle.eps_positive); // eps^2 = 0 exactly at -m
    CHECK(std::abs(sol.particle.residual) < 1e-10);

    const auto [hi, lo] = energy_constant_mass(SymmetryMode::Spin, p, qn);
    CHECK(hi == doctest::Approx(sol.particle.energy).epsilon(1e-12));
    CHECK(lo == doctest::Approx(sol.antiparticle.energy).epsilon(1e-12));
}

TEST_CASE("constant-mass spin ladder matches (B^2-q^2)/(B^2+q^2)") {
    const PhysicalParams p = natural(0.0, 1.0);
    for (int n : {0, 1, 2}) {
        for (int kappa : {-3, -2, -1, 1, 2}) {
            const QuantumNumbers qn = map_kappa(kappa, n);
            const EnergySolution sol =
                solve_energy(SymmetryMode::Spin, p, qn);
            const double B = n + qn.l + 1.0;
            CHECK(sol.particle.energy ==
                  doctest::Approx((B * B - 1.0) / (B * B + 1.0))
                      .epsilon(1e-12));
        }
    }
}

TEST_CASE("pseudospin constant-mass state: bound root is the negative one") {
    const PhysicalParams p = natural(0.0, 1.0);
    const QuantumNumbers qn = map_kappa(1, 1); // l_tilde = 0
    const EnergySolution sol = solve_energy(SymmetryMode::Pseudospin, p, qn);

    CHECK(sol.particle.energy == doctest::Approx(1.0));
    CHECK(sol.antiparticle.energy == doctest::Approx(-0.6).epsilon(1e-12));
    CHECK_FALSE(sol.particle.bound()); // eps^2 = 0 at +m
    CHECK(sol.antiparticle.bound());
    CHECK(std::abs(sol.antiparticle.residual) < 1e-10);

    const auto [hi, lo] =
        energy_constant_mass(SymmetryMode::Pseudospin, p, qn);
    CHECK(hi == doctest::Approx(1.0));
    CHECK(lo == doctest::Approx(-0.6).epsilon(1e-12));
}

TEST_CASE("energy_constant_mass guards its specialization") {
    CHECK_THROWS_AS(energy_constant_mass(SymmetryMode::Spin,
                                         natural(0.1, 1.0), map_kappa(-1)),
                    PreconditionError);
    CHECK_THROWS_AS(energy_constant_mass(SymmetryMode::Spin,
                                         natural(0.0, 1.0, 0.2),
                                         map_kappa(-1)),
                    PreconditionError);
}

TEST_CASE("radical form of the A = 0 spin spectrum agrees with the "
          "quadratic solve") {
    const PhysicalParams p = natural(0.1, 1.0);
    for (int n : {0, 1, 2}) {
        for (int kappa : {-3, -2, -1, 1, 2}) {
            const QuantumNumbers qn = map_kappa(kappa, n);
            const auto [ep, em] = energy_A0_spin(p, qn);
            const EnergySolution sol =
                solve_energy(SymmetryMode::Spin, p, qn);
            CHECK(ep ==
                  doctest::Approx(sol.particle.energy).epsilon(1e-12));
            CHECK(em ==
                  doctest::Approx(sol.antiparticle.energy).epsilon(1e-12));
        }
    }
}

TEST_CASE("frozen value: mass tail b = 0.1 shifts the n=0, kappa=-2 level "
          "to 0.619373") {
    const PhysicalParams p = natural(0.1, 1.0);
    const EnergySolution sol =
        solve_energy(SymmetryMode::Spin, p, map_kappa(-2, 0));
    CHECK(sol.particle.energy ==
          doctest::Approx(0.619373).epsilon(1e-5));
    CHECK(sol.particle.bound());
    CHECK(std::abs(sol.particle.residual) < 1e-10);
}

TEST_CASE("complex index raises, including through the radical form") {
    // b(b - 2q) < -(kappa + 1/2)^2 makes the index complex for kappa = -1.
    const PhysicalParams p = natural(0.4, 2.0);
    CHECK_THROWS_AS(solve_energy(SymmetryMode::Spin, p, map_kappa(-1)),
                    ComplexIndexError);
    CHECK_THROWS_AS(energy_A0_spin(p, map_kappa(-1)), ComplexIndexError);
}

TEST_CASE("s-wave closed forms replicate the generic solver on their "
          "channels") {
    // Keep b(b - 2q) > -1/4 so the spin s-channel index stays real over
    // the whole grid; the complex case is asserted separately below.
    for (double b : {0.0, 0.05, 0.1}) {
        for (double q : {0.5, 1.0}) {
            for (double A : {0.0, 0.1}) {
                for (int n : {0, 1, 2}) {
                    const PhysicalParams p = natural(b, q, A);
                    const double es =
                        s_wave_energy(SymmetryMode::Spin, p, n);
                    const EnergySolution ss = solve_energy(
                        SymmetryMode::Spin, p, map_kappa(-1, n));
                    CHECK(es == doctest::Approx(ss.particle.energy)
                                    .epsilon(1e-12));

                    const double ep =
                        s_wave_energy(SymmetryMode::Pseudospin, p, n);
                    const EnergySolution sp = solve_energy(
                        SymmetryMode::Pseudospin, p, map_kappa(1, n));
                    CHECK(ep == doctest::Approx(sp.antiparticle.energy)
                                    .epsilon(1e-12));
                }
            }
        }
    }
}

TEST_CASE("frozen value: pseudospin s-channel first excited level is -0.6") {
    CHECK(s_wave_energy(SymmetryMode::Pseudospin, natural(0.0, 1.0), 1) ==
          doctest::Approx(-0.6).epsilon(1e-12));
}

TEST_CASE("s-wave spin channel raises on a complex index like the solver") {
    CHECK_THROWS_AS(s_wave_energy(SymmetryMode::Spin, natural(0.15, 1.0), 0),
                    ComplexIndexError);
}

TEST_CASE("sector map sends pseudospin roots to negated spin roots") {
    const PhysicalParams p = natural(0.3, 0.8, 0.1);
    for (int kappa : {-2, -1, 1, 2}) {
        for (int n : {0, 1}) {
            const QuantumNumbers qn = map_kappa(kappa, n);
            const EnergySolution pseudo =
                solve_energy(SymmetryMode::Pseudospin, p, qn);

            PhysicalParams mapped = p;
            mapped.q = -p.q;
            mapped.A = -p.A;
            const EnergySolution spin = solve_energy(
                SymmetryMode::Spin, mapped, component_swap(qn));

            CHECK(spin.particle.energy ==
                  doctest::Approx(-pseudo.antiparticle.energy)
                      .epsilon(1e-13));
            CHECK(spin.antiparticle.energy ==
                  doctest::Approx(-pseudo.particle.energy).epsilon(1e-13));
        }
    }
}

TEST_CASE("closed-form residual vanishes only on the quantized branch") {
    const PhysicalParams p = natural(0.1, 1.0, 0.05);
    const QuantumNumbers qn = map_kappa(-2, 1);
    const EnergySolution sol = solve_energy(SymmetryMode::Spin, p, qn);
    REQUIRE(sol.particle.bound());
    CHECK(std::abs(sol.particle.residual) < 1e-10);

    // Off-eigenvalue energies leave a visible residual.
    const ReducedCoefficients rc = reduced_coefficients(
        SymmetryMode::Spin, p, qn, sol.particle.energy + 0.05);
    CHECK(std::abs(closed_form_residual(rc, qn.n)) > 1e-3);
}

TEST_CASE("nonrelativistic limit formula, frozen spot value") {
    const PhysicalParams p = natural(0.1, 1.0);
    // -(1/2)(0.9)^2 / (1/2 + sqrt(1/4 - 0.19))^2
    CHECK(nonrelativistic_energy(p, 0, 0) ==
          doctest::Approx(-0.7297968).epsilon(1e-6));
    CHECK_THROWS_AS(nonrelativistic_energy(p, -1, 0), DomainError);
    CHECK_THROWS_AS(nonrelativistic_energy(natural(0.4, 2.0), 0, 0),
                    ComplexIndexError);
}

TEST_CASE("weak-coupling binding approaches the nonrelativistic value with "
          "the doubled potential strength") {
    // The reduced spin equation carries -2q/r, so the matching
    // nonrelativistic problem sees coupling 2q.
    const double q = 0.02;
    PhysicalParams p = natural(0.0, q);
    PhysicalParams doubled = natural(0.0, 2.0 * q);
    for (int n : {0, 1}) {
        const EnergySolution sol =
            solve_energy(SymmetryMode::Spin, p, map_kappa(-1, n));
        const double binding = sol.particle.energy - 1.0;
        const double nr = nonrelativistic_energy(doubled, n, 0);
        CHECK(binding == doctest::Approx(nr).epsilon(5.0 * q * q));
    }
}

TEST_CASE("physical units scale energies by m0c2") {
    PhysicalParams nat = natural(0.05, 0.9, 0.1);
    PhysicalParams phys = nat;
    phys.m0c2 = 938.272;
    phys.hbar_c = 197.327;
    phys.A = 0.1 * 938.272; // same dimensionless offset
    const QuantumNumbers qn = map_kappa(-1, 1);
    const EnergySolution a = solve_energy(SymmetryMode::Spin, nat, qn);
    const EnergySolution b = solve_energy(SymmetryMode::Spin, phys, qn);
    CHECK(b.particle.energy ==
          doctest::Approx(938.272 * a.particle.energy).epsilon(1e-12));
    CHECK(b.antiparticle.energy ==
          doctest::Approx(938.272 * a.antiparticle.energy).epsilon(1e-12));
}

TEST_CASE("duality slice q = b/2: variable-mass and constant-mass spectra "
          "are negatives of each other") {
    PhysicalParams p = natural(2.0, 1.0); // b = 2, q = 1
    for (int n : {0, 1, 2}) {
        for (int kappa : {-2, -1, 1, 2}) {
            const QuantumNumbers qn = map_kappa(kappa, n);
            const auto [varmass, flat] = duality_spectra(p, qn);

            // spectrum_1 = -reverse(spectrum_2), elementwise.
            CHECK(varmass.particle.energy ==
                  doctest::Approx(-flat.antiparticle.energy).epsilon(1e-12));
            CHECK(varmass.antiparticle.energy ==
                  doctest::Approx(-flat.particle.energy).epsilon(1e-12));

            // With b(b-2q) = 0 the index collapses to l in both problems.
            CHECK(varmass.index == doctest::Approx(flat.index).epsilon(1e-12));
            CHECK(varmass.B_nk == doctest::Approx(flat.B_nk).epsilon(1e-12));
        }
    }
}

TEST_CASE("duality slice values at n=0, kappa=-1: {+m, -R} vs {+R, -m}") {
    PhysicalParams p = natural(2.0, 1.0);
    const QuantumNumbers qn = map_kappa(-1, 0);
    const auto [varmass, flat] = duality_spectra(p, qn);
    const double B = 1.0;
    const double R = (B * B - 1.0) / (B * B + 1.0); // = 0 here

    CHECK(varmass.particle.energy == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(varmass.antiparticle.energy == doctest::Approx(-R).epsilon(1e-12));
    CHECK(flat.particle.energy == doctest::Approx(R).epsilon(1e-12));
    CHECK(flat.antiparticle.energy == doctest::Approx(-1.0).epsilon(1e-12));

    // On this slice the attraction flips sign in the reduced problem:
    // neither variable-mass root supports a normalizable state.
    CHECK_FALSE(varmass.particle.bound());
    CHECK_FALSE(varmass.antiparticle.bound());
    CHECK(flat.particle.bound());
}

TEST_CASE("duality_spectra rejects off-slice parameters") {
    CHECK_THROWS_AS(duality_spectra(natural(2.0, 0.9), map_kappa(-1, 0)),
                    PreconditionError);
    CHECK_THROWS_AS(duality_spectra(natural(2.0, 1.0, 0.3), map_kappa(-1, 0)),
                    PreconditionError);
}
