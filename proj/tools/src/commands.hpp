#pragma once

#include <string>
#include <vector>

#include "diracsol/model.hpp"

namespace dcli {

// Fully parsed invocation. Ranges are already expanded; kappa has been
// filtered of the forbidden 0 before any command runs.
struct RunConfig {
    std::vector<diracsol::SymmetryMode> modes;
    std::vector<long long> n_values;
    std::vector<long long> kappa_values;
    std::vector<double> q_values;
    std::vector<double> b_values;
    std::vector<double> A_values;

    std::string units = "natural"; // "natural" | "physical"
    double m0 = 938.272;           // MeV, used when units == physical
    double hbarc = 197.327;        // MeV*fm, used when units == physical

    std::string format = "csv"; // "csv" | "json"
    std::string out_path;       // empty -> stdout

    double tol = 1e-6; // verify pass threshold / norm-check tolerance
    double rmax = 0.0; // 0 -> automatic
    int steps = 0;     // 0 -> module default (tables 2000, shooting 6000)
    int jobs = 0;      // 0 -> one per hardware thread (sweep/verify)

    // limits selectors + the extra orbital quantum number --nonrel needs
    bool lim_nonrel = false;
    bool lim_swave = false;
    bool lim_duality = false;
    bool lim_constant = false;
    long long l_value = 0;

    double m0c2() const { return units == "physical" ? m0 : 1.0; }
    double hbar_c() const { return units == "physical" ? hbarc : 1.0; }
};

int run_spectrum(const RunConfig& cfg, bool parallel_default);
int run_wavefunction(const RunConfig& cfg);
int run_verify(const RunConfig& cfg);
int run_limits(const RunConfig& cfg);

} // namespace dcli
