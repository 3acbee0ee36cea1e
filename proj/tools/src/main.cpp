#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"

#include "commands.hpp"
#include "ranges.hpp"

namespace {

// Raw flag values as typed on the command line; range strings are expanded
// into a RunConfig only after parsing succeeds.
struct RawOptions {
    std::string mode = "spin";
    std::string n = "0";
    std::string kappa = "-1";
    std::string q = "1";
    std::string b = "0";
    std::string A = "0";
    std::string units = "natural";
    std::string format = "csv";
    std::string out;
    double m0 = 938.272;
    double hbarc = 197.327;
    double tol = 1e-6;
    double rmax = 0.0;
    int steps = 0;
    int jobs = 0;
    bool nonrel = false;
    bool swave = false;
    bool duality = false;
    bool constant = false;
    long long l = 0;
    std::string config_path;
};

void add_common(CLI::App* sub, RawOptions& o) {
    sub->add_option("--config", o.config_path,
                    "flat key=value file mirroring this command's flags; "
                    "flags override");
    sub->add_option("--mode", o.mode,
                    "symmetry sector: spin, pseudospin, or both")
        ->check(CLI::IsMember({"spin", "pseudospin", "both"}))
        ->capture_default_str();
    sub->add_option("--n", o.n, "radial levels: a,b,c or lo:hi")
        ->capture_default_str();
    sub->add_option("--kappa", o.kappa,
                    "kappa values, 0 excluded: a,b,c or lo:hi")
        ->capture_default_str();
    sub->add_option("--q", o.q, "potential strengths: a,b,c or lo:hi:count")
        ->capture_default_str();
    sub->add_option("--b", o.b, "mass-tail strengths: a,b,c or lo:hi:count")
        ->capture_default_str();
    sub->add_option("--A", o.A,
                    "constant symmetry offsets: a,b,c or lo:hi:count")
        ->capture_default_str();
    sub->add_option("--units", o.units, "natural or physical")
        ->check(CLI::IsMember({"natural", "physical"}))
        ->capture_default_str();
    sub->add_option("--m0", o.m0, "rest energy in MeV for --units physical")
        ->capture_default_str();
    sub->add_option("--hbarc", o.hbarc,
                    "hbar*c in MeV*fm for --units physical")
        ->capture_default_str();
    sub->add_option("--format", o.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    sub->add_option("--out", o.out, "output path (default: stdout)");
    sub->add_option("--tol", o.tol,
                    "verify pass threshold on |E_numeric - E_analytic|")
        ->capture_default_str();
    sub->add_option("--rmax", o.rmax,
                    "grid and integration cutoff (0 = automatic)");
    sub->add_option("--steps", o.steps,
                    "table points / integrator steps (0 = default)");
    sub->add_option("--jobs", o.jobs,
                    "worker threads (0 = one per hardware thread)");
}

std::string trimmed(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

bool full_stod(const std::string& s, double& out) {
    try {
        std::size_t pos = 0;
        out = std::stod(s, &pos);
        return pos == s.size();
    } catch (const std::exception&) {
        return false;
    }
}

bool full_stoll(const std::string& s, long long& out) {
    try {
        std::size_t pos = 0;
        out = std::stoll(s, &pos);
        return pos == s.size();
    } catch (const std::exception&) {
        return false;
    }
}

// Apply a flat key=value file to the options of one subcommand. Keys
// mirror the flag names; a key whose flag was also given on the command
// line is skipped, so flags override the file. CLI11 2.4.2 accepts
// set_config on a subcommand but never reads the file (only the top-level
// app processes config files), hence this explicit reader.
int apply_config(CLI::App* sub, RawOptions& o) {
    if (o.config_path.empty())
        return 0;
    std::ifstream in(o.config_path);
    if (!in) {
        std::cerr << "error: cannot open config file '" << o.config_path
                  << "'\n";
        return 2;
    }

    using Setter = std::function<bool(const std::string&, RawOptions&)>;
    auto str = [](std::string RawOptions::* f) {
        return Setter([f](const std::string& v, RawOptions& r) {
            r.*f = v;
            return true;
        });
    };
    auto member = [](std::string RawOptions::* f,
                     std::vector<std::string> allowed) {
        return Setter([f, allowed](const std::string& v, RawOptions& r) {
            for (const std::string& a : allowed)
                if (v == a) {
                    r.*f = v;
                    return true;
                }
            return false;
        });
    };
    auto num = [](double RawOptions::* f) {
        return Setter([f](const std::string& v, RawOptions& r) {
            return full_stod(v, r.*f);
        });
    };
    auto flag = [](bool RawOptions::* f) {
        return Setter([f](const std::string& v, RawOptions& r) {
            if (v == "1" || v == "true") {
                r.*f = true;
                return true;
            }
            if (v == "0" || v == "false") {
                r.*f = false;
                return true;
            }
            return false;
        });
    };
    const std::map<std::string, Setter> setters = {
        {"mode", member(&RawOptions::mode, {"spin", "pseudospin", "both"})},
        {"n", str(&RawOptions::n)},
        {"kappa", str(&RawOptions::kappa)},
        {"q", str(&RawOptions::q)},
        {"b", str(&RawOptions::b)},
        {"A", str(&RawOptions::A)},
        {"units", member(&RawOptions::units, {"natural", "physical"})},
        {"m0", num(&RawOptions::m0)},
        {"hbarc", num(&RawOptions::hbarc)},
        {"format", member(&RawOptions::format, {"csv", "json"})},
        {"out", str(&RawOptions::out)},
        {"tol", num(&RawOptions::tol)},
        {"rmax", num(&RawOptions::rmax)},
        {"nonrel", flag(&RawOptions::nonrel)},
        {"swave", flag(&RawOptions::swave)},
        {"duality", flag(&RawOptions::duality)},
        {"constant", flag(&RawOptions::constant)},
        {"steps",
         Setter([](const std::string& v, RawOptions& r) {
             long long x = 0;
             if (!full_stoll(v, x))
                 return false;
             r.steps = static_cast<int>(x);
             return true;
         })},
        {"jobs",
         Setter([](const std::string& v, RawOptions& r) {
             long long x = 0;
             if (!full_stoll(v, x))
                 return false;
             r.jobs = static_cast<int>(x);
             return true;
         })},
        {"l",
         Setter([](const std::string& v, RawOptions& r) {
             return full_stoll(v, r.l);
         })},
    };

    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string text = trimmed(line);
        if (text.empty() || text[0] == '#' || text[0] == ';')
            continue;
        const auto eq = text.find('=');
        if (eq == std::string::npos) {
            std::cerr << "error: " << o.config_path << ":" << lineno
                      << ": expected key=value\n";
            return 2;
        }
        const std::string key = trimmed(text.substr(0, eq));
        std::string value = trimmed(text.substr(eq + 1));
        if (value.size() >= 2 && value.front() == '"' &&
            value.back() == '"')
            value = value.substr(1, value.size() - 2);

        const auto it = setters.find(key);
        const CLI::Option* opt = sub->get_option_no_throw("--" + key);
        if (it == setters.end() || opt == nullptr) {
            std::cerr << "error: " << o.config_path << ":" << lineno
                      << ": unknown config key '" << key << "'\n";
            return 2;
        }
        if (opt->count() > 0)
            continue; // the command line set this one
        if (!it->second(value, o)) {
            std::cerr << "error: " << o.config_path << ":" << lineno
                      << ": invalid value '" << value << "' for '" << key
                      << "'\n";
            return 2;
        }
    }
    return 0;
}

int to_config(const RawOptions& o, dcli::RunConfig& cfg) {
    try {
        cfg.n_values = dcli::parse_int_range(o.n);
        cfg.kappa_values = dcli::parse_int_range(o.kappa);
        cfg.q_values = dcli::parse_double_range(o.q);
        cfg.b_values = dcli::parse_double_range(o.b);
        cfg.A_values = dcli::parse_double_range(o.A);
    } catch (const dcli::RangeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    std::erase(cfg.kappa_values, 0);
    if (cfg.kappa_values.empty()) {
        std::cerr << "error: kappa range is empty after excluding 0\n";
        return 2;
    }
    for (long long n : cfg.n_values)
        if (n < 0) {
            std::cerr << "error: n must be >= 0\n";
            return 2;
        }
    if (o.mode == "both")
        cfg.modes = {diracsol::SymmetryMode::Spin,
                     diracsol::SymmetryMode::Pseudospin};
    else if (o.mode == "pseudospin")
        cfg.modes = {diracsol::SymmetryMode::Pseudospin};
    else
        cfg.modes = {diracsol::SymmetryMode::Spin};

    cfg.units = o.units;
    cfg.m0 = o.m0;
    cfg.hbarc = o.hbarc;
    cfg.format = o.format;
    cfg.out_path = o.out;
    cfg.tol = o.tol;
    cfg.rmax = o.rmax;
    cfg.steps = o.steps;
    cfg.jobs = o.jobs;
    cfg.lim_nonrel = o.nonrel;
    cfg.lim_swave = o.swave;
    cfg.lim_duality = o.duality;
    cfg.lim_constant = o.constant;
    cfg.l_value = o.l;
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Bound states of the Dirac equation with a Coulomb-like potential "
        "and a 1/r mass tail: closed-form spectra and wavefunctions, "
        "cross-checked by a shooting integrator."};
    app.require_subcommand(1);

    RawOptions spect, wave, veri, swee, limi;
    veri.mode = "both";
    veri.n = "0:3";
    veri.kappa = "-2,-1,1,2";
    veri.q = "0.5,1";
    veri.b = "0,0.1,0.3";
    veri.A = "0,0.2";
    swee = veri;
    limi.mode = "both";
    limi.n = "0:3";
    limi.kappa = "-2,-1,1,2";

    CLI::App* c_spectrum = app.add_subcommand(
        "spectrum", "closed-form energies over a parameter grid");
    add_common(c_spectrum, spect);
    CLI::App* c_wavefunction = app.add_subcommand(
        "wavefunction",
        "tabulate the normalized bound-state radial component");
    add_common(c_wavefunction, wave);
    CLI::App* c_verify = app.add_subcommand(
        "verify",
        "cross-check closed-form energies against the shooting integrator");
    add_common(c_verify, veri);
    CLI::App* c_sweep = app.add_subcommand(
        "sweep", "spectrum over a grid, evaluated on a worker pool");
    add_common(c_sweep, swee);
    CLI::App* c_limits = app.add_subcommand(
        "limits", "closed-form special slices of the spectrum");
    add_common(c_limits, limi);
    c_limits->add_flag("--nonrel", limi.nonrel,
                       "nonrelativistic-limit level and wavefunction");
    c_limits->add_flag("--swave", limi.swave,
                       "lowest angular channel in both sectors");
    c_limits->add_flag("--duality", limi.duality,
                       "variable-mass vs constant-mass spectra at q = b/2");
    c_limits->add_flag("--constant", limi.constant,
                       "constant-mass spectra at b = 0, A = 0");
    c_limits->add_option("--l", limi.l, "orbital quantum number for --nonrel")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    CLI::App* active_sub = c_spectrum->parsed()       ? c_spectrum
                           : c_wavefunction->parsed() ? c_wavefunction
                           : c_verify->parsed()       ? c_verify
                           : c_sweep->parsed()        ? c_sweep
                                                      : c_limits;
    RawOptions& active = c_spectrum->parsed()       ? spect
                         : c_wavefunction->parsed() ? wave
                         : c_verify->parsed()       ? veri
                         : c_sweep->parsed()        ? swee
                                                    : limi;
    if (const int rc = apply_config(active_sub, active); rc != 0)
        return rc;
    dcli::RunConfig cfg;
    if (const int rc = to_config(active, cfg); rc != 0)
        return rc;

    try {
        if (c_spectrum->parsed())
            return dcli::run_spectrum(cfg, /*parallel_default=*/false);
        if (c_sweep->parsed())
            return dcli::run_spectrum(cfg, /*parallel_default=*/true);
        if (c_wavefunction->parsed())
            return dcli::run_wavefunction(cfg);
        if (c_verify->parsed())
            return dcli::run_verify(cfg);
        return dcli::run_limits(cfg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
