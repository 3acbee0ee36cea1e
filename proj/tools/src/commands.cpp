#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <thread>
#include <utility>

#include "diracsol/errors.hpp"
#include "diracsol/oracle.hpp"
#include "diracsol/spectrum.hpp"
#include "diracsol/wavefunctions.hpp"
#include "format.hpp"

namespace dcli {

using namespace diracsol;

namespace {

// Explicit-alternative constructors: the variant's converting constructor
// would be ambiguous for integer literals (long long vs double).
Cell icell(long long v) { return Cell{std::in_place_type<long long>, v}; }
Cell fcell(double v) { return Cell{std::in_place_type<double>, v}; }
Cell scell(std::string s) {
    return Cell{std::in_place_type<std::string>, std::move(s)};
}
Cell num(double v) { return std::isnan(v) ? Cell{} : fcell(v); }

const char* mode_name(SymmetryMode m) {
    return m == SymmetryMode::Spin ? "spin" : "pseudospin";
}

const char* variant_name(OdeVariant v) {
    switch (v) {
    case OdeVariant::ReducedSpin:
        return "reduced_spin";
    case OdeVariant::ReducedPseudospin:
        return "reduced_pseudospin";
    case OdeVariant::FullUpper:
        return "full_upper";
    case OdeVariant::FullLower:
        return "full_lower";
    }
    return "?";
}

// The root the mode singles out as the bound-state candidate: the upper
// branch for spin symmetry, the lower one for pseudospin.
const RootInfo& canonical_root(const EnergySolution& sol) {
    return sol.mode == SymmetryMode::Spin ? sol.particle : sol.antiparticle;
}

PhysicalParams make_params(const RunConfig& cfg, double q, double b,
                           double A) {
    PhysicalParams p;
    p.m0c2 = cfg.m0c2();
    p.hbar_c = cfg.hbar_c();
    p.q = q;
    p.b = b;
    p.A = A;
    return p;
}

template <typename T, typename Fn>
std::string join(const std::vector<T>& values, Fn&& fmt) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i)
            out += ',';
        out += fmt(values[i]);
    }
    return out;
}

Metadata common_meta(const RunConfig& cfg, const std::string& command) {
    Metadata m;
    m.emplace_back("command", command);
    m.emplace_back("units", cfg.units);
    m.emplace_back("m0c2", float_str(cfg.m0c2()));
    m.emplace_back("hbarc", float_str(cfg.hbar_c()));
    return m;
}

void add_range_meta(Metadata& m, const RunConfig& cfg) {
    m.emplace_back("mode", join(cfg.modes, [](SymmetryMode s) {
                       return std::string(mode_name(s));
                   }));
    m.emplace_back("n", join(cfg.n_values, [](long long v) {
                       return std::to_string(v);
                   }));
    m.emplace_back("kappa", join(cfg.kappa_values, [](long long v) {
                       return std::to_string(v);
                   }));
    m.emplace_back("q", join(cfg.q_values, float_str));
    m.emplace_back("b", join(cfg.b_values, float_str));
    m.emplace_back("A", join(cfg.A_values, float_str));
}

int with_sink(const RunConfig& cfg,
              const std::function<void(std::ostream&)>& emit) {
    if (cfg.out_path.empty()) {
        emit(std::cout);
        return std::cout ? 0 : 2;
    }
    std::ofstream os(cfg.out_path, std::ios::binary);
    if (!os) {
        std::cerr << "error: cannot open output path '" << cfg.out_path
                  << "'\n";
        return 2;
    }
    emit(os);
    os.flush();
    if (!os) {
        std::cerr << "error: write failed for '" << cfg.out_path << "'\n";
        return 2;
    }
    return 0;
}

int emit_table(const RunConfig& cfg, const Metadata& meta,
               const std::vector<std::string>& columns,
               const std::vector<Row>& rows) {
    return with_sink(cfg, [&](std::ostream& os) {
        if (cfg.format == "json")
            write_json(os, columns, rows);
        else
            write_csv(os, meta, columns, rows);
    });
}

// Bounded pool: workers pull indices from an atomic counter; results land
// in preallocated slots, so output order never depends on scheduling.
void run_pool(int jobs, std::size_t count,
              const std::function<void(std::size_t)>& work) {
    std::size_t nt = jobs > 0
                         ? static_cast<std::size_t>(jobs)
                         : std::max(1u, std::thread::hardware_concurrency());
    nt = std::min(nt, count);
    if (nt <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            work(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> threads;
    threads.reserve(nt);
    for (std::size_t t = 0; t < nt; ++t)
        threads.emplace_back([&] {
            while (true) {
                const std::size_t i = next.fetch_add(1);
                if (i >= count)
                    return;
                work(i);
            }
        });
    for (auto& th : threads)
        th.join();
}

struct CaseKey {
    SymmetryMode mode = SymmetryMode::Spin;
    long long n = 0;
    long long kappa = -1;
    double q = 0.0;
    double b = 0.0;
    double A = 0.0;
};

// Deterministic key order: mode, n, kappa, q, b, A — each in the order
// the ranges were given.
std::vector<CaseKey> enumerate_cases(const RunConfig& cfg) {
    std::vector<CaseKey> out;
    out.reserve(cfg.modes.size() * cfg.n_values.size() *
                cfg.kappa_values.size() * cfg.q_values.size() *
                cfg.b_values.size() * cfg.A_values.size());
    for (SymmetryMode mode : cfg.modes)
        for (long long n : cfg.n_values)
            for (long long kappa : cfg.kappa_values)
                for (double q : cfg.q_values)
                    for (double b : cfg.b_values)
                        for (double A : cfg.A_values)
                            out.push_back({mode, n, kappa, q, b, A});
    return out;
}

std::string case_label(const CaseKey& k) {
    std::string s = "mode=";
    s += mode_name(k.mode);
    s += " n=" + std::to_string(k.n);
    s += " kappa=" + std::to_string(k.kappa);
    s += " q=" + float_str(k.q);
    s += " b=" + float_str(k.b);
    s += " A=" + float_str(k.A);
    return s;
}

const std::vector<std::string> kSpectrumColumns = {
    "mode",       "n",     "kappa",          "l",
    "ltilde",     "q",     "b",              "A",
    "E_particle", "E_antiparticle", "epsilon", "index",
    "valid",      "residual"};

Row spectrum_row(const RunConfig& cfg, const CaseKey& k) {
    const PhysicalParams p = make_params(cfg, k.q, k.b, k.A);
    const QuantumNumbers qn =
        map_kappa(static_cast<int>(k.kappa), static_cast<int>(k.n));
    Row row;
    row.push_back(scell(mode_name(k.mode)));
    row.push_back(icell(k.n));
    row.push_back(icell(k.kappa));
    row.push_back(icell(qn.l));
    row.push_back(icell(qn.l_tilde));
    row.push_back(fcell(k.q));
    row.push_back(fcell(k.b));
    row.push_back(fcell(k.A));
    std::string status;
    try {
        const EnergySolution sol = solve_energy(k.mode, p, qn);
        const RootInfo& canon = canonical_root(sol);
        const ReducedCoefficients rc =
            reduced_coefficients(k.mode, p, qn, canon.energy);
        row.push_back(fcell(sol.particle.energy));
        row.push_back(fcell(sol.antiparticle.energy));
        row.push_back(num(rc.epsilon));
        row.push_back(fcell(sol.index));
        row.push_back(scell(canon.bound() ? "ok" : "not_bound"));
        row.push_back(num(canon.residual));
        return row;
    } catch (const ComplexIndexError&) {
        status = "complex_index";
    } catch (const NoRealSolution&) {
        status = "no_real_root";
    } catch (const std::exception&) {
        status = "error";
    }
    row.push_back(Cell{}); // E_particle
    row.push_back(Cell{}); // E_antiparticle
    row.push_back(Cell{}); // epsilon
    row.push_back(Cell{}); // index
    row.push_back(scell(status));
    row.push_back(Cell{}); // residual
    return row;
}

} // namespace

int run_spectrum(const RunConfig& cfg, bool parallel_default) {
    const std::vector<CaseKey> cases = enumerate_cases(cfg);
    std::vector<Row> rows(cases.size());
    const int jobs = cfg.jobs > 0 ? cfg.jobs : (parallel_default ? 0 : 1);
    run_pool(jobs, cases.size(),
             [&](std::size_t i) { rows[i] = spectrum_row(cfg, cases[i]); });

    Metadata meta =
        common_meta(cfg, parallel_default ? "sweep" : "spectrum");
    add_range_meta(meta, cfg);
    return emit_table(cfg, meta, kSpectrumColumns, rows);
}

int run_verify(const RunConfig& cfg) {
    struct VCase {
        CaseKey key;
        double E_analytic = 0.0;
    };

    // Keep only regimes where the closed form actually claims a bound
    // state; everything else has nothing to cross-check.
    std::vector<VCase> cases;
    for (const CaseKey& k : enumerate_cases(cfg)) {
        const PhysicalParams p = make_params(cfg, k.q, k.b, k.A);
        const QuantumNumbers qn =
            map_kappa(static_cast<int>(k.kappa), static_cast<int>(k.n));
        try {
            const EnergySolution sol = solve_energy(k.mode, p, qn);
            const RootInfo& canon = canonical_root(sol);
            if (canon.bound())
                cases.push_back({k, canon.energy});
        } catch (const std::exception&) {
        }
    }

    ShootingConfig shoot;
    if (cfg.steps > 0)
        shoot.steps = cfg.steps;
    if (cfg.rmax > 0)
        shoot.r_max = cfg.rmax;

    const std::vector<std::string> columns = {
        "mode", "n",          "kappa",     "q",       "b",
        "A",    "variant",    "E_analytic", "E_numeric", "abs_dev",
        "rel_dev", "residual_max", "approximation_gap", "pass"};

    std::vector<Row> rows(cases.size());
    std::vector<std::string> violations(cases.size());
    run_pool(cfg.jobs, cases.size(), [&](std::size_t i) {
        const VCase& vc = cases[i];
        const PhysicalParams p =
            make_params(cfg, vc.key.q, vc.key.b, vc.key.A);
        const QuantumNumbers qn = map_kappa(static_cast<int>(vc.key.kappa),
                                            static_cast<int>(vc.key.n));
        Row row;
        row.push_back(scell(mode_name(vc.key.mode)));
        row.push_back(icell(vc.key.n));
        row.push_back(icell(vc.key.kappa));
        row.push_back(fcell(vc.key.q));
        row.push_back(fcell(vc.key.b));
        row.push_back(fcell(vc.key.A));
        try {
            const VerificationReport rep =
                approximation_audit(vc.key.mode, p, qn, shoot);
            const bool pass = rep.abs_deviation < cfg.tol;
            row.push_back(scell(variant_name(rep.reduced_variant)));
            row.push_back(fcell(rep.E_analytic));
            row.push_back(fcell(rep.E_numeric));
            row.push_back(fcell(rep.abs_deviation));
            row.push_back(fcell(rep.rel_deviation));
            row.push_back(fcell(rep.residual_max));
            row.push_back(rep.full_converged ? num(rep.approximation_gap)
                                             : Cell{});
            row.push_back(icell(pass ? 1 : 0));
            if (!pass)
                violations[i] = case_label(vc.key) +
                                " abs_dev=" + float_str(rep.abs_deviation);
        } catch (const std::exception& e) {
            row.push_back(scell(vc.key.mode == SymmetryMode::Spin
                                    ? "reduced_spin"
                                    : "reduced_pseudospin"));
            row.push_back(fcell(vc.E_analytic));
            for (int c = 0; c < 5; ++c)
                row.push_back(Cell{});
            row.push_back(icell(0));
            violations[i] =
                case_label(vc.key) + " no numeric eigenvalue (" + e.what() +
                ")";
        }
        rows[i] = row;
    });

    Metadata meta = common_meta(cfg, "verify");
    add_range_meta(meta, cfg);
    meta.emplace_back("tol", float_str(cfg.tol));
    meta.emplace_back("cases", std::to_string(cases.size()));

    const int sink_rc = emit_table(cfg, meta, columns, rows);
    if (sink_rc != 0)
        return sink_rc;

    std::vector<std::string> listed;
    for (const std::string& v : violations)
        if (!v.empty())
            listed.push_back(v);
    if (!listed.empty()) {
        std::cerr << "verification failed for " << listed.size() << " of "
                  << cases.size() << " case(s):\n";
        for (const std::string& v : listed)
            std::cerr << "  " << v << "\n";
        return 1;
    }
    std::cerr << "verified " << cases.size()
              << " case(s): all deviations < " << float_str(cfg.tol) << "\n";
    return 0;
}

int run_wavefunction(const RunConfig& cfg) {
    if (cfg.modes.size() != 1 || cfg.n_values.size() != 1 ||
        cfg.kappa_values.size() != 1 || cfg.q_values.size() != 1 ||
        cfg.b_values.size() != 1 || cfg.A_values.size() != 1) {
        std::cerr << "error: wavefunction takes a single state (one mode and "
                     "one value each for n, kappa, q, b, A)\n";
        return 2;
    }
    const SymmetryMode mode = cfg.modes.front();
    const PhysicalParams p = make_params(cfg, cfg.q_values.front(),
                                         cfg.b_values.front(),
                                         cfg.A_values.front());
    const QuantumNumbers qn =
        map_kappa(static_cast<int>(cfg.kappa_values.front()),
                  static_cast<int>(cfg.n_values.front()));
    try {
        const EnergySolution sol = solve_energy(mode, p, qn);
        const RootInfo& canon = canonical_root(sol);
        if (!canon.bound()) {
            std::string why;
            if (!canon.eps_positive)
                why = "decay constant squared is not positive";
            else if (!canon.index_real)
                why = "angular index is complex";
            else
                why = "energy lies on the non-quantized branch";
            std::cerr << "error: requested state is not bound (" << why
                      << ") at E=" << float_str(canon.energy) << "\n";
            return 1;
        }

        GridSpec spec;
        if (cfg.steps > 0)
            spec.points = cfg.steps;
        if (cfg.rmax > 0)
            spec.r_max = cfg.rmax;
        const RadialFunction f =
            primary_wavefunction(mode, p, qn, canon.energy, spec);

        Metadata meta = common_meta(cfg, "wavefunction");
        meta.emplace_back("mode", mode_name(mode));
        meta.emplace_back("n", std::to_string(qn.n));
        meta.emplace_back("kappa", std::to_string(qn.kappa));
        meta.emplace_back("l", std::to_string(qn.l));
        meta.emplace_back("ltilde", std::to_string(qn.l_tilde));
        meta.emplace_back("q", float_str(p.q));
        meta.emplace_back("b", float_str(p.b));
        meta.emplace_back("A", float_str(p.A));
        meta.emplace_back("E", float_str(canon.energy));
        meta.emplace_back("epsilon", float_str(f.eps));
        meta.emplace_back("index", float_str(f.index));
        meta.emplace_back("normalizer",
                          float_str(f.analytic ? f.analytic->normalizer
                                               : std::nan("")));
        meta.emplace_back("norm_check", float_str(f.norm_estimate));
        meta.emplace_back("strict_index",
                          f.strict_index_condition ? "1" : "0");

        const std::vector<std::string> columns = {
            "r", mode == SymmetryMode::Spin ? "F" : "G"};
        std::vector<Row> rows;
        rows.reserve(f.grid.size());
        for (std::size_t i = 0; i < f.grid.size(); ++i)
            rows.push_back(Row{fcell(f.grid[i]), fcell(f.values[i])});
        return emit_table(cfg, meta, columns, rows);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

namespace {

int limits_nonrel(const RunConfig& cfg) {
    if (cfg.q_values.size() != 1 || cfg.b_values.size() != 1 ||
        cfg.n_values.size() != 1) {
        std::cerr << "error: limits --nonrel takes one value each for q, b, "
                     "n (plus --l)\n";
        return 2;
    }
    const PhysicalParams p =
        make_params(cfg, cfg.q_values.front(), cfg.b_values.front(), 0.0);
    const int n = static_cast<int>(cfg.n_values.front());
    const int l = static_cast<int>(cfg.l_value);
    try {
        const double E = nonrelativistic_energy(p, n, l);
        GridSpec spec;
        if (cfg.steps > 0)
            spec.points = cfg.steps;
        if (cfg.rmax > 0)
            spec.r_max = cfg.rmax;
        const RadialFunction u = nonrelativistic_wavefunction(p, n, l, spec);

        Metadata meta = common_meta(cfg, "limits");
        meta.emplace_back("limit", "nonrel");
        meta.emplace_back("n", std::to_string(n));
        meta.emplace_back("l", std::to_string(l));
        meta.emplace_back("q", float_str(p.q));
        meta.emplace_back("b", float_str(p.b));
        meta.emplace_back("E", float_str(E));
        if (u.analytic)
            meta.emplace_back("power", float_str(u.analytic->power));
        meta.emplace_back("norm_check", float_str(u.norm_estimate));

        std::vector<Row> rows;
        rows.reserve(u.grid.size());
        for (std::size_t i = 0; i < u.grid.size(); ++i)
            rows.push_back(Row{fcell(u.grid[i]), fcell(u.values[i])});
        return emit_table(cfg, meta, {"r", "u"}, rows);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

int limits_swave(const RunConfig& cfg) {
    if (cfg.q_values.size() != 1 || cfg.b_values.size() != 1 ||
        cfg.A_values.size() != 1) {
        std::cerr << "error: limits --swave takes one value each for q, b, "
                     "A\n";
        return 2;
    }
    const PhysicalParams p =
        make_params(cfg, cfg.q_values.front(), cfg.b_values.front(),
                    cfg.A_values.front());
    std::vector<Row> rows;
    for (SymmetryMode mode : cfg.modes)
        for (long long n : cfg.n_values) {
            Row row;
            row.push_back(scell(mode_name(mode)));
            row.push_back(icell(n));
            row.push_back(icell(mode == SymmetryMode::Spin ? -1 : 1));
            row.push_back(fcell(p.q));
            row.push_back(fcell(p.b));
            row.push_back(fcell(p.A));
            try {
                row.push_back(
                    fcell(s_wave_energy(mode, p, static_cast<int>(n))));
            } catch (const std::exception&) {
                row.push_back(Cell{});
            }
            rows.push_back(row);
        }

    Metadata meta = common_meta(cfg, "limits");
    meta.emplace_back("limit", "swave");
    meta.emplace_back("q", float_str(p.q));
    meta.emplace_back("b", float_str(p.b));
    meta.emplace_back("A", float_str(p.A));
    return emit_table(cfg, meta,
                      {"mode", "n", "kappa", "q", "b", "A", "E"}, rows);
}

int limits_duality(const RunConfig& cfg) {
    if (cfg.q_values.size() != 1) {
        std::cerr << "error: limits --duality takes one q (b is fixed to "
                     "2q on the dual slice)\n";
        return 2;
    }
    PhysicalParams p = make_params(cfg, cfg.q_values.front(),
                                   2.0 * cfg.q_values.front(), 0.0);
    std::vector<Row> rows;
    for (long long n : cfg.n_values)
        for (long long kappa : cfg.kappa_values) {
            const QuantumNumbers qn = map_kappa(static_cast<int>(kappa),
                                                static_cast<int>(n));
            Row row;
            row.push_back(icell(n));
            row.push_back(icell(kappa));
            try {
                const auto [varmass, flat] = duality_spectra(p, qn);
                const double defect = std::max(
                    std::abs(varmass.particle.energy +
                             flat.antiparticle.energy),
                    std::abs(varmass.antiparticle.energy +
                             flat.particle.energy));
                row.push_back(fcell(varmass.particle.energy));
                row.push_back(fcell(varmass.antiparticle.energy));
                row.push_back(fcell(flat.particle.energy));
                row.push_back(fcell(flat.antiparticle.energy));
                row.push_back(fcell(defect));
            } catch (const std::exception&) {
                for (int c = 0; c < 5; ++c)
                    row.push_back(Cell{});
            }
            rows.push_back(row);
        }

    Metadata meta = common_meta(cfg, "limits");
    meta.emplace_back("limit", "duality");
    meta.emplace_back("q", float_str(p.q));
    meta.emplace_back("b", float_str(p.b));
    return emit_table(cfg, meta,
                      {"n", "kappa", "E_varmass_particle",
                       "E_varmass_antiparticle", "E_constant_particle",
                       "E_constant_antiparticle", "negation_defect"},
                      rows);
}

int limits_constant(const RunConfig& cfg) {
    std::vector<Row> rows;
    for (SymmetryMode mode : cfg.modes)
        for (long long n : cfg.n_values)
            for (long long kappa : cfg.kappa_values)
                for (double q : cfg.q_values) {
                    const PhysicalParams p = make_params(cfg, q, 0.0, 0.0);
                    const QuantumNumbers qn = map_kappa(
                        static_cast<int>(kappa), static_cast<int>(n));
                    Row row;
                    row.push_back(scell(mode_name(mode)));
                    row.push_back(icell(n));
                    row.push_back(icell(kappa));
                    row.push_back(fcell(q));
                    try {
                        const auto [hi, lo] =
                            energy_constant_mass(mode, p, qn);
                        row.push_back(fcell(hi));
                        row.push_back(fcell(lo));
                    } catch (const std::exception&) {
                        row.push_back(Cell{});
                        row.push_back(Cell{});
                    }
                    rows.push_back(row);
                }

    Metadata meta = common_meta(cfg, "limits");
    meta.emplace_back("limit", "constant");
    add_range_meta(meta, cfg);
    return emit_table(
        cfg, meta,
        {"mode", "n", "kappa", "q", "E_particle", "E_antiparticle"}, rows);
}

} // namespace

int run_limits(const RunConfig& cfg) {
    const int selected = int(cfg.lim_nonrel) + int(cfg.lim_swave) +
                         int(cfg.lim_duality) + int(cfg.lim_constant);
    if (selected != 1) {
        std::cerr << "error: limits requires exactly one of --nonrel, "
                     "--swave, --duality, --constant\n";
        return 2;
    }
    if (cfg.lim_nonrel)
        return limits_nonrel(cfg);
    if (cfg.lim_swave)
        return limits_swave(cfg);
    if (cfg.lim_duality)
        return limits_duality(cfg);
    return limits_constant(cfg);
}

} // namespace dcli
