// defdirac: spectra and verification for the deformed-algebra Dirac-Kepler
// problem with position-dependent mass. Subcommands: spectrum, verify,
// limits, wavefn, sweep.

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "defdirac/algebra.hpp"
#include "defdirac/closed_form.hpp"
#include "defdirac/io.hpp"
#include "defdirac/parallel.hpp"
#include "defdirac/radial.hpp"
#include "defdirac/verify.hpp"

using nlohmann::json;
using namespace defdirac;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_config = 1;
constexpr int exit_admissibility = 2;
constexpr int exit_solver = 3;

struct RunConfig {
    PhysicalConstants consts;
    double nu = 0.0;
    std::optional<double> a;
    std::optional<double> abar;
    std::vector<int> k_list = {1};
    int nr_from = 0;
    int nr_to = 0;
    std::string branch = "plus"; // plus | minus | both
    int grid_points = 4001;
    std::string x_max = "auto";
    double tol = 1e-10;
    bool numeric = false;
    std::string format = "csv";
    std::string out = "-";

    DeformationParams deformation() const {
        if (a && abar) throw ConfigError("give either a or abar, not both");
        if (abar) return DeformationParams::with_abar(nu, *abar, consts);
        return DeformationParams::with_a(nu, a.value_or(0.0), consts);
    }
    std::vector<Branch> branches() const {
        if (branch == "plus") return {Branch::plus};
        if (branch == "minus") return {Branch::minus};
        if (branch == "both") return {Branch::plus, Branch::minus};
        throw ConfigError("branch must be plus, minus or both");
    }
    SolverOptions solver() const {
        SolverOptions so;
        so.n_points = grid_points;
        so.tol_rel = tol;
        if (x_max != "auto") {
            try {
                so.x_max = std::stod(x_max);
            } catch (...) {
                throw ConfigError("x-max must be 'auto' or a positive number");
            }
            if (!(so.x_max > 0.0)) throw ConfigError("x-max must be > 0");
        }
        return so;
    }
    void validate() const {
        consts.validate();
        if (!(nu >= 0.0)) throw ConfigError("nu must be >= 0");
        if (k_list.empty()) throw ConfigError("k list must not be empty");
        for (int k : k_list)
            if (k == 0) throw ConfigError("k must be a nonzero integer");
        if (nr_from < 0) throw ConfigError("n_r range must start at >= 0");
        if (grid_points < 3) throw ConfigError("grid-points must be >= 3");
        if (!(tol > 0.0)) throw ConfigError("tol must be > 0");
        if (format != "csv" && format != "json") throw ConfigError("format must be csv or json");
        branches();
        solver();
        deformation();
    }
};

void load_config_file(RunConfig& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ConfigError(std::string("config parse error: ") + e.what());
    }
    if (j.contains("constants")) {
        const auto& c = j["constants"];
        if (c.contains("hbar")) cfg.consts.hbar = c["hbar"].get<double>();
        if (c.contains("m")) cfg.consts.m = c["m"].get<double>();
        if (c.contains("c")) cfg.consts.c = c["c"].get<double>();
        if (c.contains("e2")) cfg.consts.e2 = c["e2"].get<double>();
    }
    if (j.contains("deformation")) {
        const auto& d = j["deformation"];
        if (d.contains("nu")) cfg.nu = d["nu"].get<double>();
        if (d.contains("a")) cfg.a = d["a"].get<double>();
        if (d.contains("abar")) cfg.abar = d["abar"].get<double>();
    }
    if (j.contains("quantum")) {
        const auto& q = j["quantum"];
        if (q.contains("k")) cfg.k_list = q["k"].get<std::vector<int>>();
        if (q.contains("nr")) {
            cfg.nr_from = q["nr"].at(0).get<int>();
            cfg.nr_to = q["nr"].at(1).get<int>();
        }
        if (q.contains("branch")) cfg.branch = q["branch"].get<std::string>();
    }
    if (j.contains("solver")) {
        const auto& s = j["solver"];
        if (s.contains("grid_points")) cfg.grid_points = s["grid_points"].get<int>();
        if (s.contains("x_max")) {
            if (s["x_max"].is_string())
                cfg.x_max = s["x_max"].get<std::string>();
            else
                cfg.x_max = fmt17(s["x_max"].get<double>());
        }
        if (s.contains("tol")) cfg.tol = s["tol"].get<double>();
        if (s.contains("numeric")) cfg.numeric = s["numeric"].get<bool>();
    }
    if (j.contains("output")) {
        const auto& o = j["output"];
        if (o.contains("format")) cfg.format = o["format"].get<std::string>();
        if (o.contains("path")) cfg.out = o["path"].get<std::string>();
    }
}

void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.out == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) throw ConfigError("cannot open output file: " + cfg.out);
    f << text;
}

std::vector<int> parse_k_list(const std::string& s) {
    std::vector<int> out;
    size_t pos = 0;
    while (pos < s.size()) {
        size_t comma = s.find(',', pos);
        if (comma == std::string::npos) comma = s.size();
        out.push_back(std::stoi(s.substr(pos, comma - pos)));
        pos = comma + 1;
    }
    return out;
}

void parse_nr_range(const std::string& s, int& from, int& to) {
    const size_t dots = s.find("..");
    if (dots == std::string::npos) {
        from = to = std::stoi(s);
        return;
    }
    from = std::stoi(s.substr(0, dots));
    to = std::stoi(s.substr(dots + 2));
}

struct StatePoint {
    int k;
    Branch branch;
    int n_r;
};

std::vector<StatePoint> enumerate_states(const RunConfig& cfg) {
    std::vector<int> ks = cfg.k_list;
    std::sort(ks.begin(), ks.end());
    ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
    std::vector<StatePoint> pts;
    for (int k : ks)
        for (Branch br : cfg.branches())
            for (int n_r = cfg.nr_from; n_r <= cfg.nr_to; ++n_r) pts.push_back({k, br, n_r});
    return pts;
}

struct ComputedRow {
    SpectrumRecord rec;
    std::string status = "ok";
    bool supercritical = false;
    bool solver_failed = false;
};

ComputedRow compute_state(const RunConfig& cfg, const DeformationParams& deform,
                          const StatePoint& sp, double sweep_override_nu = -1.0) {
    ComputedRow row;
    DeformationParams d = deform;
    if (sweep_override_nu >= 0.0) d.nu = sweep_override_nu;
    const Couplings coup = derive_couplings(cfg.consts, d);
    try {
        const QuantumState st = make_state(coup, sp.k, sp.n_r, sp.branch);
        row.rec = energy_exact(st, cfg.consts, d);
        if (!row.rec.bound_ok) row.status = "unbound";
        if (cfg.numeric && d.nu > 0.0 && row.rec.bound_ok && row.rec.level_exists) {
            try {
                const SelfConsistentResult sc = self_consistent_energy(st, cfg.consts, d, cfg.solver());
                row.rec.e_numeric = sc.energy;
                row.rec.node_count = sc.node_count;
            } catch (const Error& e) {
                row.status = "solver_error";
                row.solver_failed = true;
            }
        }
    } catch (const SupercriticalCoupling&) {
        row.rec.k = sp.k;
        row.rec.n_r = sp.n_r;
        row.rec.branch = sp.branch;
        row.status = "supercritical";
        row.supercritical = true;
    } catch (const NonPositivePrincipal&) {
        row.rec.k = sp.k;
        row.rec.n_r = sp.n_r;
        row.rec.branch = sp.branch;
        row.status = "nonpositive_n";
        row.supercritical = true; // admissibility failure
    }
    return row;
}

int cmd_spectrum(const RunConfig& cfg) {
    const DeformationParams deform = cfg.deformation();
    const std::vector<StatePoint> pts = enumerate_states(cfg);
    std::vector<ComputedRow> rows(pts.size());
    parallel_for_index(static_cast<int>(pts.size()),
                       [&](int i) { rows[i] = compute_state(cfg, deform, pts[i]); });

    std::vector<SpectrumRecord> recs;
    std::vector<std::string> statuses;
    bool any_super = false, any_solver = false;
    for (const auto& r : rows) {
        recs.push_back(r.rec);
        statuses.push_back(r.status);
        any_super |= r.supercritical;
        any_solver |= r.solver_failed;
    }
    const Table t = spectrum_table(recs, statuses);
    emit(cfg, t.serialize(cfg.format == "csv" ? OutputFormat::csv : OutputFormat::json));
    if (any_solver) return exit_solver;
    if (any_super) return exit_admissibility;
    return exit_ok;
}

int cmd_sweep(const RunConfig& cfg, const std::string& param, double from, double to, int steps) {
    if (steps < 1) throw ConfigError("steps must be >= 1");
    if (from > to) throw ConfigError("sweep requires from <= to");
    if (param != "nu" && param != "a" && param != "e2")
        throw ConfigError("sweep param must be nu, a or e2");

    const std::vector<StatePoint> pts = enumerate_states(cfg);
    struct SweepRow {
        double value;
        ComputedRow row;
    };
    std::vector<SweepRow> all(static_cast<size_t>(steps) * pts.size());
    std::vector<double> values(steps);
    for (int s = 0; s < steps; ++s)
        values[s] = steps == 1 ? from : from + (to - from) * s / (steps - 1);

    bool any_super = false, any_solver = false;
    parallel_for_index(steps, [&](int s) {
        RunConfig local = cfg;
        if (param == "nu") local.nu = values[s];
        if (param == "a") {
            local.a = values[s];
            local.abar.reset();
        }
        if (param == "e2") local.consts.e2 = values[s];
        const DeformationParams d = local.deformation();
        for (size_t i = 0; i < pts.size(); ++i) {
            all[s * pts.size() + i] = {values[s], compute_state(local, d, pts[i])};
        }
    });
    for (const auto& sr : all) {
        any_super |= sr.row.supercritical;
        any_solver |= sr.row.solver_failed;
    }

    std::vector<SpectrumRecord> recs;
    std::vector<std::string> statuses;
    for (const auto& sr : all) {
        recs.push_back(sr.row.rec);
        statuses.push_back(sr.row.status);
    }
    Table t = spectrum_table(recs, statuses);
    t.columns.insert(t.columns.begin(), param);
    for (size_t i = 0; i < t.rows.size(); ++i)
        t.rows[i].insert(t.rows[i].begin(), fmt17(all[i].value));
    emit(cfg, t.serialize(cfg.format == "csv" ? OutputFormat::csv : OutputFormat::json));
    if (any_solver) return exit_solver;
    if (any_super) return exit_admissibility;
    return exit_ok;
}

int cmd_wavefn(const RunConfig& cfg) {
    if (cfg.branch == "both") throw ConfigError("wavefn needs a single branch (plus or minus)");
    const DeformationParams deform = cfg.deformation();
    if (!(deform.nu > 0.0)) throw ConfigError("wavefn needs nu > 0");
    const Couplings coup = derive_couplings(cfg.consts, deform);
    try {
        const QuantumState st =
            make_state(coup, cfg.k_list.front(), cfg.nr_from, cfg.branches().front());
        const SpectrumRecord rec = energy_exact(st, cfg.consts, deform);
        if (!rec.bound_ok || !rec.level_exists)
            throw BracketingFailure("state not solvable: the requested level fails the "
                                    "bound-state or level-existence condition");
        const WavefunctionSamples ws = export_wavefunction(st, cfg.consts, deform, cfg.solver());
        emit(cfg, wavefunction_csv(ws));
    } catch (const SupercriticalCoupling& e) {
        std::cerr << "admissibility: " << e.what() << "\n";
        return exit_admissibility;
    } catch (const Error& e) {
        std::cerr << "solver: " << e.what() << "\n";
        return exit_solver;
    }
    return exit_ok;
}

int cmd_limits(const RunConfig& cfg, const std::string& mode) {
    const DeformationParams deform = cfg.deformation();
    const int k = cfg.k_list.front();
    const int n_r = cfg.nr_from;
    const Branch br = cfg.branch == "minus" ? Branch::minus : Branch::plus;
    Table t;

    auto fit_slope = [](const std::vector<double>& xs, const std::vector<double>& ys) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        const size_t n = xs.size();
        for (size_t i = 0; i < n; ++i) {
            const double lx = std::log(xs[i]), ly = std::log(std::max(ys[i], 1e-300));
            sx += lx;
            sy += ly;
            sxx += lx * lx;
            sxy += lx * ly;
        }
        return (n * sxy - sx * sy) / (n * sxx - sx * sx);
    };

    if (mode == "nu0") {
        const double e_zero = energy_nu_zero(cfg.consts, deform.a, k, br, n_r);
        t.columns = {"kind", "nu", "e_exact", "e_limit", "residual"};
        std::vector<double> nus = {1e-4, 1e-5, 1e-6}, resids;
        for (double nu : nus) {
            const DeformationParams d = DeformationParams::with_a(nu, deform.a, cfg.consts);
            const Couplings coup = derive_couplings(cfg.consts, d);
            const QuantumState st = make_state(coup, k, n_r, br);
            const double E = energy_exact(st, cfg.consts, d).e_closed;
            resids.push_back(std::abs(E - e_zero));
            t.rows.push_back({"sample", fmt17(nu), fmt17(E), fmt17(e_zero), fmt17(resids.back())});
        }
        t.rows.push_back({"fit", "", "", "", fmt17(fit_slope(nus, resids))});
    } else if (mode == "nonrel") {
        t.columns = {"kind", "c", "e_exact", "e_limit", "residual", "residual_corrected"};
        const double abar = deform.abar;
        std::vector<double> cs = {10, 20, 40, 80}, r0, r1;
        for (double c : cs) {
            PhysicalConstants consts = cfg.consts;
            consts.c = c;
            const DeformationParams d = DeformationParams::with_abar(deform.nu, abar, consts);
            const Couplings coup = derive_couplings(consts, d);
            const QuantumState st = make_state(coup, k, n_r, Branch::plus);
            const double E = energy_exact(st, consts, d).e_closed;
            const int n_int = n_r + k;
            const NonRelativisticLevel nr =
                energy_nonrelativistic(consts.m, consts.hbar, consts.e2, d.nu, abar, k, n_int);
            const CorrectionBreakdown cb = relativistic_correction(consts, d.nu, abar, k, n_int);
            const double res0 = E - consts.mc2() - nr.e_prime;
            const double res1 = res0 - cb.total;
            r0.push_back(std::abs(res0));
            r1.push_back(std::abs(res1));
            t.rows.push_back({"sample", fmt17(c), fmt17(E), fmt17(consts.mc2() + nr.e_prime),
                              fmt17(res0), fmt17(res1)});
        }
        t.rows.push_back({"fit", "", "", "", fmt17(fit_slope(cs, r0)), fmt17(fit_slope(cs, r1))});
    } else if (mode == "sommerfeld") {
        t.columns = {"k", "n", "delta1", "sommerfeld", "difference"};
        for (int kk : {1, 2}) {
            const double n = n_r + kk;
            const CorrectionBreakdown cb = relativistic_correction(cfg.consts, 0.0, 0.0, kk, n);
            const double somm = -cfg.consts.m * cfg.consts.e2 * cfg.consts.e2 *
                                cfg.consts.alpha() * cfg.consts.alpha() /
                                (2.0 * cfg.consts.hbar * cfg.consts.hbar * n * n * n * n) *
                                (n / std::abs(kk) - 0.75);
            t.rows.push_back(
                {std::to_string(kk), fmt17(n), fmt17(cb.delta1), fmt17(somm), fmt17(cb.delta1 - somm)});
        }
    } else if (mode == "qt") {
        t.columns = {"l", "n", "e_qt", "e_reconciled", "difference"};
        for (int l = 0; l <= 4; ++l)
            for (int n = l + 1; n <= 6; ++n) {
                const double qt =
                    energy_qt(cfg.consts.m, cfg.consts.hbar, cfg.consts.e2, deform.nu, l, n).e_prime;
                const double rec =
                    qt_reconciliation(cfg.consts.m, cfg.consts.hbar, cfg.consts.e2, deform.nu, l, n);
                t.rows.push_back(
                    {std::to_string(l), std::to_string(n), fmt17(qt), fmt17(rec), fmt17(rec - qt)});
            }
    } else {
        throw ConfigError("limits mode must be nu0, nonrel, sommerfeld or qt");
    }
    emit(cfg, t.serialize(cfg.format == "csv" ? OutputFormat::csv : OutputFormat::json));
    return exit_ok;
}

int cmd_verify(const std::string& suite) {
    std::vector<SuiteReport> reports;
    if (suite == "all")
        reports = verify_all();
    else if (suite == "eckart")
        reports = {verify_eckart()};
    else if (suite == "susy")
        reports = {verify_susy()};
    else if (suite == "limits")
        reports = {verify_limits()};
    else if (suite == "algebra")
        reports = {verify_algebra()};
    else if (suite == "corrections")
        reports = {verify_corrections()};
    else
        throw ConfigError("unknown suite: " + suite +
                          " (expected all, eckart, susy, limits, algebra, corrections)");
    bool ok = true;
    for (const auto& r : reports) {
        std::cout << format_report(r);
        ok = ok && r.all_pass();
    }
    std::cout << (ok ? "ALL CHECKS PASSED\n" : "CHECK FAILURES PRESENT\n");
    return ok ? exit_ok : exit_admissibility;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"deformed-algebra Dirac-Kepler spectra and verification"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string config_path, k_arg, nr_arg;

    auto add_shared = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "JSON config file");
        sub->add_option("--hbar", cfg.consts.hbar, "reduced Planck constant");
        sub->add_option("--m", cfg.consts.m, "particle mass");
        sub->add_option("--c", cfg.consts.c, "speed of light");
        sub->add_option("--e2", cfg.consts.e2, "charge squared");
        sub->add_option("--nu", cfg.nu, "deformation strength");
        sub->add_option("--a", cfg.a, "mass parameter a");
        sub->add_option("--abar", cfg.abar, "dimensionless mass parameter");
        sub->add_option("--k", k_arg, "comma list of Dirac quantum numbers");
        sub->add_option("--nr", nr_arg, "radial quantum number range from..to");
        sub->add_option("--branch", cfg.branch, "plus, minus or both");
        sub->add_option("--grid-points", cfg.grid_points, "grid points for numeric solves");
        sub->add_option("--x-max", cfg.x_max, "auto or explicit domain size");
        sub->add_option("--tol", cfg.tol, "outer solver tolerance");
        sub->add_option("--format", cfg.format, "csv or json");
        sub->add_option("--out", cfg.out, "output path ('-' = stdout)");
    };

    CLI::App* spectrum = app.add_subcommand("spectrum", "closed-form (and optional numeric) levels");
    add_shared(spectrum);
    spectrum->add_flag("--numeric", cfg.numeric, "also run the self-consistent eigensolver");

    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite = "all";
    verify->add_option("--suite", suite, "all, eckart, susy, limits, algebra, corrections");

    CLI::App* limits = app.add_subcommand("limits", "limit and correction studies");
    std::string mode = "nu0";
    limits->add_option("--mode", mode, "nu0, nonrel, sommerfeld or qt");
    add_shared(limits);

    CLI::App* wavefn = app.add_subcommand("wavefn", "export a radial eigenfunction");
    add_shared(wavefn);

    CLI::App* sweep = app.add_subcommand("sweep", "spectrum along a parameter sweep");
    std::string param = "nu";
    double from = 0.0, to = 0.0;
    int steps = 1;
    sweep->add_option("--param", param, "nu, a or e2");
    sweep->add_option("--from", from, "sweep start")->required();
    sweep->add_option("--to", to, "sweep end")->required();
    sweep->add_option("--steps", steps, "number of sweep points");
    add_shared(sweep);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? exit_ok : exit_config;
    }

    try {
        if (!config_path.empty()) {
            // flags win over file values: reload file first, then re-apply flags
            RunConfig file_cfg;
            load_config_file(file_cfg, config_path);
            RunConfig flag_cfg = cfg;
            cfg = file_cfg;
            for (CLI::App* sub : {spectrum, limits, wavefn, sweep}) {
                if (!sub->parsed()) continue;
                auto touched = [&](const std::string& name) {
                    const CLI::Option* o = sub->get_option_no_throw(name);
                    return o != nullptr && o->count() > 0;
                };
                if (touched("--hbar")) cfg.consts.hbar = flag_cfg.consts.hbar;
                if (touched("--m")) cfg.consts.m = flag_cfg.consts.m;
                if (touched("--c")) cfg.consts.c = flag_cfg.consts.c;
                if (touched("--e2")) cfg.consts.e2 = flag_cfg.consts.e2;
                if (touched("--nu")) cfg.nu = flag_cfg.nu;
                if (touched("--a")) {
                    cfg.a = flag_cfg.a;
                    cfg.abar.reset();
                }
                if (touched("--abar")) {
                    cfg.abar = flag_cfg.abar;
                    cfg.a.reset();
                }
                if (touched("--branch")) cfg.branch = flag_cfg.branch;
                if (touched("--grid-points")) cfg.grid_points = flag_cfg.grid_points;
                if (touched("--x-max")) cfg.x_max = flag_cfg.x_max;
                if (touched("--tol")) cfg.tol = flag_cfg.tol;
                if (touched("--format")) cfg.format = flag_cfg.format;
                if (touched("--out")) cfg.out = flag_cfg.out;
                if (touched("--numeric")) cfg.numeric = flag_cfg.numeric;
            }
        }
        if (!k_arg.empty()) cfg.k_list = parse_k_list(k_arg);
        if (!nr_arg.empty()) parse_nr_range(nr_arg, cfg.nr_from, cfg.nr_to);
        // an empty n_r range (to < from) is vacuous, not an error

        if (verify->parsed()) return cmd_verify(suite);
        cfg.validate();
        if (spectrum->parsed()) return cmd_spectrum(cfg);
        if (limits->parsed()) return cmd_limits(cfg, mode);
        if (wavefn->parsed()) return cmd_wavefn(cfg);
        if (sweep->parsed()) return cmd_sweep(cfg, param, from, to, steps);
    } catch (const ConfigError& e) {
        std::cerr << "config: " << e.what() << "\n";
        return exit_config;
    } catch (const SupercriticalCoupling& e) {
        std::cerr << "admissibility: " << e.what() << "\n";
        return exit_admissibility;
    } catch (const Error& e) {
        std::cerr << "solver: " << e.what() << "\n";
        return exit_solver;
    } catch (const std::exception& e) {
        std::cerr << "config: " << e.what() << "\n";
        return exit_config;
    }
    return exit_config;
}
