#include "shorcost/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "shorcost/optimizer.hpp"
#include "shorcost/report.hpp"
#include "shorcost/sim/coset.hpp"
#include "shorcost/sim/factor.hpp"
#include "shorcost/sim/modexp.hpp"
#include "shorcost/verify.hpp"

namespace shorcost {

namespace {

struct GlobalOptions {
    std::string config;
    std::string factory_table;
    std::optional<double> gate_error;
    std::optional<double> cycle_us;
    std::optional<double> reaction_us;
};

EstimationContext make_context(const GlobalOptions& g) {
    PhysicalAssumptions hw = g.config.empty() ? PhysicalAssumptions{} : load_assumptions(g.config);
    if (g.gate_error) hw.gate_error = *g.gate_error;
    if (g.cycle_us) hw.cycle_time_s = *g.cycle_us * 1e-6;
    if (g.reaction_us) hw.reaction_time_s = *g.reaction_us * 1e-6;
    if (!(hw.gate_error > 0 && hw.gate_error < 1) || hw.cycle_time_s <= 0 || hw.reaction_time_s <= 0) {
        throw std::invalid_argument("physical assumptions must be positive (gate error below 1)");
    }
    EstimationContext ctx = EstimationContext::with_assumptions(hw);
    if (!g.factory_table.empty()) {
        ctx.factories = FactoryTable::load_csv(g.factory_table);
    }
    return ctx;
}

// Sizes without a tabulated security level only work when the exponent
// length does not depend on it.
ProblemInstance instance_for(Family family, int n, std::optional<int> n_e) {
    const ProblemKind kind = kind_of(family);
    if (n_e) {
        ProblemInstance p = custom_instance(kind, n, *n_e);
        p.family = family;
        return p;
    }
    switch (family) {
    case Family::Rsa: {
        const int e = exponent_length(kind, n, 0);
        ProblemInstance p = custom_instance(kind, n, e);
        try {
            p.z = security_level(n);
        } catch (const UnsupportedError&) {
        }
        return p;
    }
    case Family::DlpSafeFull:
    case Family::DlpSafeShor: {
        try {
            return make_instance(family, n);
        } catch (const UnsupportedError&) {
        }
        const int e = exponent_length(kind, n, 0, n - 1);
        ProblemInstance p = custom_instance(kind, n, e);
        p.family = family;
        p.n_d = n - 1;
        p.n_r = n - 1;
        return p;
    }
    default:
        try {
            return make_instance(family, n);
        } catch (const UnsupportedError& e) {
            throw UnsupportedError(std::string(e.what()) + "; pass --n-e for untabulated sizes");
        }
    }
}

CostParams parse_params(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) parts.push_back(item);
    if (parts.size() != 6 && parts.size() != 7) {
        throw std::invalid_argument("--params needs d1,d2,delta_off,c_mul,c_exp,c_sep[,ccz|t]");
    }
    CostParams p;
    p.d1 = std::stoi(parts[0]);
    p.d2 = std::stoi(parts[1]);
    p.delta_off = std::stoi(parts[2]);
    p.c_mul = std::stoi(parts[3]);
    p.c_exp = std::stoi(parts[4]);
    p.c_sep = std::stoi(parts[5]);
    if (parts.size() == 7) p.factory = parse_factory_kind(parts[6]);
    validate(p);
    return p;
}

std::vector<int> sweep_sizes(int from, int to, int points) {
    if (from < 16 || to < from || points < 1) {
        throw std::invalid_argument("sweep needs 16 <= from <= to and points >= 1");
    }
    std::vector<int> sizes;
    for (int i = 0; i < points; ++i) {
        const double t = points == 1 ? 0.0 : static_cast<double>(i) / (points - 1);
        const double n = from * std::pow(static_cast<double>(to) / from, t);
        const int rounded = static_cast<int>(std::lround(n / 8.0)) * 8;
        if (sizes.empty() || sizes.back() != rounded) sizes.push_back(rounded);
    }
    return sizes;
}

int run_simulate(std::uint64_t modulus, std::uint64_t g, std::optional<std::uint64_t> exponent,
                 const sim::ModexpParams& params, int c_sep, std::uint64_t seed,
                 const std::string& export_path, std::ostream& out) {
    const int n = sim::modulus_bits(modulus);
    sim::ModexpParams p = params;
    p.c_sep = c_sep > 0 ? c_sep : n;
    const sim::ModexpCircuit m = sim::build_windowed_modexp(g, modulus, n, p);
    const auto counts = sim::count_resources(m.circuit);
    out << "circuit: " << m.circuit.num_qubits() << " qubits, " << m.circuit.size() << " gates, "
        << m.lookup_additions << " lookup additions, " << counts.toffolis
        << " counted Toffolis, measurement depth " << counts.measurement_depth << '\n';
    if (!export_path.empty()) {
        std::ofstream f(export_path, std::ios::binary);
        if (!f) throw std::runtime_error("cannot write '" + export_path + "'");
        f << sim::to_text(m.circuit);
    }
    std::mt19937_64 rng(seed);
    const std::uint64_t e_max = std::uint64_t{1} << p.n_e;
    if (exponent) {
        if (*exponent >= e_max) throw std::invalid_argument("exponent does not fit n_e bits");
        const std::uint64_t got = sim::run_modexp(m, *exponent, sim::sample_offsets(m, rng));
        out << g << '^' << *exponent << " mod " << modulus << " = " << got << " (oracle "
            << sim::pow_mod(g, *exponent, modulus) << ")\n";
    }

    // Factoring demo: y = g^((N-1)/2) = g^((p+q-2)/2), so a short discrete
    // logarithm of y gives p + q.
    if (modulus % 2 == 1) {
        const std::uint64_t y = sim::pow_mod(g, (modulus - 1) / 2, modulus);
        for (std::uint64_t d = 0; d < e_max; ++d) {
            if (sim::run_modexp(m, d, sim::sample_offsets(m, rng)) != y) continue;
            try {
                const auto f = sim::recover_factors_from_sum(2 * d + 2, modulus);
                if (f.p > 1) {
                    out << "short dlog d=" << d << " gives p+q=" << 2 * d + 2 << ": " << modulus
                        << " = " << f.p << " x " << f.q << '\n';
                    return kExitOk;
                }
            } catch (const std::exception&) {
            }
        }
        out << "no factorization recovered for N=" << modulus << '\n';
    }
    return kExitOk;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Resource estimates for factoring and discrete logarithms on a surface-code machine",
                 "shorcost"};
    app.fallthrough();
    app.require_subcommand(1);

    GlobalOptions global;
    app.add_option("--config", global.config, "JSON physical assumptions")->check(CLI::ExistingFile);
    app.add_option("--factory-table", global.factory_table, "factory table CSV")
        ->check(CLI::ExistingFile);
    app.add_option("--gate-error", global.gate_error, "physical gate error rate (default 1e-3)");
    app.add_option("--cycle-us", global.cycle_us, "surface code cycle time in microseconds (default 1)");
    app.add_option("--reaction-us", global.reaction_us, "reaction time in microseconds (default 10)");

    // estimate
    auto* estimate = app.add_subcommand("estimate", "optimize one problem instance");
    std::string est_problem = "rsa";
    int est_n = 0;
    std::optional<int> est_ne;
    std::string est_params;
    std::string est_format = "text";
    bool est_serial = false;
    estimate->add_option("--problem", est_problem, "problem family");
    estimate->add_option("--n", est_n, "modulus bits")->required();
    estimate->add_option("--n-e", est_ne, "override the exponent length");
    estimate->add_option("--params", est_params, "evaluate d1,d2,delta_off,c_mul,c_exp,c_sep[,factory]");
    estimate->add_option("--format", est_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    estimate->add_flag("--serial", est_serial, "use the single-threaded search");

    // table
    auto* table = app.add_subcommand("table", "regenerate one table block");
    std::string tab_family;
    std::string tab_out = "-";
    std::string tab_format = "csv";
    table->add_option("family", tab_family, "rsa, dlp-schnorr, dlp-safe-short, dlp-safe-full, "
                                            "dlp-schnorr-shor or dlp-safe-shor")
        ->required();
    table->add_option("--out", tab_out, "output path, - for stdout");
    table->add_option("--format", tab_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

    // sweep
    auto* sweep = app.add_subcommand("sweep", "optimized costs across a size range");
    std::string sw_problem = "rsa";
    int sw_from = 1024;
    int sw_to = 16384;
    int sw_points = 13;
    std::string sw_out = "-";
    sweep->add_option("--problem", sw_problem, "problem family");
    sweep->add_option("--from", sw_from, "smallest n");
    sweep->add_option("--to", sw_to, "largest n");
    sweep->add_option("--points", sw_points, "number of geometrically spaced sizes");
    sweep->add_option("--out", sw_out, "output path, - for stdout");

    // simulate
    auto* simulate = app.add_subcommand("simulate", "run the reversible windowed exponentiation demo");
    std::uint64_t sim_modulus = 55;
    std::uint64_t sim_g = 2;
    std::optional<std::uint64_t> sim_e;
    sim::ModexpParams sim_params;
    sim_params.c_pad = 10;
    int sim_c_sep = 0;
    std::uint64_t sim_seed = 1;
    std::string sim_export;
    simulate->add_option("--modulus", sim_modulus, "modulus N (at most 12 bits)");
    simulate->add_option("--g", sim_g, "base");
    simulate->add_option("--exponent", sim_e, "exponent to evaluate");
    simulate->add_option("--n-e", sim_params.n_e, "exponent bits");
    simulate->add_option("--c-exp", sim_params.c_exp, "exponent window");
    simulate->add_option("--c-mul", sim_params.c_mul, "multiplication window");
    simulate->add_option("--c-pad", sim_params.c_pad, "padding / runway length");
    simulate->add_option("--c-sep", sim_c_sep, "runway spacing (default: no runways)");
    simulate->add_option("--seed", sim_seed, "offset sampling seed");
    simulate->add_option("--export", sim_export, "write the circuit in text form");

    // verify
    auto* verify = app.add_subcommand("verify", "run the invariant suites");
    bool ver_quick = false;
    verify->add_flag("--quick", ver_quick, "fewer samples");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*estimate) {
            const EstimationContext ctx = make_context(global);
            const ProblemInstance problem = instance_for(parse_family(est_problem), est_n, est_ne);
            EstimateReport report;
            if (!est_params.empty()) {
                report = evaluate(problem, parse_params(est_params), ctx);
            } else {
                report = est_serial ? optimize_serial(problem, ctx) : optimize(problem, ctx);
            }
            out << (est_format == "json" ? estimate_json(report) : estimate_text(report));
        } else if (*table) {
            const EstimationContext ctx = make_context(global);
            std::vector<ReportRow> rows;
            for (const auto& r : make_table(parse_family(tab_family), ctx)) rows.push_back(to_row(r));
            write_report(rows, parse_report_format(tab_format), tab_out);
        } else if (*sweep) {
            const EstimationContext ctx = make_context(global);
            const Family family = parse_family(sw_problem);
            std::vector<SweepPoint> points;
            for (int n : sweep_sizes(sw_from, sw_to, sw_points)) {
                const auto r = optimize(instance_for(family, n, std::nullopt), ctx);
                const ReportRow row = to_row(r);
                points.push_back({row.n, row.n_e, row.expected_volume, row.megaqubits,
                                  row.hours_per_run});
            }
            if (sw_out == "-") {
                write_sweep_csv(points, out);
            } else {
                std::ofstream f(sw_out, std::ios::binary);
                if (!f) throw std::runtime_error("cannot write '" + sw_out + "'");
                write_sweep_csv(points, f);
            }
        } else if (*simulate) {
            return run_simulate(sim_modulus, sim_g, sim_e, sim_params, sim_c_sep, sim_seed,
                                sim_export, out);
        } else if (*verify) {
            bool ok = true;
            for (const auto& s : run_all_suites(ver_quick)) {
                out << (s.passed ? "[PASS] " : "[FAIL] ") << s.name << ": " << s.detail << '\n';
                ok = ok && s.passed;
            }
            return ok ? kExitOk : kExitVerifyFailed;
        }
    } catch (const InfeasibleError& e) {
        err << "infeasible: " << e.what() << '\n';
        return kExitInfeasible;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitOk;
}

}  // namespace shorcost
