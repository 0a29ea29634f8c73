// One PASS/FAIL line per acceptance criterion; exits nonzero if any fail.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "shorcost/error_budget.hpp"
#include "shorcost/optimizer.hpp"
#include "shorcost/physical_model.hpp"
#include "shorcost/verify.hpp"

using namespace shorcost;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void expect(bool ok, const std::string& what) {
        if (!ok) pass = false;
        detail << (detail.tellp() > 0 ? "; " : "") << what << (ok ? "" : " [out of range]");
    }
};

bool within(double value, double target, double rel) {
    return std::abs(value - target) <= rel * std::abs(target);
}

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

CostParams params(int d1, int d2, int delta, int c_mul, int c_exp, int c_sep) {
    CostParams p;
    p.d1 = d1;
    p.d2 = d2;
    p.delta_off = delta;
    p.c_mul = c_mul;
    p.c_exp = c_exp;
    p.c_sep = c_sep;
    return p;
}

void toffoli_2048(Outcome& o) {
    const double t = toffoli_count(2048, 3029, params(15, 27, 4, 5, 5, 1024));
    o.expect(within(t, 2.7e9, 0.10), "toffolis " + fmt("%.3g", t) + " vs 2.7e9");
}

void headline_formulas(Outcome& o) {
    for (int n : {1024, 2048, 3072}) {
        const std::int64_t n_e = 3 * n / 2;
        const double lg = std::log2(n);
        const double n3 = std::pow(n, 3);
        const auto p = params(17, 27, 10, 5, 5, 1024);
        const double t = toffoli_count(n, n_e, p);
        const double t_ref = 0.3 * n3 + 0.0005 * n3 * lg;
        const double q = static_cast<double>(abstract_qubits(n, n_e, p));
        const double q_ref = 3.0 * n + 0.002 * n * lg;
        o.expect(within(t, t_ref, 0.15),
                 "n=" + std::to_string(n) + " toffolis x" + fmt("%.3f", t / t_ref));
        o.expect(within(q, q_ref, 0.10), "qubits x" + fmt("%.3f", q / q_ref));
    }
}

void deviation_2048(Outcome& o) {
    const double d = total_deviation(2048, 3072, params(17, 27, 10, 5, 5, 1024));
    o.expect(d >= 3e-8 && d <= 3e-7, "deviation " + fmt("%.3g", d));
}

void topological(Outcome& o) {
    const double e = topological_error(226 * 63, 0.75, 25e9, 27);
    o.expect(std::abs(e - 0.27) <= 0.03, "topological " + fmt("%.4f", e));
}

void simplified_qubits(Outcome& o) {
    const auto e = physical_estimate(2048, 3029, params(17, 27, 4, 5, 5, 1024), FactoryTable::builtin());
    o.expect(e.physical_qubits >= 22e6 && e.physical_qubits <= 24e6,
             "physical qubits " + fmt("%.4g", e.physical_qubits));
}

void optimizer_table(Outcome& o) {
    const EstimationContext ctx;
    const auto rows = make_table(Family::Rsa, ctx);
    struct Ref {
        int n;
        double expected, megaqubits, hours;
    };
    for (Ref r : {Ref{1024, 0.5, 9.7, 1.3}, Ref{2048, 5.9, 20, 5.1}, Ref{3072, 21, 38, 12}}) {
        for (const auto& row : rows) {
            if (row.problem.n != r.n) continue;
            const double v = row.physical.expected_volume;
            const double q = row.physical.physical_qubits / 1e6;
            const double h = row.physical.runtime_per_run / 3600;
            o.expect(within(v, r.expected, 0.25), "n=" + std::to_string(r.n) + " " + fmt("%.2g Mqd", v));
            o.expect(within(q, r.megaqubits, 0.25), fmt("%.2g Mq", q));
            o.expect(within(h, r.hours, 0.30), fmt("%.2g h", h));
        }
    }
    o.expect(rows.size() == 7, std::to_string(rows.size()) + " sizes x " + std::to_string(kGridSize) + " points");
}

void dlp_structure(Outcome& o) {
    const EstimationContext ctx;
    const auto schnorr = make_table(Family::DlpSchnorr, ctx);
    const auto safe_short = make_table(Family::DlpSafeShort, ctx);
    const auto safe_full = make_table(Family::DlpSafeFull, ctx);
    const auto schnorr_shor = make_table(Family::DlpSchnorrShor, ctx);
    const auto safe_shor = make_table(Family::DlpSafeShor, ctx);
    bool identical = schnorr.size() == safe_short.size();
    bool shor_wins = true;
    for (std::size_t i = 0; identical && i < schnorr.size(); ++i) {
        identical = schnorr[i].params == safe_short[i].params &&
                    schnorr[i].physical.expected_volume == safe_short[i].physical.expected_volume;
    }
    for (std::size_t i = 0; i < safe_full.size(); ++i) {
        shor_wins = shor_wins && safe_shor[i].physical.expected_volume < safe_full[i].physical.expected_volume &&
                    schnorr_shor[i].physical.expected_volume < schnorr[i].physical.expected_volume;
    }
    o.expect(identical, "schnorr and safe-prime short blocks identical");
    o.expect(shor_wins, "known-order runs cheaper than order-free runs at every n");
}

void scaling_rule(Outcome& o) {
    const double v = 216.0;
    o.expect(volume_scaling_rule(v, 1e-4).volume == v / 8, "p=1e-4 gives V/8");
    o.expect(volume_scaling_rule(v, 1e-5).volume == v / 27, "p=1e-5 gives V/27");
}

void from_suites(Outcome& o, std::vector<SuiteResult> suites) {
    for (const auto& s : suites) o.expect(s.passed, s.name + ": " + s.detail);
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        double limit_s;
        std::function<void(Outcome&)> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "abstract Toffoli count, RSA-2048", 1, toffoli_2048},
        {2, "headline cost formulas", 1, headline_formulas},
        {3, "deviation bracket", 1, deviation_2048},
        {4, "topological error anchor", 1, topological},
        {5, "simplified physical qubits", 1, simplified_qubits},
        {6, "optimizer vs RSA table", 60, optimizer_table},
        {7, "DLP table structure", 60, dlp_structure},
        {8, "gate error rule of thumb", 1, scaling_rule},
        {9, "simulator correctness", 300,
         [](Outcome& o) { from_suites(o, {verify_adders(), verify_modexp(40)}); }},
        {10, "gate-count cross-check", 60, [](Outcome& o) { from_suites(o, {verify_gate_counts()}); }},
        {11, "factor recovery", 5, [](Outcome& o) { from_suites(o, {verify_factor_recovery()}); }},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        Outcome o;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            c.run(o);
        } catch (const std::exception& e) {
            o.expect(false, std::string("threw: ") + e.what());
        }
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        o.expect(s <= c.limit_s, fmt("%.2f s", s) + fmt(" (limit %g s)", c.limit_s));
        failed += !o.pass;
        std::printf("%s criterion %2d  %-34s %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name,
                    o.detail.str().c_str());
    }
    std::printf("%d/%zu criteria pass\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
