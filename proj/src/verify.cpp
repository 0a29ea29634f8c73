#include "shorcost/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "shorcost/abstract_cost.hpp"
#include "shorcost/optimizer.hpp"
#include "shorcost/sim/arithmetic.hpp"
#include "shorcost/sim/coset.hpp"
#include "shorcost/sim/deviation.hpp"
#include "shorcost/sim/factor.hpp"
#include "shorcost/sim/modexp.hpp"
#include "shorcost/sim/runway.hpp"

namespace shorcost {

using namespace shorcost::sim;

namespace {

// Accumulates the first few failure messages of a suite.
class Checker {
public:
    explicit Checker(std::string name) : name_(std::move(name)) {}

    void check(bool ok, const std::string& what) {
        if (ok) return;
        ++failures_;
        if (failures_ <= 3) notes_ << (failures_ > 1 ? "; " : "") << what;
    }

    SuiteResult finish(const std::string& summary) const {
        if (failures_ == 0) return SuiteResult{name_, true, summary};
        std::ostringstream d;
        d << failures_ << " failure(s): " << notes_.str();
        return SuiteResult{name_, false, d.str()};
    }

private:
    std::string name_;
    int failures_ = 0;
    std::ostringstream notes_;
};

bool is_bijection(const Circuit& c) {
    const int q = c.num_qubits();
    if (q > 16) return false;
    std::vector<bool> seen(std::size_t{1} << q, false);
    std::vector<int> all(static_cast<std::size_t>(q));
    for (int i = 0; i < q; ++i) all[static_cast<std::size_t>(i)] = i;
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << q); ++v) {
        BasisState s(q, c.num_cbits());
        s.write(all, v);
        apply(c, s);
        const std::uint64_t out = s.read(all);
        if (seen[out]) return false;
        seen[out] = true;
    }
    return true;
}

bool is_prime(unsigned v) {
    if (v < 2) return false;
    for (unsigned d = 2; d * d <= v; ++d) {
        if (v % d == 0) return false;
    }
    return true;
}

}  // namespace

const std::vector<unsigned>& modexp_moduli() {
    static const std::vector<unsigned> moduli = {15, 21, 33, 35, 55, 77};
    return moduli;
}

SuiteResult verify_adders() {
    Checker ck("adders");
    for (int n = 1; n <= 6; ++n) {
        for (bool controlled : {false, true}) {
            const Circuit c = build_cuccaro_adder(n, controlled);
            const auto a = c.qubits("a");
            const auto b = c.qubits("b");
            const std::uint64_t wrap = std::uint64_t{1} << (n + 1);
            for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
                for (std::uint64_t y = 0; y < (std::uint64_t{1} << n); ++y) {
                    for (int ctrl = 0; ctrl <= (controlled ? 1 : 0); ++ctrl) {
                        BasisState s(c.num_qubits());
                        s.write(a, x);
                        s.write(b, y);
                        if (controlled) s.write(c.qubits("ctrl"), static_cast<std::uint64_t>(ctrl));
                        apply(c, s);
                        const bool active = !controlled || ctrl == 1;
                        const std::uint64_t want = active ? (x + y) % wrap : y;
                        ck.check(s.read(b) == want && s.read(a) == x,
                                 "adder n=" + std::to_string(n) + " a=" + std::to_string(x) +
                                     " b=" + std::to_string(y));
                    }
                }
            }
            const auto tof = count_resources(c).toffolis;
            const int per_bit = controlled ? manifest::kControlledAdderPerBit : manifest::kAdderPerBit;
            ck.check(tof == per_bit * n, "adder n=" + std::to_string(n) + " counted " +
                                             std::to_string(tof) + " Toffolis");
            if (n <= 3) ck.check(is_bijection(c), "adder n=" + std::to_string(n) + " not a bijection");
        }
        // in-place adder modulo 2^n
        Circuit m;
        const auto a = m.add_register("a", n);
        const auto b = m.add_register("b", n);
        const auto anc = m.add_register("anc", 1);
        emit_add_mod(m, a, b, anc[0]);
        for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
            for (std::uint64_t y = 0; y < (std::uint64_t{1} << n); ++y) {
                BasisState s(m.num_qubits());
                s.write(a, x);
                s.write(b, y);
                apply(m, s);
                ck.check(s.read(b) == ((x + y) & ((std::uint64_t{1} << n) - 1)),
                         "mod adder n=" + std::to_string(n));
            }
        }
        ck.check(count_resources(m).toffolis == 2 * n + manifest::kModAdderOffset,
                 "mod adder count n=" + std::to_string(n));
    }
    return ck.finish("exhaustive n<=6; 2n, 4n and 2n-2 Toffolis exactly");
}

SuiteResult verify_lookup() {
    Checker ck("lookup");
    {
        const std::vector<std::uint64_t> table = {0, 1, 2, 3};
        const Circuit c = build_lookup_addition(table, 2, 5);
        BasisState s(c.num_qubits());
        s.write(c.qubits("address"), 2);
        s.write(c.qubits("target"), 5);
        apply(c, s);
        ck.check(s.read(c.qubits("target")) == 7, "table [0,1,2,3] at 2 onto 5");
    }
    std::mt19937_64 rng(4);
    std::vector<std::uint64_t> table(16);
    for (auto& v : table) v = rng() % 16;
    const Circuit c = build_lookup_addition(table, 4, 4);
    for (std::uint64_t addr = 0; addr < 16; ++addr) {
        for (std::uint64_t t = 0; t < 16; ++t) {
            BasisState s(c.num_qubits());
            s.write(c.qubits("address"), addr);
            s.write(c.qubits("target"), t);
            apply(c, s);
            ck.check(s.read(c.qubits("target")) == (t + table[addr]) % 16 &&
                         s.read(c.qubits("address")) == addr && s.read(c.qubits("lookup")) == 0 &&
                         s.read(c.qubits("ands")) == 0,
                     "indexed add at address " + std::to_string(addr));
        }
    }
    for (int w = 1; w <= 8; ++w) {
        Circuit l;
        const auto addr = l.add_register("address", w);
        const auto out = l.add_register("out", 4);
        const auto ands = l.add_register("ands", w - 1);
        const std::vector<std::uint64_t> zeros(std::size_t{1} << w, 0);
        emit_lookup(l, zeros, addr, out, ands, true);
        ck.check(count_resources(l).toffolis == (std::int64_t{1} << w) + manifest::kLookupOffset,
                 "lookup count at width " + std::to_string(w));
    }
    ck.check(parse_text(to_text(c)) == c, "text export round trip");
    ck.check(count_resources(Circuit{}) == ResourceCount{}, "empty circuit resources");
    return ck.finish("exhaustive 16x16 indexed add; 2^w-2 Toffolis for w=1..8; text round trip");
}

SuiteResult verify_coset() {
    Checker ck("coset");
    const auto r = coset_encode(3, 7, 2);
    ck.check(r.population == std::vector<std::uint64_t>{3, 10, 17, 24}, "encode(3, 7, 2)");
    ck.check(coset_decode(17, 7) == 3, "decode(17, 7)");
    for (std::uint64_t k = 0; k < 7; ++k) {
        for (std::uint64_t v : coset_encode(k, 7, 3).population) {
            ck.check(coset_decode(v, 7) == k, "decode(encode(" + std::to_string(k) + "))");
        }
    }
    return ck.finish("support {jN+k}; decode(encode(k)) = k for N=7, c_pad=3");
}

SuiteResult verify_runways() {
    Checker ck("runways");
    const auto layout = make_runway_layout(8, 4, 2);
    ck.check(layout.pieces() == 2 && layout.total_width() == 10, "n=8 c_sep=4 c_pad=2 layout");
    for (std::uint64_t v = 0; v < 256; ++v) {
        for (std::uint64_t r = 0; r < 4; ++r) {
            const std::uint64_t rw[] = {r};
            ck.check(remove_runways_classically(layout, insert_runways(layout, v, rw)) == v,
                     "zero-addition reconstruction of " + std::to_string(v));
        }
    }

    // 50 random additions onto 200 with a 10-bit runway
    {
        const auto big = make_runway_layout(8, 4, 10);
        std::mt19937_64 rng(50);
        std::vector<std::uint64_t> table(8);
        for (auto& v : table) v = rng() % 256;
        const Circuit c = build_runway_lookup_addition(table, 3, big);
        const int trials = 2000;
        int bad = 0;
        for (int t = 0; t < trials; ++t) {
            const std::uint64_t rw[] = {rng() % 1024};
            BasisState s(c.num_qubits());
            s.write(c.qubits("register"), insert_runways(big, 200, rw));
            std::uint64_t want = 200;
            for (int i = 0; i < 50; ++i) {
                const std::uint64_t a = rng() % 8;
                s.write(c.qubits("address"), a);
                apply(c, s);
                want = (want + table[a]) % 256;
            }
            bad += remove_runways_classically(big, s.read(c.qubits("register"))) != want;
        }
        const double bound = 50.0 / 1024.0;
        ck.check(bad <= bound * trials, "runway additions failed " + std::to_string(bad) + "/" +
                                            std::to_string(trials));
    }

    // fold then unfold on every state of a two-piece register
    {
        const auto fl = make_runway_layout(6, 3, 2, 2);
        Circuit c = build_fold(fl);
        const std::size_t end = c.size();
        ck.check(fl.total_width() == 10, "fold layout width");
        const auto reg = c.qubits("register");
        const auto carry = c.qubits("carry");
        ck.check(folded_bits(fl, reg, carry).size() == 6 + 1 + 2, "folded bit count");
        Circuit round = c;
        round.append_reverse(0, end, true);
        for (std::uint64_t v = 0; v < 1024; ++v) {
            BasisState s(c.num_qubits());
            s.write(reg, v);
            // represented value before: pieces plus runway at weight 2^c_sep
            const std::uint64_t before = (v & 7) + ((v >> 5) << 3) + (((v >> 3) & 3) << 3);
            BasisState f = simulate(c, s);
            std::uint64_t after = 0;
            for (const auto& [q, w] : folded_bits(fl, reg, carry)) {
                after += std::uint64_t{f.get(q)} << w;
            }
            ck.check(after == before, "fold changed represented value of " + std::to_string(v));
            ck.check(simulate(round, s) == s, "unfold(fold) != identity on " + std::to_string(v));
        }
    }
    return ck.finish("exact reconstruction; 50-addition trials within bound; fold round trip on 2^10 states");
}

SuiteResult verify_modexp(int offsets_per_exponent) {
    Checker ck("modexp");
    std::ostringstream summary;
    struct Case {
        unsigned modulus;
        int c_sep;  // 0: no runways
    };
    std::vector<Case> cases;
    for (unsigned m : modexp_moduli()) cases.push_back({m, 0});
    cases.push_back({55, 3});
    cases.push_back({77, 4});

    for (const Case& cs : cases) {
        const int n = modulus_bits(cs.modulus);
        ModexpParams p;
        p.n_e = 8;
        p.c_exp = 2;
        p.c_mul = 3;
        p.c_pad = 10;
        p.c_sep = cs.c_sep == 0 ? n : cs.c_sep;
        const std::uint64_t g = 2;
        const ModexpCircuit m = build_windowed_modexp(g, cs.modulus, n, p);
        std::mt19937_64 rng(cs.modulus * 1000 + static_cast<unsigned>(cs.c_sep));
        long bad = 0;
        long total = 0;
        for (std::uint64_t e = 0; e < 256; ++e) {
            const std::uint64_t want = pow_mod(g, e, cs.modulus);
            for (int k = 0; k < offsets_per_exponent; ++k) {
                ++total;
                bad += run_modexp(m, e, sample_offsets(m, rng)) != want;
            }
        }
        const double frac = static_cast<double>(bad) / static_cast<double>(total);
        const double bound = modexp_deviation_bound(m);
        ck.check(frac <= bound, "N=" + std::to_string(cs.modulus) + " failure fraction " +
                                    std::to_string(frac) + " > bound " + std::to_string(bound));
        summary << "N=" << cs.modulus << (cs.c_sep ? " runways" : "") << ' ' << bad << '/'
                << total << " (bound " << std::round(bound * total) << ") ";
    }
    // fixed examples
    {
        ModexpParams p;
        p.n_e = 4;
        p.c_exp = 2;
        p.c_mul = 2;
        p.c_pad = 12;
        p.c_sep = 5;
        const auto m21 = build_windowed_modexp(2, 21, 5, p);
        const auto m15 = build_windowed_modexp(7, 15, 4, p);
        std::mt19937_64 rng(9);
        int ok21 = 0;
        int ok15 = 0;
        for (int k = 0; k < 32; ++k) {
            ok21 += run_modexp(m21, 5, sample_offsets(m21, rng)) == 11;
            ok15 += run_modexp(m15, 4, sample_offsets(m15, rng)) == 1;
        }
        ck.check(ok21 >= 28 && ok15 >= 28, "2^5 mod 21 or 7^4 mod 15");
    }
    return ck.finish(summary.str());
}

SuiteResult verify_deviation(long trials) {
    Checker ck("deviation");
    std::ostringstream summary;
    for (int c_pad : {0, 2, 4, 6, 8, 18}) {
        DeviationConfig cfg;
        cfg.c_pad = c_pad;
        const auto r = measure_empirical_deviation(cfg, trials);
        ck.check(r.fraction <= r.bound, "c_pad=" + std::to_string(c_pad) + " measured " +
                                            std::to_string(r.fraction) + " > bound " +
                                            std::to_string(r.bound));
        if (c_pad == 0) ck.check(r.fraction > 0.9, "c_pad=0 should corrupt nearly every run");
        if (c_pad == 18) ck.check(r.corrupted == 0, "c_pad=18 should not corrupt");
        summary << "c_pad=" << c_pad << ':' << r.corrupted << '/' << r.trials << ' ';
    }
    DeviationConfig cfg;
    cfg.c_pad = 5;
    cfg.seed = 77;
    ck.check(measure_empirical_deviation(cfg, 500) == measure_empirical_deviation_serial(cfg, 500),
             "parallel trials differ from serial");
    return ck.finish(summary.str());
}

SuiteResult verify_gate_counts() {
    Checker ck("gate-counts");
    int cases = 0;
    double worst = 0;
    for (int n : {8, 12, 16, 24, 32, 48}) {
        for (int c_sep : {4, 8, 16}) {
            if (n % c_sep != 0 || n / c_sep > 6) continue;
            for (int c_pad : {0, 2, 3, 4, 6}) {
                for (int c_exp = 1; c_exp <= 3; ++c_exp) {
                    for (int c_mul = 1; c_mul <= 3; ++c_mul) {
                        const int w = c_exp + c_mul;
                        const auto layout = make_runway_layout(n, c_sep, c_pad, c_pad);
                        const std::vector<std::uint64_t> table(std::size_t{1} << w, 0);
                        const Circuit c = build_runway_lookup_addition(table, w, layout);
                        const double sim = static_cast<double>(count_resources(c).toffolis);
                        const ArithmeticShape shape{n, w, c_exp, c_mul, c_sep, c_pad};
                        const double model = toffolis_per_lookup_addition(shape);
                        const double gap = std::abs(sim - model);
                        worst = std::max(worst, gap);
                        ++cases;
                        ck.check(gap <= 8, "n=" + std::to_string(n) + " c_sep=" +
                                               std::to_string(c_sep) + " c_pad=" +
                                               std::to_string(c_pad) + " w=" + std::to_string(w) +
                                               " gap " + std::to_string(gap));
                    }
                }
            }
        }
    }
    std::ostringstream s;
    s << cases << " shapes, largest gap " << worst << " Toffolis (limit 8)";
    return ck.finish(s.str());
}

SuiteResult verify_factor_recovery() {
    Checker ck("factor-recovery");
    int cases = 0;
    for (unsigned p = 2; p * p < 10000; ++p) {
        if (!is_prime(p)) continue;
        for (unsigned q = p; p * q < 10000; ++q) {
            if (!is_prime(q)) continue;
            ++cases;
            FactorPair f{};
            try {
                f = recover_factors_from_sum(p + q, p * q);
            } catch (const std::exception& e) {
                ck.check(false, "N=" + std::to_string(p * q) + ": " + e.what());
                continue;
            }
            ck.check(f.p == p && f.q == q, "N=" + std::to_string(p * q));
        }
    }
    bool threw = false;
    try {
        recover_factors_from_sum(19, 77);
    } catch (const PostprocessingFailure&) {
        threw = true;
    }
    ck.check(threw, "non-square discriminant must signal failure");
    return ck.finish(std::to_string(cases) + " semiprimes below 10000");
}

SuiteResult verify_optimizer() {
    Checker ck("optimizer");
    const auto grid = enumerate_grid();
    ck.check(grid.size() == kGridSize, "grid size " + std::to_string(grid.size()));
    const EstimationContext ctx;
    const auto problem = make_instance(Family::Rsa, 2048);
    const auto par = optimize(problem, grid, ctx);
    const auto ser = optimize_serial(problem, grid, ctx);
    ck.check(par.params == ser.params && par.objective == ser.objective,
             "parallel optimum differs from serial");
    const CostParams published{15, 27, 4, 5, 5, 1024, FactoryKind::CCZ};
    ck.check(par.objective <= evaluate(problem, published, ctx).objective,
             "optimum worse than the published point");
    std::ostringstream s;
    s << "rsa-2048 optimum (" << par.params.d1 << ',' << par.params.d2 << ','
      << par.params.delta_off << ',' << par.params.c_mul << ',' << par.params.c_exp << ','
      << par.params.c_sep << ',' << to_string(par.params.factory) << "), parallel == serial";
    return ck.finish(s.str());
}

std::vector<SuiteResult> run_all_suites(bool quick) {
    const std::vector<std::pair<std::string, std::function<SuiteResult()>>> suites = {
        {"adders", verify_adders},
        {"lookup", verify_lookup},
        {"coset", verify_coset},
        {"runways", verify_runways},
        {"modexp", [quick] { return verify_modexp(quick ? 4 : 40); }},
        {"deviation", [quick] { return verify_deviation(quick ? 1000 : 10000); }},
        {"gate-counts", verify_gate_counts},
        {"factor-recovery", verify_factor_recovery},
        {"optimizer", verify_optimizer},
    };
    std::vector<SuiteResult> results;
    for (const auto& [name, run] : suites) {
        try {
            results.push_back(run());
        } catch (const std::exception& e) {
            results.push_back({name, false, std::string("threw: ") + e.what()});
        }
    }
    return results;
}

}  // namespace shorcost
