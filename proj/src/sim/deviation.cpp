#include "shorcost/sim/deviation.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "shorcost/sim/circuit.hpp"
#include "shorcost/sim/coset.hpp"
#include "shorcost/sim/runway.hpp"

namespace shorcost::sim {

namespace {

struct Harness {
    DeviationConfig config;
    std::uint64_t modulus = 0;
    RunwayLayout layout;
    std::vector<std::uint64_t> table;
    Circuit circuit;
    std::vector<int> address;
    std::vector<int> reg;
};

Harness make_harness(const DeviationConfig& config) {
    if (config.n < 2 || config.n > 32 || config.c_pad < 0 || config.c_sep < 1 ||
        config.additions < 0 || config.address_width < 1 || config.address_width > 10) {
        throw std::invalid_argument("deviation harness configuration out of range");
    }
    Harness h;
    h.config = config;
    h.modulus = deviation_modulus(config.n);
    h.layout = make_runway_layout(config.n, config.c_sep, config.c_pad, config.c_pad);
    if (h.layout.total_width() > 64) {
        throw std::invalid_argument("deviation harness register exceeds 64 bits");
    }
    std::mt19937_64 rng(config.seed);
    std::uniform_int_distribution<std::uint64_t> entry(0, h.modulus - 1);
    h.table.resize(std::size_t{1} << config.address_width);
    for (auto& v : h.table) v = entry(rng);
    h.circuit = build_runway_lookup_addition(h.table, config.address_width, h.layout);
    h.address = h.circuit.qubits("address");
    h.reg = h.circuit.qubits("register");
    return h;
}

bool run_trial(const Harness& h, std::int64_t trial) {
    std::seed_seq seq{h.config.seed, static_cast<std::uint64_t>(trial), std::uint64_t{0x5eed}};
    std::mt19937_64 rng(seq);
    std::uniform_int_distribution<std::uint64_t> residue(0, h.modulus - 1);
    std::uniform_int_distribution<std::uint64_t> offset(
        0, (std::uint64_t{1} << h.config.c_pad) - 1);
    std::uniform_int_distribution<std::uint64_t> addr(0, h.table.size() - 1);

    const std::uint64_t k = residue(rng);
    const std::uint64_t j = offset(rng);
    std::vector<std::uint64_t> runways(static_cast<std::size_t>(h.layout.pieces() - 1));
    for (auto& r : runways) r = offset(rng);

    BasisState s(h.circuit.num_qubits(), h.circuit.num_cbits());
    s.write(h.reg, insert_runways(h.layout, coset_member(k, h.modulus, j), runways));
    std::uint64_t expected = k;
    for (int i = 0; i < h.config.additions; ++i) {
        const std::uint64_t a = addr(rng);
        s.write(h.address, a);
        apply(h.circuit, s);
        expected = (expected + h.table[a]) % h.modulus;
    }
    const std::uint64_t got =
        coset_decode(remove_runways_classically(h.layout, s.read(h.reg)), h.modulus);
    return got != expected;
}

DeviationResult finish(const DeviationConfig& config, std::int64_t trials, std::int64_t bad) {
    DeviationResult r;
    r.trials = trials;
    r.corrupted = bad;
    r.fraction = static_cast<double>(bad) / static_cast<double>(trials);
    r.bound = addition_deviation_bound(config);
    return r;
}

void require_trials(std::int64_t trials) {
    if (trials < 100) {
        throw std::invalid_argument("deviation measurement needs at least 100 trials");
    }
}

}  // namespace

std::uint64_t deviation_modulus(int n) {
    if (n < 2 || n > 62) {
        throw std::invalid_argument("deviation modulus needs 2 <= n <= 62");
    }
    return (std::uint64_t{1} << n) - 1;
}

double addition_deviation_bound(const DeviationConfig& config) {
    const int pieces = (config.n + config.c_sep - 1) / config.c_sep;
    return std::min(1.0, config.additions * pieces * std::ldexp(1.0, -config.c_pad));
}

DeviationResult measure_empirical_deviation_serial(const DeviationConfig& config,
                                                   std::int64_t trials) {
    require_trials(trials);
    const Harness h = make_harness(config);
    std::int64_t bad = 0;
    for (std::int64_t t = 0; t < trials; ++t) {
        bad += run_trial(h, t) ? 1 : 0;
    }
    return finish(config, trials, bad);
}

DeviationResult measure_empirical_deviation(const DeviationConfig& config, std::int64_t trials) {
    require_trials(trials);
    const Harness h = make_harness(config);
    std::int64_t bad = 0;
#pragma omp parallel for reduction(+ : bad) schedule(static)
    for (std::int64_t t = 0; t < trials; ++t) {
        bad += run_trial(h, t) ? 1 : 0;
    }
    return finish(config, trials, bad);
}

}  // namespace shorcost::sim
