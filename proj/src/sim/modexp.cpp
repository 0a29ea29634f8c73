#include "shorcost/sim/modexp.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "shorcost/sim/arithmetic.hpp"
#include "shorcost/sim/coset.hpp"

namespace shorcost::sim {

namespace {
__extension__ typedef unsigned __int128 u128;
}  // namespace

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exponent, std::uint64_t modulus) {
    if (modulus == 0) {
        throw std::invalid_argument("modulus must be positive");
    }
    u128 result = 1 % modulus;
    u128 b = base % modulus;
    while (exponent) {
        if (exponent & 1U) result = result * b % modulus;
        b = b * b % modulus;
        exponent >>= 1;
    }
    return static_cast<std::uint64_t>(result);
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t modulus) {
    if (modulus > (std::uint64_t{1} << 62)) {
        throw std::invalid_argument("inverse_mod supports moduli up to 2^62");
    }
    std::int64_t r0 = static_cast<std::int64_t>(modulus);
    std::int64_t r1 = static_cast<std::int64_t>(a % modulus);
    std::int64_t t0 = 0, t1 = 1;
    while (r1 != 0) {
        const std::int64_t q = r0 / r1;
        std::swap(r0, r1);
        r1 -= q * r0;
        std::swap(t0, t1);
        t1 -= q * t0;
    }
    if (r0 != 1) {
        throw std::invalid_argument("value is not invertible modulo N");
    }
    if (t0 < 0) t0 += static_cast<std::int64_t>(modulus);
    return static_cast<std::uint64_t>(t0);
}

namespace {

struct Workspace {
    std::vector<int> lookup;
    std::vector<int> exp;
    std::vector<int> ands;
    std::vector<int> inc;
    std::vector<int> carries;
    int anc = -1;
};

// target += factor * multiplier[e] (mod N), e read from the exponent address.
void emit_multiply_add(ModexpCircuit& m, const Workspace& ws, std::span<const int> target,
                       std::span<const int> factor, int exp_bits,
                       const std::vector<std::uint64_t>& multiplier) {
    Circuit& c = m.circuit;
    const std::uint64_t N = m.modulus;

    const std::size_t fold_begin = c.size();
    emit_fold(c, m.layout, factor, ws.carries, ws.anc);
    const std::size_t fold_end = c.size();

    const auto bits = folded_bits(m.layout, factor, ws.carries);
    const std::size_t c_mul = static_cast<std::size_t>(m.params.c_mul);
    for (std::size_t start = 0; start < bits.size(); start += c_mul) {
        const std::size_t len = std::min(c_mul, bits.size() - start);
        std::vector<int> address;
        std::vector<std::uint64_t> weight(len);
        for (std::size_t b = 0; b < len; ++b) {
            address.push_back(bits[start + b].first);
            weight[b] = pow_mod(2, static_cast<std::uint64_t>(bits[start + b].second), N);
        }
        address.insert(address.end(), ws.exp.begin(), ws.exp.begin() + exp_bits);

        std::vector<std::uint64_t> table(std::size_t{1} << address.size());
        for (std::size_t idx = 0; idx < table.size(); ++idx) {
            std::uint64_t window = 0;
            for (std::size_t b = 0; b < len; ++b) {
                if ((idx >> b) & 1U) window = (window + weight[b]) % N;
            }
            const std::uint64_t e = idx >> len;
            table[idx] = static_cast<std::uint64_t>(
                static_cast<u128>(window) * multiplier[e] % N);
        }
        const std::span<const int> ands(ws.ands.data(), address.size() - 1);
        emit_lookup(c, table, address, ws.lookup, ands, true);
        emit_runway_addition(c, m.layout, target, ws.lookup, ws.anc, ws.inc);
        emit_lookup(c, table, address, ws.lookup, ands, false);
        ++m.lookup_additions;
    }

    c.append_reverse(fold_begin, fold_end, true);
}

}  // namespace

ModexpCircuit build_windowed_modexp(std::uint64_t g, std::uint64_t modulus, int n,
                                    const ModexpParams& params) {
    if (modulus < 3) {
        throw std::invalid_argument("modulus must be at least 3");
    }
    if (n < modulus_bits(modulus) || n > 12) {
        throw std::invalid_argument("modexp needs ceil(lg N) <= n <= 12");
    }
    if (std::gcd(g % modulus, modulus) != 1) {
        throw std::invalid_argument("g is not invertible modulo N");
    }
    if (params.n_e < 1 || params.c_exp < 1 || params.c_mul < 1 || params.c_pad < 1 ||
        params.c_sep < 1 || params.c_exp > params.n_e || params.n_e > 62) {
        throw std::invalid_argument("modexp window sizes must be positive and c_exp <= n_e");
    }

    ModexpCircuit m;
    m.g = g % modulus;
    m.modulus = modulus;
    m.n = n;
    m.params = params;
    m.layout = make_runway_layout(n, params.c_sep, params.c_pad, params.c_pad);
    if (m.layout.total_width() > 64) {
        throw std::invalid_argument("coset register with runways exceeds 64 bits");
    }

    Circuit& c = m.circuit;
    c.set_num_cbits(params.n_e);
    m.x = c.add_register("x", m.layout.total_width());
    m.y = c.add_register("y", m.layout.total_width());
    Workspace ws;
    ws.lookup = c.add_register("lookup", n);
    ws.exp = c.add_register("exp", params.c_exp);
    ws.ands = c.add_register("ands", params.c_exp + params.c_mul - 1);
    ws.inc = c.add_register("inc", params.c_pad - 1);
    ws.carries = c.add_register("fold", m.layout.pieces() - 1);
    ws.anc = c.add_register("anc", 1)[0];

    std::vector<int> acc = m.x;
    std::vector<int> work = m.y;
    for (int start = 0; start < params.n_e; start += params.c_exp) {
        const int width = std::min(params.c_exp, params.n_e - start);
        for (int b = 0; b < width; ++b) c.classical_x(start + b, ws.exp[static_cast<std::size_t>(b)]);

        // k_e = g^(e 2^start) for each window value e
        const std::uint64_t step = pow_mod(m.g, std::uint64_t{1} << start, modulus);
        std::vector<std::uint64_t> k(std::size_t{1} << width);
        std::vector<std::uint64_t> neg_inv(k.size());
        for (std::size_t e = 0; e < k.size(); ++e) {
            k[e] = pow_mod(step, e, modulus);
            neg_inv[e] = (modulus - inverse_mod(k[e], modulus)) % modulus;
        }
        emit_multiply_add(m, ws, work, acc, width, k);      // work += acc k
        emit_multiply_add(m, ws, acc, work, width, neg_inv);  // acc -= work k^-1, now 0 mod N
        std::swap(acc, work);

        for (int b = 0; b < width; ++b) c.classical_x(start + b, ws.exp[static_cast<std::size_t>(b)]);
    }
    m.result = acc;
    return m;
}

ModexpOffsets sample_offsets(const ModexpCircuit& m, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint64_t> coset(0, (std::uint64_t{1} << m.params.c_pad) - 1);
    ModexpOffsets o;
    o.coset_x = coset(rng);
    o.coset_y = coset(rng);
    for (int i = 0; i + 1 < m.layout.pieces(); ++i) {
        o.runways_x.push_back(coset(rng));
        o.runways_y.push_back(coset(rng));
    }
    return o;
}

BasisState prepare_input(const ModexpCircuit& m, std::uint64_t e, const ModexpOffsets& offsets) {
    if (m.params.n_e < 64 && (e >> m.params.n_e) != 0) {
        throw std::invalid_argument("exponent wider than n_e");
    }
    const std::uint64_t limit = std::uint64_t{1} << m.params.c_pad;
    if (offsets.coset_x >= limit || offsets.coset_y >= limit) {
        throw std::invalid_argument("coset offset out of range");
    }
    BasisState s(m.circuit.num_qubits(), m.circuit.num_cbits());
    s.write(m.x, insert_runways(m.layout, coset_member(1 % m.modulus, m.modulus, offsets.coset_x),
                                offsets.runways_x));
    s.write(m.y, insert_runways(m.layout, coset_member(0, m.modulus, offsets.coset_y),
                                offsets.runways_y));
    for (int b = 0; b < m.params.n_e; ++b) {
        s.set_record(b, (e >> b) & 1U);
    }
    return s;
}

std::uint64_t decode_result(const ModexpCircuit& m, const BasisState& state) {
    return coset_decode(remove_runways_classically(m.layout, state.read(m.result)), m.modulus);
}

std::uint64_t run_modexp(const ModexpCircuit& m, std::uint64_t e, const ModexpOffsets& offsets) {
    BasisState s = prepare_input(m, e, offsets);
    apply(m.circuit, s);
    return decode_result(m, s);
}

double modexp_deviation_bound(const ModexpCircuit& m) {
    const int p = m.layout.pieces();
    const double per_carry = std::ldexp(1.0, -m.params.c_pad);
    double bound = static_cast<double>(m.lookup_additions) * p * per_carry;
    // runway insertion on both registers
    for (int i = 1; i < p; ++i) {
        bound += 2.0 * (std::ldexp(1.0, i * m.params.c_sep) / static_cast<double>(m.modulus) +
                        per_carry);
    }
    return std::min(1.0, bound);
}

}  // namespace shorcost::sim
