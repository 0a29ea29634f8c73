#include "shorcost/abstract_cost.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace shorcost {

namespace {

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

// Sums of base-2 logs land on integers for power-of-two inputs; keep those from
// rounding up on a last-ulp error.
int ceil_tolerant(double x) { return static_cast<int>(std::ceil(x - 1e-9)); }

}  // namespace

std::string_view to_string(FactoryKind kind) {
    return kind == FactoryKind::CCZ ? "CCZ" : "T";
}

FactoryKind parse_factory_kind(std::string_view name) {
    if (name == "CCZ" || name == "ccz") {
        return FactoryKind::CCZ;
    }
    if (name == "T" || name == "t") {
        return FactoryKind::T;
    }
    throw std::invalid_argument("unknown factory kind '" + std::string(name) + "'");
}

void validate(const CostParams& p) {
    if (p.d1 < 3 || p.d2 < 3 || p.d1 % 2 == 0 || p.d2 % 2 == 0) {
        throw std::invalid_argument("code distances must be odd and at least 3");
    }
    if (p.delta_off < 0 || p.c_exp < 1 || p.c_mul < 1 || p.c_sep < 1) {
        throw std::invalid_argument("window sizes and runway separation must be positive");
    }
}

int padding_length(int n, std::int64_t n_e, int delta_off) {
    if (n < 2 || n_e < 2) {
        throw std::invalid_argument("padding_length needs n, n_e >= 2");
    }
    return delta_off + ceil_tolerant(2.0 * std::log2(n) + std::log2(static_cast<double>(n_e)));
}

ArithmeticShape make_shape(int n, std::int64_t n_e, const CostParams& params) {
    validate(params);
    if (n_e < params.c_exp) {
        throw std::invalid_argument("exponent length is shorter than the exponent window");
    }
    return ArithmeticShape{n, n_e, params.c_exp, params.c_mul, params.c_sep,
                           padding_length(n, n_e, params.delta_off)};
}

std::int64_t lookup_addition_count(const ArithmeticShape& s) {
    // Each multiply-add iterates the main bits, the coset padding, and one
    // folded carry qubit per runway.
    const std::int64_t multiplications = ceil_div(s.n_e, s.c_exp);
    const std::int64_t iterated = std::int64_t{s.n} + s.c_pad + (s.pieces() - 1);
    return multiplications * 2 * ceil_div(iterated, s.c_mul);
}

std::int64_t lookup_addition_count(int n, std::int64_t n_e, const CostParams& params) {
    return lookup_addition_count(make_shape(n, n_e, params));
}

double toffolis_per_lookup_addition(const ArithmeticShape& s) {
    return 2.0 * s.n + static_cast<double>(s.c_pad) * s.n / s.c_sep +
           std::ldexp(1.0, s.c_exp + s.c_mul);
}

double depth_per_lookup_addition(const ArithmeticShape& s) {
    return 2.0 * s.c_sep + 2.0 * s.c_pad + std::ldexp(1.0, s.c_exp + s.c_mul);
}

double toffoli_count(const ArithmeticShape& s) {
    return static_cast<double>(lookup_addition_count(s)) * toffolis_per_lookup_addition(s);
}

double toffoli_count(int n, std::int64_t n_e, const CostParams& params) {
    return toffoli_count(make_shape(n, n_e, params));
}

double measurement_depth(const ArithmeticShape& s) {
    return static_cast<double>(lookup_addition_count(s)) * depth_per_lookup_addition(s);
}

double measurement_depth(int n, std::int64_t n_e, const CostParams& params) {
    return measurement_depth(make_shape(n, n_e, params));
}

std::int64_t abstract_qubits(const ArithmeticShape& s) {
    // accumulator, workspace and lookup output, each with padding and runways
    const std::int64_t per_register = std::int64_t{s.n} + std::int64_t{s.c_pad} * s.pieces() + s.c_pad;
    return 3 * per_register + s.c_exp + s.c_mul;
}

std::int64_t abstract_qubits(int n, std::int64_t n_e, const CostParams& params) {
    return abstract_qubits(make_shape(n, n_e, params));
}

AbstractCosts abstract_costs(int n, std::int64_t n_e, const CostParams& params) {
    const ArithmeticShape s = make_shape(n, n_e, params);
    return AbstractCosts{lookup_addition_count(s), toffoli_count(s), measurement_depth(s),
                         abstract_qubits(s), s.c_pad};
}

BaselineCosts baseline_costs(int n, std::int64_t n_e) {
    if (n < 4) {
        throw std::invalid_argument("baseline_costs needs n >= 4");
    }
    const double nn = static_cast<double>(n) * n * static_cast<double>(n_e);
    const double lg = std::log2(n);
    return BaselineCosts{20.0 * nn, 8.0 * nn, 24.0 * nn / (lg * lg)};
}

LookupCosts lookup_costs(int c_exp, int c_mul, int n) {
    if (c_exp < 1 || c_mul < 1) {
        throw std::invalid_argument("lookup windows must be at least one bit");
    }
    const int address = c_exp + c_mul;
    const std::int64_t entries = std::int64_t{1} << address;
    const double root = std::sqrt(static_cast<double>(entries));
    const auto root_up = static_cast<std::int64_t>(std::ceil(root));
    return LookupCosts{entries, static_cast<std::int64_t>(std::ceil(2.0 * root)),
                       std::max<std::int64_t>(0, root_up - n)};
}

}  // namespace shorcost
