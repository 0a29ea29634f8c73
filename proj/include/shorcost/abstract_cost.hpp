#pragma once

#include <cstdint>
#include <string_view>

namespace shorcost {

enum class FactoryKind { CCZ, T };

std::string_view to_string(FactoryKind kind);
FactoryKind parse_factory_kind(std::string_view name);

/// One point of the parameter grid.
struct CostParams {
    int d1 = 17;         // distillation (level 1) code distance
    int d2 = 27;         // computation (level 2) code distance
    int delta_off = 10;  // padding offset: c_pad - ceil(2 lg n + lg n_e)
    int c_exp = 5;       // exponent window bits
    int c_mul = 5;       // multiplication window bits
    int c_sep = 1024;    // runway separation
    FactoryKind factory = FactoryKind::CCZ;

    bool operator==(const CostParams&) const = default;
    auto operator<=>(const CostParams&) const = default;
};

/// Throws std::invalid_argument if any field is non-positive or a distance is even.
void validate(const CostParams& params);

/// Problem size plus resolved arithmetic parameters; what the abstract
/// formulas actually consume.
struct ArithmeticShape {
    int n = 0;
    std::int64_t n_e = 0;
    int c_exp = 1;
    int c_mul = 1;
    int c_sep = 1;
    int c_pad = 0;

    int pieces() const { return (n + c_sep - 1) / c_sep; }
};

int padding_length(int n, std::int64_t n_e, int delta_off);

ArithmeticShape make_shape(int n, std::int64_t n_e, const CostParams& params);

struct AbstractCosts {
    std::int64_t lookup_additions = 0;
    double toffoli_count = 0;
    double measurement_depth = 0;
    std::int64_t abstract_qubits = 0;
    int c_pad = 0;
};

std::int64_t lookup_addition_count(const ArithmeticShape& s);
std::int64_t lookup_addition_count(int n, std::int64_t n_e, const CostParams& params);

/// Toffolis of one lookup addition: 2n + c_pad n / c_sep + 2^(c_exp + c_mul).
double toffolis_per_lookup_addition(const ArithmeticShape& s);
/// Dependent measurements of one lookup addition: 2 c_sep + 2 c_pad + 2^(c_exp + c_mul).
double depth_per_lookup_addition(const ArithmeticShape& s);

double toffoli_count(const ArithmeticShape& s);
double toffoli_count(int n, std::int64_t n_e, const CostParams& params);
double measurement_depth(const ArithmeticShape& s);
double measurement_depth(int n, std::int64_t n_e, const CostParams& params);
std::int64_t abstract_qubits(const ArithmeticShape& s);
std::int64_t abstract_qubits(int n, std::int64_t n_e, const CostParams& params);

AbstractCosts abstract_costs(int n, std::int64_t n_e, const CostParams& params);

/// Leading-term Toffoli counts of the unoptimized constructions.
struct BaselineCosts {
    double reference = 0;         // 20 n_e n^2, five-adder modular addition
    double coset = 0;             // 8 n_e n^2, coset representation
    double windowed_half_lg = 0;  // 24 n_e n^2 / lg^2 n, windows of lg(n)/2
};

BaselineCosts baseline_costs(int n, std::int64_t n_e);

struct LookupCosts {
    std::int64_t compute = 0;
    std::int64_t uncompute = 0;
    std::int64_t uncompute_ancillae = 0;
};

LookupCosts lookup_costs(int c_exp, int c_mul, int n);

}  // namespace shorcost
