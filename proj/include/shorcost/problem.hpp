#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace shorcost {

/// Raised for inputs outside a model's documented domain.
class UnsupportedError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class ProblemKind {
    RsaViaShortDlog,
    SchnorrGroupDlog,
    SafePrimeShortDlog,
    SafePrimeFullDlog,
    KnownOrderShorDlog,
};

/// One block of the published tables. The two known-order Shor blocks share
/// a ProblemKind but differ in the group-order length n_r.
enum class Family {
    Rsa,
    DlpSchnorr,
    DlpSafeShort,
    DlpSafeFull,
    DlpSchnorrShor,
    DlpSafeShor,
};

struct ProblemInstance {
    ProblemKind kind = ProblemKind::RsaViaShortDlog;
    Family family = Family::Rsa;
    int n = 0;    // modulus bits
    int n_e = 0;  // total exponent bits over all exponent registers
    int z = 0;    // classical security bits
    int n_d = 0;  // logarithm length; 0 when not applicable (RSA)
    int n_r = 0;  // group order length; 0 when not applicable (RSA)

    bool operator==(const ProblemInstance&) const = default;
};

/// Exponent length from the table formulas. `n_r` is required for
/// KnownOrderShorDlog and ignored otherwise.
int exponent_length(ProblemKind kind, int n, int z, std::optional<int> n_r = std::nullopt);

/// Tabulated classical security level; throws UnsupportedError off-table.
int security_level(int n);

/// Sizes that have a tabulated security level.
const std::vector<int>& catalog_sizes();

ProblemKind kind_of(Family family);

/// Builds the instance for a table family at a tabulated n.
ProblemInstance make_instance(Family family, int n);

/// Every row of the RSA and finite-field DLP tables.
std::vector<ProblemInstance> catalog();

std::string_view to_string(ProblemKind kind);
std::string_view to_string(Family family);
Family parse_family(std::string_view name);

}  // namespace shorcost
