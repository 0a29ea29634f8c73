#include "shorcost/problem.hpp"

#include <array>
#include <utility>

namespace shorcost {

namespace {

// NIST SP 800-56A strengths for finite-field moduli, rounded to multiples of 8.
constexpr std::array<std::pair<int, int>, 7> kSecurityTable{{
    {1024, 80},
    {2048, 112},
    {3072, 128},
    {4096, 152},
    {8192, 200},
    {12288, 240},
    {16384, 272},
}};

constexpr std::array<Family, 6> kAllFamilies{
    Family::Rsa,           Family::DlpSchnorr,     Family::DlpSafeShort,
    Family::DlpSafeFull,   Family::DlpSchnorrShor, Family::DlpSafeShor,
};

}  // namespace

int exponent_length(ProblemKind kind, int n, int z, std::optional<int> n_r) {
    if (n < 16) {
        throw std::invalid_argument("modulus length must be at least 16 bits");
    }
    switch (kind) {
    case ProblemKind::RsaViaShortDlog:
        if (n % 2 != 0) {
            throw std::invalid_argument("RSA exponent formula requires even n");
        }
        return 3 * (n / 2 - 1) - 40;
    case ProblemKind::SchnorrGroupDlog:
    case ProblemKind::SafePrimeShortDlog:
        if (z <= 0) {
            throw std::invalid_argument("security level z must be positive");
        }
        return 6 * z;
    case ProblemKind::SafePrimeFullDlog:
        return 3 * (n - 1);
    case ProblemKind::KnownOrderShorDlog:
        if (!n_r || *n_r <= 0) {
            throw std::invalid_argument("known-order Shor exponent length needs n_r");
        }
        return 2 * (*n_r + 5);
    }
    throw std::invalid_argument("unknown problem kind");
}

int security_level(int n) {
    for (const auto& [bits, z] : kSecurityTable) {
        if (bits == n) {
            return z;
        }
    }
    throw UnsupportedError("unsupported modulus length " + std::to_string(n) +
                           " (no tabulated security level)");
}

const std::vector<int>& catalog_sizes() {
    static const std::vector<int> sizes = [] {
        std::vector<int> out;
        for (const auto& entry : kSecurityTable) {
            out.push_back(entry.first);
        }
        return out;
    }();
    return sizes;
}

ProblemKind kind_of(Family family) {
    switch (family) {
    case Family::Rsa: return ProblemKind::RsaViaShortDlog;
    case Family::DlpSchnorr: return ProblemKind::SchnorrGroupDlog;
    case Family::DlpSafeShort: return ProblemKind::SafePrimeShortDlog;
    case Family::DlpSafeFull: return ProblemKind::SafePrimeFullDlog;
    case Family::DlpSchnorrShor:
    case Family::DlpSafeShor: return ProblemKind::KnownOrderShorDlog;
    }
    throw std::invalid_argument("unknown family");
}

ProblemInstance make_instance(Family family, int n) {
    ProblemInstance p;
    p.family = family;
    p.kind = kind_of(family);
    p.n = n;
    p.z = security_level(n);
    switch (family) {
    case Family::Rsa:
        break;
    case Family::DlpSchnorr:
    case Family::DlpSchnorrShor:
        p.n_d = 2 * p.z;
        p.n_r = 2 * p.z;
        break;
    case Family::DlpSafeShort:
        p.n_d = 2 * p.z;
        p.n_r = n - 1;
        break;
    case Family::DlpSafeFull:
    case Family::DlpSafeShor:
        p.n_d = n - 1;
        p.n_r = n - 1;
        break;
    }
    p.n_e = exponent_length(p.kind, n, p.z,
                            p.kind == ProblemKind::KnownOrderShorDlog ? std::optional<int>(p.n_r)
                                                                      : std::nullopt);
    return p;
}

std::vector<ProblemInstance> catalog() {
    std::vector<ProblemInstance> out;
    for (Family f : kAllFamilies) {
        for (int n : catalog_sizes()) {
            out.push_back(make_instance(f, n));
        }
    }
    return out;
}

std::string_view to_string(ProblemKind kind) {
    switch (kind) {
    case ProblemKind::RsaViaShortDlog: return "RsaViaShortDlog";
    case ProblemKind::SchnorrGroupDlog: return "SchnorrGroupDlog";
    case ProblemKind::SafePrimeShortDlog: return "SafePrimeShortDlog";
    case ProblemKind::SafePrimeFullDlog: return "SafePrimeFullDlog";
    case ProblemKind::KnownOrderShorDlog: return "KnownOrderShorDlog";
    }
    return "?";
}

std::string_view to_string(Family family) {
    switch (family) {
    case Family::Rsa: return "rsa";
    case Family::DlpSchnorr: return "dlp-schnorr";
    case Family::DlpSafeShort: return "dlp-safe-short";
    case Family::DlpSafeFull: return "dlp-safe-full";
    case Family::DlpSchnorrShor: return "dlp-schnorr-shor";
    case Family::DlpSafeShor: return "dlp-safe-shor";
    }
    return "?";
}

Family parse_family(std::string_view name) {
    for (Family f : kAllFamilies) {
        if (to_string(f) == name) {
            return f;
        }
    }
    throw std::invalid_argument("unknown problem family '" + std::string(name) + "'");
}

}  // namespace shorcost
