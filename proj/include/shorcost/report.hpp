#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "shorcost/optimizer.hpp"

namespace shorcost {

/// One row of the RSA / DLP tables, in table column order.
struct ReportRow {
    int n = 0;
    std::int64_t n_e = 0;
    int d1 = 0;
    int d2 = 0;
    int delta_off = 0;
    int c_mul = 0;
    int c_exp = 0;
    int c_sep = 0;
    double retry_risk = 0;
    double volume_per_run = 0;   // megaqubitdays
    double expected_volume = 0;  // megaqubitdays
    double megaqubits = 0;
    double hours_per_run = 0;

    bool operator==(const ReportRow&) const = default;
};

ReportRow to_row(const EstimateReport& report);

const std::vector<std::string>& report_columns();

enum class ReportFormat { Csv, Json };

ReportFormat parse_report_format(std::string_view name);

/// Two significant figures, plain decimal notation ("510000", "0.0000037").
std::string format_sig2(double value);

void write_csv(const std::vector<ReportRow>& rows, std::ostream& out);
void write_json(const std::vector<ReportRow>& rows, std::ostream& out);
std::vector<ReportRow> read_json(std::istream& in);

/// Writes to `path`; "-" means stdout. Throws std::runtime_error if the
/// file cannot be written.
void write_report(const std::vector<ReportRow>& rows, ReportFormat format,
                  const std::string& path);

/// Full-precision JSON for a single estimate, including the error budget.
std::string estimate_json(const EstimateReport& report);

/// Human-readable summary of one estimate.
std::string estimate_text(const EstimateReport& report);

struct SweepPoint {
    int n = 0;
    std::int64_t n_e = 0;
    double expected_volume = 0;
    double megaqubits = 0;
    double hours_per_run = 0;
};

void write_sweep_csv(const std::vector<SweepPoint>& points, std::ostream& out);

}  // namespace shorcost
