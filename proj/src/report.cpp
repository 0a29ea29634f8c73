#include "shorcost/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace shorcost {

namespace {

constexpr double kSecondsPerHour = 3600.0;

using nlohmann::json;

double number_or_inf(const json& j) {
    return j.is_null() ? std::numeric_limits<double>::infinity() : j.get<double>();
}

json row_to_json(const ReportRow& r) {
    return json{{"n", r.n},
                {"n_e", r.n_e},
                {"d1", r.d1},
                {"d2", r.d2},
                {"delta_off", r.delta_off},
                {"c_mul", r.c_mul},
                {"c_exp", r.c_exp},
                {"c_sep", r.c_sep},
                {"retry_risk", r.retry_risk},
                {"volume_per_run", r.volume_per_run},
                {"expected_volume", r.expected_volume},
                {"megaqubits", r.megaqubits},
                {"hours_per_run", r.hours_per_run}};
}

ReportRow row_from_json(const json& j) {
    ReportRow r;
    r.n = j.at("n").get<int>();
    r.n_e = j.at("n_e").get<std::int64_t>();
    r.d1 = j.at("d1").get<int>();
    r.d2 = j.at("d2").get<int>();
    r.delta_off = j.at("delta_off").get<int>();
    r.c_mul = j.at("c_mul").get<int>();
    r.c_exp = j.at("c_exp").get<int>();
    r.c_sep = j.at("c_sep").get<int>();
    r.retry_risk = number_or_inf(j.at("retry_risk"));
    r.volume_per_run = number_or_inf(j.at("volume_per_run"));
    r.expected_volume = number_or_inf(j.at("expected_volume"));
    r.megaqubits = number_or_inf(j.at("megaqubits"));
    r.hours_per_run = number_or_inf(j.at("hours_per_run"));
    return r;
}

template <typename Writer>
void write_to(const std::string& path, Writer&& writer) {
    if (path == "-") {
        writer(std::cout);
        std::cout.flush();
        return;
    }
    // binary mode keeps LF line endings on every platform
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot write '" + path + "'");
    }
    writer(out);
    out.flush();
    if (!out) {
        throw std::runtime_error("error while writing '" + path + "'");
    }
}

}  // namespace

ReportRow to_row(const EstimateReport& report) {
    ReportRow r;
    r.n = report.problem.n;
    r.n_e = report.problem.n_e;
    r.d1 = report.params.d1;
    r.d2 = report.params.d2;
    r.delta_off = report.params.delta_off;
    r.c_mul = report.params.c_mul;
    r.c_exp = report.params.c_exp;
    r.c_sep = report.params.c_sep;
    r.retry_risk = report.physical.retry_risk;
    r.volume_per_run = report.physical.volume_per_run;
    r.expected_volume = report.physical.expected_volume;
    r.megaqubits = report.physical.physical_qubits / 1e6;
    r.hours_per_run = report.physical.runtime_per_run / kSecondsPerHour;
    return r;
}

const std::vector<std::string>& report_columns() {
    static const std::vector<std::string> columns = {
        "n",     "n_e",        "d1",           "d2",             "delta_off",
        "c_mul", "c_exp",      "c_sep",        "retry_risk",     "volume_per_run",
        "expected_volume",     "megaqubits",   "hours_per_run"};
    return columns;
}

ReportFormat parse_report_format(std::string_view name) {
    if (name == "csv") return ReportFormat::Csv;
    if (name == "json") return ReportFormat::Json;
    throw std::invalid_argument("unknown report format '" + std::string(name) + "'");
}

std::string format_sig2(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    if (value == 0.0) return "0";

    // Let printf do the rounding, then re-emit the rounded value in fixed notation.
    char sci[32];
    std::snprintf(sci, sizeof sci, "%.1e", value);
    const char* e = std::strchr(sci, 'e');
    const int exponent = std::atoi(e + 1);
    const double rounded = std::strtod(sci, nullptr);
    const int decimals = std::max(0, 1 - exponent);
    char out[400];
    std::snprintf(out, sizeof out, "%.*f", decimals, rounded);
    return out;
}

void write_csv(const std::vector<ReportRow>& rows, std::ostream& out) {
    const auto& cols = report_columns();
    for (std::size_t i = 0; i < cols.size(); ++i) {
        out << (i ? "," : "") << cols[i];
    }
    out << '\n';
    for (const ReportRow& r : rows) {
        out << r.n << ',' << r.n_e << ',' << r.d1 << ',' << r.d2 << ',' << r.delta_off << ','
            << r.c_mul << ',' << r.c_exp << ',' << r.c_sep << ',' << format_sig2(r.retry_risk)
            << ',' << format_sig2(r.volume_per_run) << ',' << format_sig2(r.expected_volume) << ','
            << format_sig2(r.megaqubits) << ',' << format_sig2(r.hours_per_run) << '\n';
    }
}

void write_json(const std::vector<ReportRow>& rows, std::ostream& out) {
    json arr = json::array();
    for (const ReportRow& r : rows) {
        arr.push_back(row_to_json(r));
    }
    out << arr.dump(2) << '\n';
}

std::vector<ReportRow> read_json(std::istream& in) {
    json arr;
    try {
        in >> arr;
    } catch (const json::exception& e) {
        throw std::runtime_error(std::string("report JSON: ") + e.what());
    }
    if (!arr.is_array()) {
        throw std::runtime_error("report JSON must be an array of rows");
    }
    std::vector<ReportRow> rows;
    for (const json& j : arr) {
        rows.push_back(row_from_json(j));
    }
    return rows;
}

void write_report(const std::vector<ReportRow>& rows, ReportFormat format,
                  const std::string& path) {
    write_to(path, [&](std::ostream& out) {
        if (format == ReportFormat::Csv) {
            write_csv(rows, out);
        } else {
            write_json(rows, out);
        }
    });
}

std::string estimate_json(const EstimateReport& r) {
    const ReportRow row = to_row(r);
    json j = row_to_json(row);
    j["problem"] = std::string(to_string(r.problem.family));
    j["factory"] = std::string(to_string(r.params.factory));
    j["flagged"] = r.flagged;
    j["objective"] = r.objective;
    j["abstract"] = {{"lookup_additions", r.abstract.lookup_additions},
                     {"toffoli_count", r.abstract.toffoli_count},
                     {"measurement_depth", r.abstract.measurement_depth},
                     {"abstract_qubits", r.abstract.abstract_qubits},
                     {"c_pad", r.abstract.c_pad}};
    j["errors"] = {{"deviation", r.errors.deviation},
                   {"approximation", r.errors.approximation_error},
                   {"topological", r.errors.topological_error},
                   {"distillation", r.errors.distillation_error},
                   {"postprocessing", r.errors.postprocessing_failure}};
    j["board"] = {{"pieces", r.physical.board.pieces},
                  {"width_per_piece", r.physical.board.width_per_piece},
                  {"height", r.physical.board.height},
                  {"factories_per_piece", r.physical.board.factories_per_piece},
                  {"logical_qubits", r.physical.board.logical_qubit_total}};
    j["physical_qubits"] = r.physical.physical_qubits;
    j["runtime_seconds"] = r.physical.runtime_per_run;
    return j.dump(2) + "\n";
}

std::string estimate_text(const EstimateReport& r) {
    const ReportRow row = to_row(r);
    std::ostringstream out;
    out << "problem          " << to_string(r.problem.family) << " n=" << r.problem.n
        << " n_e=" << r.problem.n_e << '\n';
    out << "parameters       d1=" << row.d1 << " d2=" << row.d2 << " delta_off=" << row.delta_off
        << " c_mul=" << row.c_mul << " c_exp=" << row.c_exp << " c_sep=" << row.c_sep
        << " factory=" << to_string(r.params.factory) << '\n';
    out << "lookup additions " << r.abstract.lookup_additions << '\n';
    out << "toffolis         " << format_sig2(r.abstract.toffoli_count) << '\n';
    out << "meas. depth      " << format_sig2(r.abstract.measurement_depth) << '\n';
    out << "abstract qubits  " << r.abstract.abstract_qubits << '\n';
    out << "retry risk       " << format_sig2(row.retry_risk * 100) << "%"
        << (r.flagged ? "  (flagged: 50% or more)" : "") << '\n';
    out << "  topological    " << format_sig2(r.errors.topological_error) << '\n';
    out << "  distillation   " << format_sig2(r.errors.distillation_error) << '\n';
    out << "  approximation  " << format_sig2(r.errors.approximation_error) << '\n';
    out << "volume per run   " << format_sig2(row.volume_per_run) << " megaqubitdays\n";
    out << "expected volume  " << format_sig2(row.expected_volume) << " megaqubitdays\n";
    out << "qubits           " << format_sig2(row.megaqubits) << " megaqubits\n";
    out << "runtime          " << format_sig2(row.hours_per_run) << " hours\n";
    return out.str();
}

void write_sweep_csv(const std::vector<SweepPoint>& points, std::ostream& out) {
    out << "n,n_e,expected_volume,megaqubits,hours_per_run\n";
    for (const SweepPoint& p : points) {
        out << p.n << ',' << p.n_e << ',' << format_sig2(p.expected_volume) << ','
            << format_sig2(p.megaqubits) << ',' << format_sig2(p.hours_per_run) << '\n';
    }
}

}  // namespace shorcost
