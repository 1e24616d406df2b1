#include "relaxo/trace_io.hpp"

#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <ctime>
#include <istream>
#include <ostream>
#include <sstream>

namespace relaxo {

namespace {

std::string timestamp_now()
{
    const std::time_t now =
        std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::tm tm_utc{};
    gmtime_r(&now, &tm_utc);
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
    return buf;
}

} // namespace

TraceFormat trace_format_from_name(std::string_view name)
{
    if (name == "csv") {
        return TraceFormat::Csv;
    }
    if (name == "json") {
        return TraceFormat::Json;
    }
    throw std::invalid_argument("unknown trace format: " + std::string(name));
}

void write_trace_csv(std::ostream& out, std::span<const IterationRecord> trace,
                     const TraceWriteOptions& options)
{
    if (options.timestamp) {
        out << "# generated " << timestamp_now() << "\n";
    }
    out << "k,omega,h,rel_residual,f_value,matvecs\n";
    char buf[160];
    for (const IterationRecord& rec : trace) {
        std::snprintf(buf, sizeof(buf), "%ld,%.16e,%.16e,%.16e,%.16e,%lld\n", rec.k,
                      rec.omega, rec.h, rec.rel_residual, rec.f_value, rec.matvecs);
        out << buf;
    }
}

std::vector<IterationRecord> read_trace_csv(std::istream& in)
{
    std::vector<IterationRecord> trace;
    std::string line;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') {
            continue;
        }
        if (!header_seen) {
            header_seen = true; // column header
            continue;
        }
        IterationRecord rec{};
        std::istringstream fields(line);
        std::string field;
        const auto next = [&]() -> std::string {
            if (!std::getline(fields, field, ',')) {
                throw parse_error("trace csv: short row: " + line);
            }
            return field;
        };
        rec.k = std::stol(next());
        rec.omega = std::stod(next());
        rec.h = std::stod(next());
        rec.rel_residual = std::stod(next());
        rec.f_value = std::stod(next());
        rec.matvecs = std::stoll(next());
        trace.push_back(rec);
    }
    return trace;
}

namespace {

nlohmann::json record_json(const IterationRecord& rec)
{
    return {
        {"k", rec.k},
        {"omega", rec.omega},
        {"h", rec.h},
        {"rel_residual", rec.rel_residual},
        {"f_value", rec.f_value},
        {"matvecs", rec.matvecs},
    };
}

} // namespace

void write_trace_json(std::ostream& out, std::span<const IterationRecord> trace,
                      const TraceWriteOptions& options)
{
    nlohmann::json doc;
    if (options.timestamp) {
        doc["generated"] = timestamp_now();
    }
    doc["trace"] = nlohmann::json::array();
    for (const IterationRecord& rec : trace) {
        doc["trace"].push_back(record_json(rec));
    }
    out << doc.dump(2) << "\n";
}

void write_summary_csv(std::ostream& out, std::span<const MethodSummary> rows)
{
    out << "method,converged,iterations,final_rel_residual,matvecs,wall_seconds\n";
    char buf[160];
    for (const MethodSummary& row : rows) {
        std::snprintf(buf, sizeof(buf), ",%d,%ld,%.16e,%lld,%.6f\n", row.converged ? 1 : 0,
                      row.iterations, row.final_rel_residual, row.matvecs, row.wall_seconds);
        out << row.method << buf;
    }
}

void write_summary_json(std::ostream& out, std::span<const MethodSummary> rows)
{
    nlohmann::json doc = nlohmann::json::array();
    for (const MethodSummary& row : rows) {
        doc.push_back({
            {"method", row.method},
            {"converged", row.converged},
            {"iterations", row.iterations},
            {"final_rel_residual", row.final_rel_residual},
            {"matvecs", row.matvecs},
            {"wall_seconds", row.wall_seconds},
        });
    }
    out << doc.dump(2) << "\n";
}

} // namespace relaxo
