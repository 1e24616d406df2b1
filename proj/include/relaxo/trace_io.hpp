#ifndef RELAXO_TRACE_IO_HPP
#define RELAXO_TRACE_IO_HPP

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "relaxo/solver.hpp"

namespace relaxo {

enum class TraceFormat { Csv, Json };

TraceFormat trace_format_from_name(std::string_view name);

struct TraceWriteOptions {
    bool timestamp = true; // leading generated-at comment (csv) / field (json)
};

/// Columns k, omega, h, rel_residual, f_value, matvecs; doubles printed with
/// %.16e so a parsed trace reproduces the original values exactly. Output is
/// byte-identical across runs when the timestamp is suppressed.
void write_trace_csv(std::ostream& out, std::span<const IterationRecord> trace,
                     const TraceWriteOptions& options = {});

/// Parses what write_trace_csv produced, skipping comments and the header.
std::vector<IterationRecord> read_trace_csv(std::istream& in);

void write_trace_json(std::ostream& out, std::span<const IterationRecord> trace,
                      const TraceWriteOptions& options = {});

/// One line of the run summary emitted next to the trace files.
struct MethodSummary {
    std::string method;
    bool converged = false;
    long iterations = 0;
    double final_rel_residual = 0.0;
    long long matvecs = 0;
    double wall_seconds = 0.0;
};

void write_summary_csv(std::ostream& out, std::span<const MethodSummary> rows);
void write_summary_json(std::ostream& out, std::span<const MethodSummary> rows);

} // namespace relaxo

#endif
