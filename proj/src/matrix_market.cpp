#include "relaxo/matrix_market.hpp"

#include <algorithm>
#include <cctype>
#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace relaxo {

namespace {

std::string lower(std::string s)
{
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

bool blank(const std::string& line)
{
    return std::all_of(line.begin(), line.end(),
                       [](unsigned char c) { return std::isspace(c); });
}

} // namespace

SparseMatrix read_matrix_market(std::istream& in)
{
    std::string line;
    if (!std::getline(in, line)) {
        throw parse_error("matrix market: empty stream");
    }

    std::istringstream header(line);
    std::string banner, object, format, field, qualifier;
    header >> banner >> object >> format >> field >> qualifier;
    if (lower(banner) != "%%matrixmarket" || lower(object) != "matrix") {
        throw parse_error("matrix market: malformed header: " + line);
    }
    if (lower(format) != "coordinate") {
        throw parse_error("matrix market: unsupported format '" + format +
                          "' (coordinate only)");
    }
    if (lower(field) != "real") {
        throw parse_error("matrix market: unsupported field '" + field + "' (real only)");
    }
    const std::string qual = lower(qualifier);
    if (qual != "general" && qual != "symmetric") {
        throw parse_error("matrix market: unsupported qualifier '" + qualifier +
                          "' (general or symmetric only)");
    }
    const bool symmetric = qual == "symmetric";

    // Comments and blank lines precede the size line.
    do {
        if (!std::getline(in, line)) {
            throw parse_error("matrix market: missing size line");
        }
    } while ((!line.empty() && line[0] == '%') || blank(line));

    Index nrows = 0;
    Index ncols = 0;
    long long count = -1;
    {
        std::istringstream size_line(line);
        if (!(size_line >> nrows >> ncols >> count) || nrows < 1 || ncols < 1 || count < 0) {
            throw parse_error("matrix market: malformed size line: " + line);
        }
    }
    if (nrows != ncols) {
        throw parse_error("matrix market: matrix is not square (" + std::to_string(nrows) +
                          " x " + std::to_string(ncols) + ")");
    }

    std::vector<Triplet> entries;
    entries.reserve(static_cast<std::size_t>(symmetric ? 2 * count : count));
    long long seen = 0;
    while (seen < count) {
        if (!std::getline(in, line)) {
            throw parse_error("matrix market: expected " + std::to_string(count) +
                              " entries, got " + std::to_string(seen));
        }
        if ((!line.empty() && line[0] == '%') || blank(line)) {
            continue;
        }
        std::istringstream entry(line);
        Index i = 0;
        Index j = 0;
        double v = 0.0;
        if (!(entry >> i >> j >> v)) {
            throw parse_error("matrix market: malformed entry: " + line);
        }
        if (i < 1 || i > nrows || j < 1 || j > ncols) {
            throw parse_error("matrix market: index out of range: " + line);
        }
        entries.push_back({i - 1, j - 1, v});
        if (symmetric && i != j) {
            entries.push_back({j - 1, i - 1, v});
        }
        ++seen;
    }

    try {
        return SparseMatrix::from_triplets(nrows, std::move(entries));
    } catch (const std::invalid_argument& e) {
        throw parse_error(std::string("matrix market: ") + e.what());
    }
}

SparseMatrix read_matrix_market_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw parse_error("cannot open matrix file: " + path);
    }
    return read_matrix_market(in);
}

void write_matrix_market(std::ostream& out, const SparseMatrix& a)
{
    out << "%%MatrixMarket matrix coordinate real general\n";
    out << a.rows() << " " << a.rows() << " " << a.nnz() << "\n";
    const auto row_ptr = a.row_ptr();
    const auto col_idx = a.col_idx();
    const auto values = a.values();
    char buf[64];
    for (Index i = 0; i < a.rows(); ++i) {
        for (Index k = row_ptr[i]; k < row_ptr[i + 1]; ++k) {
            std::snprintf(buf, sizeof(buf), "%" PRIdPTR " %" PRIdPTR " %.17g\n",
                          static_cast<intptr_t>(i + 1), static_cast<intptr_t>(col_idx[k] + 1),
                          values[k]);
            out << buf;
        }
    }
}

} // namespace relaxo
