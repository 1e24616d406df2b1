#ifndef RELAXO_MATRIX_MARKET_HPP
#define RELAXO_MATRIX_MARKET_HPP

#include <iosfwd>
#include <string>

#include "relaxo/sparse_matrix.hpp"

namespace relaxo {

/// Reads a coordinate-format real Matrix Market stream, general or symmetric
/// qualifier, 1-based indices. Symmetric files are expanded to full storage
/// (both triangles) at parse time. Throws parse_error on malformed input,
/// duplicate coordinates, asymmetry, or a missing/non-positive diagonal.
SparseMatrix read_matrix_market(std::istream& in);

SparseMatrix read_matrix_market_file(const std::string& path);

/// Writes full (general) coordinate format with round-trip-exact values.
void write_matrix_market(std::ostream& out, const SparseMatrix& a);

} // namespace relaxo

#endif
