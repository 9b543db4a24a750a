#pragma once

#include <iosfwd>
#include <string>

#include "matchpoly/sym_matrix.hpp"

namespace matchpoly {

/// JSON matrix format: {"order": N, "upper": [entries in packed order]}.
/// Entries are numbers, or strings "p/q" for exact values. The float
/// reader converts exact entries to double; the exact reader accepts
/// integers and "p/q" strings but rejects non-integer JSON floats (their
/// decimal intent is ambiguous — write them as strings instead).
SymMatrixD read_matrix_json(std::istream& in);
SymMatrixQ read_matrix_json_exact(std::istream& in);
std::string write_matrix_json(const SymMatrixD& b);
std::string write_matrix_json(const SymMatrixQ& b);

/// CSV alternative: the full square matrix, one row per line. On read the
/// matrix is validated to be symmetric with zero diagonal within absolute
/// tolerance 1e-12.
SymMatrixD read_matrix_csv(std::istream& in);
std::string write_matrix_csv(const SymMatrixD& b);

/// Loads by extension: ".json" or ".csv".
SymMatrixD load_matrix(const std::string& path);
SymMatrixQ load_matrix_exact(const std::string& path);

}  // namespace matchpoly
