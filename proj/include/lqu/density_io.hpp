#pragma once

// JSON density-matrix files:
//   {"n_qubits": N, "matrix": [[[re, im], ...], ...]}
// with 2^N rows of 2^N [re, im] pairs, row-major.

#include <filesystem>
#include <string>
#include <string_view>

#include "lqu/states.hpp"

namespace lqu::io {

/// Throws Error(Parse) naming the byte offset (malformed JSON) or the
/// matrix[row][col] position (structure, non-finite values), and
/// Error(InvalidState) when the matrix is not a valid density matrix.
DensityMatrix parse_density_matrix(std::string_view text);
DensityMatrix read_density_matrix(const std::filesystem::path& path);

std::string format_density_matrix(const DensityMatrix& rho);
void write_density_matrix(const std::filesystem::path& path, const DensityMatrix& rho);

}  // namespace lqu::io
