#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "expmde/matrix.hpp"

namespace expmde::cli {

/// Malformed user input. Maps to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reads array or coordinate Matrix Market data with real, integer or
/// complex fields. Symmetric, skew-symmetric and Hermitian storage is
/// expanded to the full matrix.
ComplexMatrix read_matrix_market(std::istream& in, const std::string& source = "<input>");
ComplexMatrix read_matrix_market_file(const std::string& path);

/// "%%MatrixMarket matrix array complex general", column-major, %.17g.
void write_matrix_market_array(std::ostream& out, const ComplexMatrix& m);
/// Coordinate format with only the nonzero entries; real field when every
/// entry has zero imaginary part.
void write_matrix_market_coordinate(std::ostream& out, const ComplexMatrix& m);

}  // namespace expmde::cli
