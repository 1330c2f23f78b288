#pragma once

#include <iosfwd>
#include <string>

#include "seriate/matrix.hpp"

namespace seriate {

// Readers for the two on-disk formats the tool accepts. Both return the
// dense nonnegative data matrix whose rows are the objects to order.
//
// CSV: comma-separated numeric rows, all of equal width. A first line
// containing any non-numeric cell is treated as a header and skipped;
// force_no_header disables the sniff and reads every line as data.
//
// Matrix Market: coordinate or array, real / integer / pattern entries,
// general or symmetric storage. Pattern entries read as 1.
//
// read_data_matrix dispatches on content: a leading "%%MatrixMarket"
// banner selects the Matrix Market reader, anything else is CSV.
DataMatrix read_csv_data_matrix(std::istream& in, bool force_no_header = false);
DataMatrix read_matrix_market(std::istream& in);
DataMatrix read_data_matrix(const std::string& path, bool force_no_header = false);

// Writes comma-separated rows. Values round-trip: integers print without
// a point, everything else in shortest form that parses back equal.
void write_csv_data_matrix(std::ostream& out, const DataMatrix& a);

}  // namespace seriate
