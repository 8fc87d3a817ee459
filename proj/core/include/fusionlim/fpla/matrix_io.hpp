#pragma once

#include <iosfwd>
#include <variant>

#include "fusionlim/fpla/matrix.hpp"
#include "fusionlim/fpla/sparse_matrix.hpp"

namespace fusionlim::fpla {

// Matrix record layout, all integers little-endian:
//
//   magic    4 bytes  "FPMX"
//   version  u32      1
//   p        u32
//   rows     u64
//   cols     u64
//   kind     u8       0 = dense, 1 = sparse
//   dense:   rows*cols u8 residues, row-major
//   sparse:  per column: u32 count, then count × (u32 row, u8 value)
//   checksum u64      FNV-1a over every preceding byte of the record
//
// Several records may be concatenated in one file.

using AnyMatrix = std::variant<FpMatrix, SparseFpMatrix>;

void write_matrix(std::ostream& out, const FpMatrix& m);
void write_matrix(std::ostream& out, const SparseFpMatrix& m);

/// Throws fusionlim::Error on truncated input, bad magic, out-of-range
/// residues or checksum mismatch.
AnyMatrix read_matrix(std::istream& in);
FpMatrix read_dense_matrix(std::istream& in);

}  // namespace fusionlim::fpla
