#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "sosadmm/conic_program.hpp"

namespace sosadmm {

class SdpaParseError : public std::runtime_error {
 public:
  SdpaParseError(const std::string& msg, int line);
  int line;  // 1-based line number in the input
};

// Reads SDPA sparse format (.dat-s): comment lines ('"' or '*'), then the
// constraint count m, the block count, the block sizes (negative size =
// diagonal block), the m objective values, then entry lines
// `matno blkno i j value` with 1-based upper-triangle indices (i <= j) and
// matno 0 denoting the cost matrix.
//
// The file's dual-standard-form data lands in this toolkit's primal shape:
// variables are the blocks of the PSD matrix Y (diagonal blocks become
// NonNeg), row k holds vec(F_k) with off-diagonal entries mirrored to both
// (i,j) and (j,i) positions, b is the file's objective vector, and
// c = -vec(F_0), so minimizing c'x maximizes the SDPA objective <F_0, Y>.
ConicProgram parse_sdpa(std::istream& in);
ConicProgram parse_sdpa_file(const std::string& path);

// Inverse of parse_sdpa for programs whose cones are all Psd/NonNeg and whose
// rows and c are symmetric within each Psd block. Values are printed with
// enough digits to round-trip doubles exactly.
void write_sdpa(const ConicProgram& prog, std::ostream& out);
void write_sdpa_file(const ConicProgram& prog, const std::string& path);

}  // namespace sosadmm
