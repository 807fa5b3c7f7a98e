#ifndef GALHULL_IO_HPP
#define GALHULL_IO_HPP

#include <string>
#include <string_view>

#include "galhull/matrix.hpp"

namespace galhull {

struct ParsedCode {
    FieldPtr field;
    MatrixGF rows;
};

/// Parses the line-oriented code file format:
///
///   field <p> <e> <c0,c1,...,ce>   modulus coefficients, constant term first
///   rows <k> <n>
///   <k lines of n space-separated element encodings in [0, q)>
///
/// Lines starting with '#' (and blank lines) are skipped anywhere. Errors are
/// reported as CodeError with the offending line number in the message.
ParsedCode parse_code_file(std::string_view text);

/// Canonical text form of a matrix together with its field header; parsing the
/// result reproduces the matrix exactly.
std::string serialize_code_file(const MatrixGF& rows);

}  // namespace galhull

#endif
