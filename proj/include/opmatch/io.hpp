#pragma once

// File formats:
//   1D sequence: whitespace-separated signed decimal integers.
//   2D matrix:   first line "w h", then h lines of w integers.
// Parse failures throw std::runtime_error naming the file and line.

#include <iosfwd>
#include <string>

#include "opmatch/oppm2d.hpp"

namespace opmatch {

Sequence read_sequence(const std::string& path);
Matrix read_matrix(const std::string& path);

void write_sequence(const std::string& path, const Sequence& s);
void write_matrix(const std::string& path, const Matrix& m);

}  // namespace opmatch
