#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "latgb/core.hpp"

/// Strict plain-text readers and writers for the CLI formats.  Any token
/// that is not a decimal 64-bit integer, any short read and any trailing
/// garbage raises InputError.
namespace latgb::io {

/// Matrix file: "d n" followed by d rows of n entries.
IntMat read_matrix(std::istream& in);

/// Vector list: "n" followed by any number of n-entry vectors.  The declared
/// size is reported through n_out when given (needed for empty lists).
std::vector<IntVec> read_vectors(std::istream& in, Index* n_out = nullptr);

/// Instance file: "n", the row a (n entries, positive), the right hand side
/// b, then optionally the cost row c (n entries).
struct Instance {
  IntVec a;
  Int b = 0;
  std::optional<IntVec> c;
};
Instance read_instance(std::istream& in);

void write_matrix(std::ostream& out, const IntMat& m);
void write_vectors(std::ostream& out, const std::vector<IntVec>& vs, Index n);

/// Parses a whitespace-separated list of integers (e.g. an --order-c value).
IntVec parse_int_list(const std::string& text);

}  // namespace latgb::io
