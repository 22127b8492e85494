#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "addrep/sequence.hpp"

namespace addrep {

// Text format:
//
//   # optional comment lines
//   bound=100
//   2
//   4
//   ...
//
// One decimal integer per line, ascending. The `bound=` header is required and
// must precede the first element. Blank lines are skipped.
//
// JSON format: {"bound": N, "elements": [...]}. read_sequence picks JSON when
// the first non-blank character is '{'.
//
// Errors are reported as ParseError with the 1-based line number.
IntegerSequence parse_sequence_text(std::istream& in, const std::string& source_name = "<input>");
IntegerSequence parse_sequence_json(const std::string& text, const std::string& source_name = "<input>");
IntegerSequence read_sequence(const std::filesystem::path& path);

void write_sequence_text(std::ostream& out, const IntegerSequence& a);
void write_sequence_file(const std::filesystem::path& path, const IntegerSequence& a);

}  // namespace addrep
