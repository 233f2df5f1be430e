#pragma once

// OEIS b-file format: one "index value" pair per line, '#' starts a comment.

#include <iosfwd>
#include <string>
#include <vector>

#include "cores/sequence.hpp"

namespace cores {

// Indices must be consecutive. Throws DomainError on malformed input.
CountSequence read_bfile(std::istream& in, const std::string& name = "bfile");
CountSequence read_bfile_path(const std::string& path);

// Comment lines are written first, each prefixed with "# ".
void write_bfile(std::ostream& out, const CountSequence& seq, const std::vector<std::string>& comments = {});

// "1,2,5, 14" -> terms. Throws DomainError on anything but integers.
std::vector<BigInt> parse_terms_csv(const std::string& text);

}  // namespace cores
