#include "cores/bfile.hpp"

#include <fstream>
#include <sstream>

#include "cores/errors.hpp"

namespace cores {

CountSequence read_bfile(std::istream& in, const std::string& name) {
  CountSequence seq{name, 0, {}};
  std::string line;
  int line_number = 0;
  long expected = 0;
  bool first = true;
  while (std::getline(in, line)) {
    ++line_number;
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream fields(line.substr(start));
    std::string index_text, value_text, extra;
    fields >> index_text >> value_text;
    if (value_text.empty() || (fields >> extra && extra[0] != '#')) {
      throw DomainError("b-file line " + std::to_string(line_number) + " is not 'index value'");
    }
    long index = 0;
    try {
      std::size_t used = 0;
      index = std::stol(index_text, &used);
      if (used != index_text.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw DomainError("b-file line " + std::to_string(line_number) + " has a bad index");
    }
    if (first) {
      seq.offset = static_cast<int>(index);
      expected = index;
      first = false;
    }
    if (index != expected) {
      throw DomainError("b-file line " + std::to_string(line_number) + ": expected index " +
                        std::to_string(expected));
    }
    seq.terms.push_back(parse_bigint(value_text));
    ++expected;
  }
  return seq;
}

CountSequence read_bfile_path(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open b-file '" + path + "'");
  return read_bfile(in, path);
}

void write_bfile(std::ostream& out, const CountSequence& seq, const std::vector<std::string>& comments) {
  for (const auto& c : comments) out << "# " << c << '\n';
  for (std::size_t k = 0; k < seq.terms.size(); ++k) {
    out << seq.offset + static_cast<long>(k) << ' ' << to_string(seq.terms[k]) << '\n';
  }
}

std::vector<BigInt> parse_terms_csv(const std::string& text) {
  std::vector<BigInt> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto a = item.find_first_not_of(" \t\n");
    if (a == std::string::npos) throw DomainError("empty entry in term list");
    const auto b = item.find_last_not_of(" \t\n");
    out.push_back(parse_bigint(item.substr(a, b - a + 1)));
  }
  if (out.empty()) throw DomainError("term list is empty");
  return out;
}

}  // namespace cores
