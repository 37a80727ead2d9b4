#ifndef LISTRAD_IO_HPP
#define LISTRAD_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "listrad/gram.hpp"
#include "listrad/measure.hpp"
#include "listrad/word.hpp"

namespace listrad {

// Code file format: header line "n M", then M lines of n characters from
// {0,1}, newline-terminated ASCII.
Code parse_code(std::istream& in);
Code parse_code(const std::string& text);
std::string serialize_code(const Code& c);

// Measure file format: one line of space-separated rationals summing to 1.
Measure parse_measure_line(const std::string& line);
std::string serialize_measure(const Measure& m);

// Gram file format: header line "L", then L lines of L rationals.
GramMatrix parse_gram(std::istream& in);
GramMatrix parse_gram(const std::string& text);
std::string serialize_gram(const GramMatrix& g);

// Connection-set file: one r-bit string per line. Returns r and the set
// encoded as integers (string position k maps to bit k). Rejects 0 and
// duplicates.
struct ConnectionSet {
  unsigned r = 0;
  std::vector<uint64_t> elements;
};
ConnectionSet parse_connection_set(std::istream& in);

std::string read_file(const std::string& path);

}  // namespace listrad

#endif  // LISTRAD_IO_HPP
