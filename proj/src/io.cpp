#include "listrad/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace listrad {

namespace {

// Strips one trailing '\r' so CRLF files parse.
std::string chomp(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

}  // namespace

Code parse_code(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) {
    throw std::invalid_argument("missing code header line");
  }
  std::istringstream hs(chomp(header));
  long long n = 0, m = 0;
  std::string extra;
  if (!(hs >> n >> m) || (hs >> extra) || n < 1 || m < 0) {
    throw std::invalid_argument("malformed code header, expected \"n M\"");
  }
  std::vector<Word> words;
  words.reserve(static_cast<size_t>(m));
  std::string line;
  for (long long i = 0; i < m; ++i) {
    if (!std::getline(in, line)) {
      throw std::invalid_argument("code has fewer than M lines");
    }
    line = chomp(line);
    if (line.size() != static_cast<size_t>(n)) {
      throw std::invalid_argument(
          "line " + std::to_string(i + 1) + " has length " +
          std::to_string(line.size()) + " != " + std::to_string(n));
    }
    words.emplace_back(line);
  }
  while (std::getline(in, line)) {
    if (!chomp(line).empty()) {
      throw std::invalid_argument("trailing content after M codewords");
    }
  }
  return Code(static_cast<size_t>(n), std::move(words));
}

Code parse_code(const std::string& text) {
  std::istringstream in(text);
  return parse_code(in);
}

std::string serialize_code(const Code& c) {
  std::string out =
      std::to_string(c.n) + " " + std::to_string(c.words.size()) + "\n";
  for (const Word& w : c.words) {
    out += w.to_string();
    out += '\n';
  }
  return out;
}

Measure parse_measure_line(const std::string& line) {
  std::istringstream in(chomp(line));
  std::vector<Rational> weights;
  std::string token;
  while (in >> token) weights.push_back(parse_rational(token));
  if (weights.empty()) throw std::invalid_argument("empty measure line");
  return Measure(std::move(weights));
}

std::string serialize_measure(const Measure& m) {
  std::string out;
  for (size_t i = 0; i < m.size(); ++i) {
    if (i > 0) out += ' ';
    out += to_string(m[i]);
  }
  return out;
}

GramMatrix parse_gram(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) {
    throw std::invalid_argument("missing gram header line");
  }
  std::istringstream hs(chomp(header));
  long long l = 0;
  std::string extra;
  if (!(hs >> l) || (hs >> extra) || l < 1) {
    throw std::invalid_argument("malformed gram header, expected \"L\"");
  }
  GramMatrix g(static_cast<size_t>(l));
  std::string line;
  for (long long i = 0; i < l; ++i) {
    if (!std::getline(in, line)) {
      throw std::invalid_argument("gram matrix has fewer than L rows");
    }
    std::istringstream row(chomp(line));
    std::string token;
    for (long long j = 0; j < l; ++j) {
      if (!(row >> token)) {
        throw std::invalid_argument("gram row " + std::to_string(i + 1) +
                                    " has fewer than L entries");
      }
      g.at(static_cast<size_t>(i), static_cast<size_t>(j)) =
          parse_rational(token);
    }
    if (row >> token) {
      throw std::invalid_argument("gram row " + std::to_string(i + 1) +
                                  " has more than L entries");
    }
  }
  if (!g.symmetric()) throw std::invalid_argument("gram matrix not symmetric");
  return g;
}

GramMatrix parse_gram(const std::string& text) {
  std::istringstream in(text);
  return parse_gram(in);
}

std::string serialize_gram(const GramMatrix& g) {
  std::string out = std::to_string(g.size()) + "\n";
  for (size_t i = 0; i < g.size(); ++i) {
    for (size_t j = 0; j < g.size(); ++j) {
      if (j > 0) out += ' ';
      out += to_string(g.at(i, j));
    }
    out += '\n';
  }
  return out;
}

ConnectionSet parse_connection_set(std::istream& in) {
  ConnectionSet cs;
  std::string line;
  while (std::getline(in, line)) {
    line = chomp(line);
    if (line.empty()) continue;
    if (cs.r == 0) {
      cs.r = static_cast<unsigned>(line.size());
      if (cs.r > 24) throw std::invalid_argument("connection set: r > 24");
    } else if (line.size() != cs.r) {
      throw std::invalid_argument("connection set lines of unequal length");
    }
    uint64_t v = 0;
    for (size_t k = 0; k < line.size(); ++k) {
      if (line[k] == '1') {
        v |= uint64_t{1} << k;
      } else if (line[k] != '0') {
        throw std::invalid_argument("connection set: character outside {0,1}");
      }
    }
    if (v == 0) throw std::invalid_argument("connection set contains 0");
    for (uint64_t e : cs.elements) {
      if (e == v) throw std::invalid_argument("duplicate connection element");
    }
    cs.elements.push_back(v);
  }
  if (cs.elements.empty()) throw std::invalid_argument("empty connection set");
  return cs;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace listrad
