#ifndef LISTRAD_TYPE_DIST_HPP
#define LISTRAD_TYPE_DIST_HPP

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "listrad/rational.hpp"
#include "listrad/word.hpp"

namespace listrad {

// Empirical distribution of the column patterns of an L-tuple. Pattern bit i
// is the bit of word i at the coordinate, packed LSB-first (requires L <= 63).
struct TypeDistribution {
  size_t l = 0;
  std::map<uint64_t, Rational> mass;

  Rational at(uint64_t pattern) const {
    auto it = mass.find(pattern);
    return it == mass.end() ? Rational(0) : it->second;
  }
};

TypeDistribution tuple_type(const LTuple& x);

// Column multiset of an arbitrary family of words (any size), the shared
// input shape of the radius LPs. Patterns are bit vectors over the family,
// one bit per word, packed into limbs.
struct PatternSystem {
  size_t k = 0;  // number of words
  size_t n = 0;  // number of coordinates
  std::vector<std::vector<uint64_t>> patterns;  // distinct columns
  std::vector<size_t> counts;                   // multiplicity of each column
  std::vector<std::vector<uint32_t>> coords;    // coordinates carrying each

  bool pattern_bit(size_t p, size_t i) const {
    return (patterns[p][i >> 6] >> (i & 63)) & uint64_t{1};
  }
};

PatternSystem column_patterns(std::span<const Word> words);

// True iff every pattern mass of type(x) is within eps of 2^{-L}, including
// the absent patterns (mass 0).
bool type_uniformity(const LTuple& x, const Rational& eps);

}  // namespace listrad

#endif  // LISTRAD_TYPE_DIST_HPP
