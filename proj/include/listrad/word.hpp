#ifndef LISTRAD_WORD_HPP
#define LISTRAD_WORD_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "listrad/rational.hpp"

namespace listrad {

// A fixed-length bit string, packed into 64-bit limbs so that distances are
// a handful of popcounts even at block length 2^20.
class Word {
 public:
  explicit Word(std::string_view bits);
  static Word zeros(size_t n);

  size_t size() const { return n_; }
  bool bit(size_t i) const {
    return (limbs_[i >> 6] >> (i & 63)) & uint64_t{1};
  }
  void set_bit(size_t i, bool value);

  // Number of positions where the two words differ. Lengths must match.
  size_t diff_count(const Word& other) const;
  size_t weight() const;

  std::string to_string() const;

  bool operator==(const Word& other) const {
    return n_ == other.n_ && limbs_ == other.limbs_;
  }
  bool operator<(const Word& other) const;

 private:
  Word(size_t n, std::vector<uint64_t> limbs)
      : n_(n), limbs_(std::move(limbs)) {}

  size_t n_ = 0;
  std::vector<uint64_t> limbs_;
};

// Normalized Hamming distance, (# differing positions)/n, exact.
Rational hamming_distance(const Word& a, const Word& b);

// A finite multiset of words of common length. Duplicates are representable
// (validation reports them); operations that need distinct words say so.
struct Code {
  size_t n = 0;
  std::vector<Word> words;

  Code() = default;
  Code(size_t block_length, std::vector<Word> ws);

  size_t size() const { return words.size(); }

  // Indices i such that words[i] duplicates an earlier word.
  std::vector<size_t> duplicate_indices() const;
  // Indices of the first occurrence of each distinct word, in code order.
  std::vector<size_t> distinct_indices() const;
};

// An ordered tuple of L >= 2 words of common length. Distinctness is not
// required here; operations state their own requirement.
struct LTuple {
  std::vector<Word> words;

  explicit LTuple(std::vector<Word> ws);
  LTuple(std::initializer_list<std::string_view> bits);

  size_t l() const { return words.size(); }
  size_t n() const { return words.front().size(); }
};

}  // namespace listrad

#endif  // LISTRAD_WORD_HPP
