#include "listrad/word.hpp"

#include <bit>
#include <map>
#include <stdexcept>

namespace listrad {

namespace {
constexpr size_t kMaxLength = size_t{1} << 20;

size_t limb_count(size_t n) { return (n + 63) / 64; }
}  // namespace

Word::Word(std::string_view bits) : n_(bits.size()) {
  if (n_ == 0) throw std::invalid_argument("empty word");
  if (n_ > kMaxLength) throw std::invalid_argument("word longer than 2^20");
  limbs_.assign(limb_count(n_), 0);
  for (size_t i = 0; i < n_; ++i) {
    char c = bits[i];
    if (c == '1') {
      limbs_[i >> 6] |= uint64_t{1} << (i & 63);
    } else if (c != '0') {
      throw std::invalid_argument("character outside {0,1} in word");
    }
  }
}

Word Word::zeros(size_t n) {
  if (n == 0) throw std::invalid_argument("empty word");
  if (n > kMaxLength) throw std::invalid_argument("word longer than 2^20");
  return Word(n, std::vector<uint64_t>(limb_count(n), 0));
}

void Word::set_bit(size_t i, bool value) {
  uint64_t mask = uint64_t{1} << (i & 63);
  if (value) {
    limbs_[i >> 6] |= mask;
  } else {
    limbs_[i >> 6] &= ~mask;
  }
}

size_t Word::diff_count(const Word& other) const {
  if (n_ != other.n_) throw std::invalid_argument("word length mismatch");
  size_t count = 0;
  for (size_t k = 0; k < limbs_.size(); ++k) {
    count += std::popcount(limbs_[k] ^ other.limbs_[k]);
  }
  return count;
}

size_t Word::weight() const {
  size_t count = 0;
  for (uint64_t limb : limbs_) count += std::popcount(limb);
  return count;
}

std::string Word::to_string() const {
  std::string s(n_, '0');
  for (size_t i = 0; i < n_; ++i) {
    if (bit(i)) s[i] = '1';
  }
  return s;
}

bool Word::operator<(const Word& other) const {
  if (n_ != other.n_) return n_ < other.n_;
  for (size_t i = 0; i < n_; ++i) {
    bool a = bit(i), b = other.bit(i);
    if (a != b) return b;  // '0' < '1'
  }
  return false;
}

Rational hamming_distance(const Word& a, const Word& b) {
  return Rational(Integer(a.diff_count(b)), Integer(a.size()));
}

Code::Code(size_t block_length, std::vector<Word> ws)
    : n(block_length), words(std::move(ws)) {
  if (n == 0) throw std::invalid_argument("block length must be >= 1");
  for (const Word& w : words) {
    if (w.size() != n) {
      throw std::invalid_argument("codeword length differs from block length");
    }
  }
}

std::vector<size_t> Code::duplicate_indices() const {
  std::vector<size_t> dups;
  std::map<Word, size_t> seen;
  for (size_t i = 0; i < words.size(); ++i) {
    if (!seen.emplace(words[i], i).second) dups.push_back(i);
  }
  return dups;
}

std::vector<size_t> Code::distinct_indices() const {
  std::vector<size_t> firsts;
  std::map<Word, size_t> seen;
  for (size_t i = 0; i < words.size(); ++i) {
    if (seen.emplace(words[i], i).second) firsts.push_back(i);
  }
  return firsts;
}

LTuple::LTuple(std::vector<Word> ws) : words(std::move(ws)) {
  if (words.size() < 2) throw std::invalid_argument("tuple needs L >= 2 words");
  size_t n = words.front().size();
  for (const Word& w : words) {
    if (w.size() != n) throw std::invalid_argument("tuple word length mismatch");
  }
}

LTuple::LTuple(std::initializer_list<std::string_view> bits)
    : LTuple([&] {
        std::vector<Word> ws;
        ws.reserve(bits.size());
        for (std::string_view b : bits) ws.emplace_back(b);
        return ws;
      }()) {}

}  // namespace listrad
