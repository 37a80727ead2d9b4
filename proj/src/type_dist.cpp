#include "listrad/type_dist.hpp"

#include <stdexcept>

namespace listrad {

TypeDistribution tuple_type(const LTuple& x) {
  size_t l = x.l();
  if (l > 63) throw std::invalid_argument("tuple_type supports L <= 63");
  size_t n = x.n();
  TypeDistribution dist;
  dist.l = l;
  std::map<uint64_t, size_t> counts;
  for (size_t j = 0; j < n; ++j) {
    uint64_t pattern = 0;
    for (size_t i = 0; i < l; ++i) {
      if (x.words[i].bit(j)) pattern |= uint64_t{1} << i;
    }
    ++counts[pattern];
  }
  for (const auto& [pattern, count] : counts) {
    dist.mass.emplace(pattern, Rational(Integer(count), Integer(n)));
  }
  return dist;
}

PatternSystem column_patterns(std::span<const Word> words) {
  if (words.empty()) throw std::invalid_argument("empty word family");
  size_t k = words.size();
  size_t n = words.front().size();
  for (const Word& w : words) {
    if (w.size() != n) throw std::invalid_argument("word length mismatch");
  }
  PatternSystem sys;
  sys.k = k;
  sys.n = n;
  size_t limbs = (k + 63) / 64;
  std::map<std::vector<uint64_t>, size_t> index;
  std::vector<uint64_t> column(limbs);
  for (size_t j = 0; j < n; ++j) {
    std::fill(column.begin(), column.end(), 0);
    for (size_t i = 0; i < k; ++i) {
      if (words[i].bit(j)) column[i >> 6] |= uint64_t{1} << (i & 63);
    }
    auto [it, inserted] = index.emplace(column, sys.patterns.size());
    if (inserted) {
      sys.patterns.push_back(column);
      sys.counts.push_back(0);
      sys.coords.emplace_back();
    }
    ++sys.counts[it->second];
    sys.coords[it->second].push_back(static_cast<uint32_t>(j));
  }
  return sys;
}

bool type_uniformity(const LTuple& x, const Rational& eps) {
  TypeDistribution dist = tuple_type(x);
  Rational target = Rational(1, Integer(1) << dist.l);
  for (const auto& [pattern, mass] : dist.mass) {
    Rational gap = mass - target;
    if (gap < 0) gap = -gap;
    if (gap > eps) return false;
  }
  // Absent patterns have mass 0 and must satisfy 2^{-L} <= eps.
  bool all_present =
      dist.mass.size() == (uint64_t{1} << dist.l) || dist.l >= 64;
  if (!all_present && target > eps) return false;
  return true;
}

}  // namespace listrad
