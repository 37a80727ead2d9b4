#ifndef LISTRAD_MEASURE_HPP
#define LISTRAD_MEASURE_HPP

#include <stdexcept>
#include <vector>

#include "listrad/rational.hpp"

namespace listrad {

// A probability measure on [L]: nonnegative rational weights summing to 1.
struct Measure {
  std::vector<Rational> weights;

  Measure() = default;
  explicit Measure(std::vector<Rational> w) : weights(std::move(w)) {
    Rational sum = 0;
    for (const Rational& x : weights) {
      if (x < 0) throw std::invalid_argument("negative measure weight");
      sum += x;
    }
    if (sum != 1) throw std::invalid_argument("measure weights must sum to 1");
  }

  static Measure uniform(size_t l) {
    return Measure(std::vector<Rational>(l, Rational(1, Integer(l))));
  }
  static Measure point_mass(size_t l, size_t i) {
    std::vector<Rational> w(l, 0);
    w.at(i) = 1;
    return Measure(std::move(w));
  }
  // Uniform on a subset of [L] given by indices.
  static Measure uniform_on(size_t l, const std::vector<size_t>& subset) {
    if (subset.empty()) throw std::invalid_argument("empty subset measure");
    std::vector<Rational> w(l, 0);
    for (size_t i : subset) w.at(i) = Rational(1, Integer(subset.size()));
    return Measure(std::move(w));
  }

  size_t size() const { return weights.size(); }
  const Rational& operator[](size_t i) const { return weights[i]; }

  bool operator==(const Measure& other) const {
    return weights == other.weights;
  }
  bool operator<(const Measure& other) const {
    return weights < other.weights;  // lexicographic
  }
};

}  // namespace listrad

#endif  // LISTRAD_MEASURE_HPP
