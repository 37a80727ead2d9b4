#ifndef LISTRAD_GRAM_HPP
#define LISTRAD_GRAM_HPP

#include <stdexcept>
#include <vector>

#include "listrad/rational.hpp"

namespace listrad {

// Dense symmetric matrix of exact inner products.
class GramMatrix {
 public:
  GramMatrix() = default;
  explicit GramMatrix(size_t l) : l_(l), a_(l * l, Rational(0)) {}

  static GramMatrix identity(size_t l) {
    GramMatrix g(l);
    for (size_t i = 0; i < l; ++i) g.at(i, i) = 1;
    return g;
  }

  size_t size() const { return l_; }

  const Rational& at(size_t i, size_t j) const { return a_[i * l_ + j]; }
  Rational& at(size_t i, size_t j) { return a_[i * l_ + j]; }

  void set(size_t i, size_t j, const Rational& v) {
    a_[i * l_ + j] = v;
    a_[j * l_ + i] = v;
  }

  bool symmetric() const {
    for (size_t i = 0; i < l_; ++i) {
      for (size_t j = i + 1; j < l_; ++j) {
        if (at(i, j) != at(j, i)) return false;
      }
    }
    return true;
  }

  bool unit_diagonal() const {
    for (size_t i = 0; i < l_; ++i) {
      if (at(i, i) != 1) return false;
    }
    return true;
  }

  bool operator==(const GramMatrix& other) const {
    return l_ == other.l_ && a_ == other.a_;
  }

 private:
  size_t l_ = 0;
  std::vector<Rational> a_;
};

}  // namespace listrad

#endif  // LISTRAD_GRAM_HPP
