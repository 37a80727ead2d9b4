#include "listrad/embed.hpp"

#include <stdexcept>

namespace listrad {

SphericalEmbedding embed_pm1(const Code& c) {
  if (c.words.empty()) throw std::invalid_argument("cannot embed empty code");
  size_t m = c.words.size();
  GramMatrix g(m);
  for (size_t i = 0; i < m; ++i) {
    g.at(i, i) = 1;
    for (size_t j = i + 1; j < m; ++j) {
      g.set(i, j, 1 - 2 * hamming_distance(c.words[i], c.words[j]));
    }
  }
  return SphericalEmbedding{std::move(g), c};
}

}  // namespace listrad
