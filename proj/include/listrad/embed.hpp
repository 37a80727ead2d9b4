#ifndef LISTRAD_EMBED_HPP
#define LISTRAD_EMBED_HPP

#include "listrad/gram.hpp"
#include "listrad/word.hpp"

namespace listrad {

// Gram matrix of the +-1/sqrt(n) coordinate embedding of a binary code:
// entry (i,j) = 1 - 2 * hamming_distance(w_i, w_j).
struct SphericalEmbedding {
  GramMatrix gram;
  Code source;
};

SphericalEmbedding embed_pm1(const Code& c);

}  // namespace listrad

#endif  // LISTRAD_EMBED_HPP
