#pragma once

#include <string>
#include <vector>

#include "sqcore/vh_complex.hpp"

namespace sqcore {

struct ColoredIsomorphism {
  bool isomorphic = false;
  // On failure, the first invariant that differs (or a note that the search
  // was exhausted); on success, a one-line summary.
  std::string witness;
  std::vector<int> vertex_map;  // first complex -> second
  std::vector<int> edge_map;
  std::vector<bool> edge_flipped;
  std::vector<int> square_map;

  std::string map_text() const;
};

// Cell bijection preserving incidence and edge colors. Edge orientations are
// not part of the structure; square boundaries are matched up to rotation
// and reflection.
ColoredIsomorphism isomorphic_colored(const VHComplex& a, const VHComplex& b);

}  // namespace sqcore
