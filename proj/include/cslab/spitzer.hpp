#pragma once

#include <vector>

#include "cslab/lattice.hpp"
#include "cslab/permutation.hpp"

namespace cslab {

/// Tilted heights z'_1..z'_{kn+1} of an augmented path; z'_{kn+1} = 0 is the
/// strict minimum and all other values are positive and distinct.
struct SpitzerCoordinates {
  int k = 2;
  int n = 0;
  std::vector<Rational> zprime;
};

/// Per-level lattice point counts (i_1, ..., i_r), trailing zeros stripped.
using TypeVector = std::vector<int>;

/// z'_i = ((kn+1) z_i - i) / k for every lattice point after the origin.
SpitzerCoordinates tilt(const LatticePath& augmented);

/// Ranks of the tilted heights; length kn+1 and always ending in 1.
Permutation full_csp(const LatticePath& augmented);

/// Up steps labeled bottom level first, right to left within a level, read
/// along the path.
Permutation short_csp(const LatticePath& catalan);

/// Same permutation, obtained as the pattern of full_csp(augment(p)) at its
/// ascent positions.
Permutation short_csp_from_full(const LatticePath& catalan);

/// Inverse of short_csp. Rejects permutations that are not short k-CSPs.
LatticePath reconstruct(const Permutation& short_perm, int k);

/// Up-step start heights along a catalan path.
std::vector<int> up_step_levels(const LatticePath& catalan);

/// Lattice points per level j >= 1 of an augmented path, endpoint included.
TypeVector path_type(const LatticePath& augmented);

/// Picks the augmented or catalan reading of a step string from its counts.
LatticePath parse_catalan_or_augmented(std::string_view steps, int k);

}  // namespace cslab
