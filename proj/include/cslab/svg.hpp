#pragma once

#include <string>

#include "cslab/fstree.hpp"
#include "cslab/lattice.hpp"

namespace cslab::svg {

/// Path polyline on a unit grid with dotted level lines and marked lattice points.
std::string render_path(const LatticePath& path);

/// Tree with vertices placed by in-order position and depth, so right-child
/// edges slant right; labels drawn inside the vertices.
std::string render_tree(const PlaneTree& tree);

}  // namespace cslab::svg
