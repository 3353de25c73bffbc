#pragma once

#include <string>

#include "iwasawa/lattice.hpp"

namespace iwasawa {

/// Graphviz source for the Hasse diagram of the lattice: one node per
/// subgroup labeled "order:index" (normal subgroups as boxes, the rest as
/// ellipses), one edge per covering relation, bottom-up. Output is
/// byte-deterministic for a fixed lattice.
std::string hasse_dot(const SubgroupLattice& l);

}  // namespace iwasawa
