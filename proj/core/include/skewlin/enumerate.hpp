#pragma once

// Exhaustive enumeration over prime fields: all scalars, vectors and maps,
// plus brute-force closure of generated submodules.  Desk-scale oracle
// machinery for tests and the experimental probe; everything here throws on
// infinite domains.

#include "skewlin/submodule.hpp"

namespace skewlin {

std::vector<Scalar> all_scalars(const ScalarDomain& d);
std::vector<Vec> all_vectors(const VectorSpaceRef& space);
std::vector<LinMap> all_linmaps(const VectorSpaceRef& v, const VectorSpaceRef& w);

/// Every element of the generated submodule, computed by closing the
/// generator list under addition and the side's compositions with all of
/// L(V) / L(W).
std::vector<LinMap> closure(const SubmoduleGens& gens);

}  // namespace skewlin
