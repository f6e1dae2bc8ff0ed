#pragma once

// Shared helpers for the test suites: compact constructors for vectors and
// maps, and independent brute-force oracles (exhaustive combination and
// witness searches over small prime fields) that the library answers are
// checked against.

#include <vector>

#include "skewlin/enumerate.hpp"
#include "skewlin/linmap.hpp"

namespace skewlin::testsupport {

inline Vec vec_of(const VectorSpaceRef& space, const std::vector<long long>& ints) {
    std::vector<Scalar> coords;
    coords.reserve(ints.size());
    for (long long v : ints) coords.push_back(Scalar::from_int(space.domain, v));
    return Vec(space, coords);
}

/// Map given by the images of the coordinate vectors (inner lists are the
/// coordinates of t(e_j)); chirality-independent.
inline LinMap map_of(const VectorSpaceRef& dom, const VectorSpaceRef& cod,
                     const std::vector<std::vector<long long>>& unit_images) {
    std::vector<Vec> images;
    images.reserve(unit_images.size());
    for (const auto& u : unit_images) images.push_back(vec_of(cod, u));
    return LinMap::from_images(dom, cod, images);
}

/// Right-chirality map written as its action grid, row by row, the way a
/// matrix is usually quoted: row i lists the i-th coordinate of each t(e_j).
inline LinMap rmap(const VectorSpaceRef& dom, const VectorSpaceRef& cod,
                   const std::vector<std::vector<long long>>& rows) {
    Mat g = Mat::zero(cod.dim, dom.dim, dom.domain);
    for (int i = 0; i < cod.dim; ++i)
        for (int j = 0; j < dom.dim; ++j)
            g.at(i, j) = Scalar::from_int(dom.domain, rows[static_cast<std::size_t>(i)]
                                                          [static_cast<std::size_t>(j)]);
    return LinMap(dom, cod, g);
}

/// Exhaustive membership: tries every side-correct coefficient tuple over a
/// prime field.  Independent of the echelon machinery.
inline bool oracle_contains(const std::vector<Vec>& gens, const Vec& v) {
    const VectorSpaceRef& space = v.space();
    std::vector<Scalar> scalars = all_scalars(space.domain);
    std::vector<std::size_t> odo(gens.size(), 0);
    while (true) {
        Vec combo = Vec::zero(space);
        for (std::size_t i = 0; i < gens.size(); ++i)
            combo = combo + gens[i].scaled(scalars[odo[i]]);
        if (combo == v) return true;
        std::size_t i = 0;
        for (; i < odo.size(); ++i) {
            if (++odo[i] < scalars.size()) break;
            odo[i] = 0;
        }
        if (i == odo.size()) return false;
    }
}

inline std::vector<ScalarDomain> all_domains() {
    return {ScalarDomain::gf(2), ScalarDomain::gf(3), ScalarDomain::gf(5),
            ScalarDomain::rationals(), ScalarDomain::quaternions()};
}

inline std::vector<Chirality> both_sides() { return {Chirality::right, Chirality::left}; }

}  // namespace skewlin::testsupport
