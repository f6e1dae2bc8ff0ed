#pragma once

// Deterministic random instance generators used by the test suites and the
// benchmarks.  Rational numerators are bounded by `height` and denominators
// live in [1, height], which keeps exact coefficient growth in check.

#include <random>

#include "skewlin/linmap.hpp"

namespace skewlin {

struct Rng {
    explicit Rng(std::uint64_t seed, int height_ = 8) : engine(seed), height(height_) {}
    std::mt19937_64 engine;
    int height;
};

inline Scalar random_scalar(Rng& rng, const ScalarDomain& d) {
    switch (d.kind()) {
        case DomainKind::prime_field: {
            std::uniform_int_distribution<std::uint64_t> dist(0, d.modulus() - 1);
            return Scalar::gf(d.modulus(), dist(rng.engine));
        }
        case DomainKind::rationals: {
            std::uniform_int_distribution<int> num(-rng.height, rng.height);
            std::uniform_int_distribution<int> den(1, rng.height);
            return Scalar::rational(Rat(num(rng.engine), den(rng.engine)));
        }
        case DomainKind::quaternions: {
            std::uniform_int_distribution<int> num(-rng.height, rng.height);
            std::uniform_int_distribution<int> den(1, rng.height);
            auto part = [&]() { return Rat(num(rng.engine), den(rng.engine)); };
            return Scalar::quaternion(part(), part(), part(), part());
        }
    }
    throw std::logic_error("unreachable");
}

inline Scalar random_nonzero_scalar(Rng& rng, const ScalarDomain& d) {
    for (;;) {
        Scalar s = random_scalar(rng, d);
        if (!s.is_zero()) return s;
    }
}

inline Vec random_vec(Rng& rng, const VectorSpaceRef& space) {
    std::vector<Scalar> coords;
    coords.reserve(static_cast<std::size_t>(space.dim));
    for (int i = 0; i < space.dim; ++i) coords.push_back(random_scalar(rng, space.domain));
    return Vec(space, std::move(coords));
}

inline LinMap random_linmap(Rng& rng, const VectorSpaceRef& dom, const VectorSpaceRef& cod) {
    LinMap zero = LinMap::zero(dom, cod);
    Mat g = zero.grid();
    for (int i = 0; i < g.rows(); ++i)
        for (int j = 0; j < g.cols(); ++j) g.at(i, j) = random_scalar(rng, dom.domain);
    return LinMap(dom, cod, std::move(g));
}

inline Subspace random_subspace(Rng& rng, const VectorSpaceRef& space) {
    std::uniform_int_distribution<int> count(0, space.dim);
    std::vector<Vec> gens;
    int n = count(rng.engine);
    gens.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) gens.push_back(random_vec(rng, space));
    return span(space, gens);
}

}  // namespace skewlin
