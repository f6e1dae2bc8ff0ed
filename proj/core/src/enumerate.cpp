#include "skewlin/enumerate.hpp"

#include <deque>
#include <set>
#include <string>

namespace skewlin {

namespace {

std::string grid_key(const LinMap& m) {
    std::string key;
    for (int i = 0; i < m.grid().rows(); ++i)
        for (int j = 0; j < m.grid().cols(); ++j) {
            key += m.grid().at(i, j).str();
            key += ',';
        }
    return key;
}

}  // namespace

std::vector<Scalar> all_scalars(const ScalarDomain& d) {
    if (d.kind() != DomainKind::prime_field)
        throw std::invalid_argument("enumeration needs a finite prime field");
    std::vector<Scalar> out;
    out.reserve(static_cast<std::size_t>(d.modulus()));
    for (std::uint64_t r = 0; r < d.modulus(); ++r) out.push_back(Scalar::gf(d.modulus(), r));
    return out;
}

std::vector<Vec> all_vectors(const VectorSpaceRef& space) {
    std::vector<Scalar> scalars = all_scalars(space.domain);
    std::vector<Vec> out;
    std::vector<std::size_t> odo(static_cast<std::size_t>(space.dim), 0);
    while (true) {
        std::vector<Scalar> coords;
        coords.reserve(odo.size());
        for (std::size_t i = 0; i < odo.size(); ++i) coords.push_back(scalars[odo[i]]);
        out.emplace_back(space, std::move(coords));
        std::size_t i = 0;
        for (; i < odo.size(); ++i) {
            if (++odo[i] < scalars.size()) break;
            odo[i] = 0;
        }
        if (i == odo.size()) break;
    }
    return out;
}

std::vector<LinMap> all_linmaps(const VectorSpaceRef& v, const VectorSpaceRef& w) {
    std::vector<Scalar> scalars = all_scalars(v.domain);
    LinMap zero = LinMap::zero(v, w);
    int rows = zero.grid().rows(), cols = zero.grid().cols();
    std::size_t cells = static_cast<std::size_t>(rows) * cols;
    std::vector<LinMap> out;
    std::vector<std::size_t> odo(cells, 0);
    while (true) {
        Mat g = zero.grid();
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                g.at(i, j) = scalars[odo[static_cast<std::size_t>(i) * cols + j]];
        out.emplace_back(v, w, std::move(g));
        std::size_t i = 0;
        for (; i < cells; ++i) {
            if (++odo[i] < scalars.size()) break;
            odo[i] = 0;
        }
        if (i == cells) break;
    }
    return out;
}

std::vector<LinMap> closure(const SubmoduleGens& gens) {
    const VectorSpaceRef& v = gens.v_space();
    const VectorSpaceRef& w = gens.w_space();
    if (v.domain.kind() != DomainKind::prime_field)
        throw std::invalid_argument("closure enumeration needs a finite prime field");

    // one-step products of the generators with everything they may absorb
    std::vector<LinMap> base;
    switch (gens.side()) {
        case ModuleSide::right:
            for (const auto& g : gens.gens())
                for (const auto& p : all_linmaps(v, v)) base.push_back(compose(g, p));
            break;
        case ModuleSide::left:
            for (const auto& g : gens.gens())
                for (const auto& p : all_linmaps(w, w)) base.push_back(compose(p, g));
            break;
        case ModuleSide::two_sided:
            for (const auto& g : gens.gens())
                for (const auto& p : all_linmaps(w, w))
                    for (const auto& q : all_linmaps(v, v))
                        base.push_back(compose(p, compose(g, q)));
            break;
    }

    // additive closure; base already absorbs negation via -identity
    std::vector<LinMap> members;
    std::set<std::string> seen;
    std::deque<LinMap> work;
    LinMap zero = LinMap::zero(v, w);
    seen.insert(grid_key(zero));
    members.push_back(zero);
    work.push_back(zero);
    while (!work.empty()) {
        LinMap a = work.front();
        work.pop_front();
        for (const auto& b : base) {
            LinMap c = a + b;
            if (seen.insert(grid_key(c)).second) {
                members.push_back(c);
                work.push_back(c);
            }
        }
    }
    return members;
}

}  // namespace skewlin
