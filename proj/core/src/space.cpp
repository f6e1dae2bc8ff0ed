#include "skewlin/space.hpp"

#include <algorithm>

namespace skewlin {

VectorSpaceRef make_space(const ScalarDomain& d, int dim, Chirality c) {
    if (dim < 0) throw std::invalid_argument("negative dimension");
    return VectorSpaceRef{d, dim, c};
}

VectorSpaceRef dual(const VectorSpaceRef& v) {
    return VectorSpaceRef{v.domain, v.dim, flip(v.chirality)};
}

Vec::Vec(VectorSpaceRef space, std::vector<Scalar> coords)
    : space_(space), coords_(std::move(coords)) {
    if (static_cast<int>(coords_.size()) != space_.dim)
        throw space_mismatch("coordinate count does not match space dimension");
    for (const auto& c : coords_)
        if (c.domain() != space_.domain)
            throw domain_mismatch("coordinate domain does not match space domain");
}

Vec Vec::zero(const VectorSpaceRef& space) {
    return Vec(space, std::vector<Scalar>(static_cast<std::size_t>(space.dim),
                                          Scalar::zero(space.domain)));
}

Vec Vec::unit(const VectorSpaceRef& space, int index) {
    if (index < 0 || index >= space.dim) throw std::out_of_range("unit vector index");
    Vec v = zero(space);
    v.coords_[static_cast<std::size_t>(index)] = Scalar::one(space.domain);
    return v;
}

bool Vec::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(),
                       [](const Scalar& s) { return s.is_zero(); });
}

Vec Vec::operator+(const Vec& o) const {
    if (space_ != o.space_) throw space_mismatch("vector addition across spaces");
    std::vector<Scalar> out;
    out.reserve(coords_.size());
    for (std::size_t i = 0; i < coords_.size(); ++i) out.push_back(coords_[i] + o.coords_[i]);
    return Vec(space_, std::move(out));
}

Vec Vec::operator-(const Vec& o) const { return *this + (-o); }

Vec Vec::operator-() const {
    std::vector<Scalar> out;
    out.reserve(coords_.size());
    for (const auto& c : coords_) out.push_back(-c);
    return Vec(space_, std::move(out));
}

Vec Vec::scaled(const Scalar& lambda) const {
    if (lambda.domain() != space_.domain) throw domain_mismatch("scalar outside space domain");
    std::vector<Scalar> out;
    out.reserve(coords_.size());
    for (const auto& c : coords_)
        out.push_back(space_.chirality == Chirality::right ? c * lambda : lambda * c);
    return Vec(space_, std::move(out));
}

Subspace span(const VectorSpaceRef& ambient, const std::vector<Vec>& vectors) {
    std::vector<std::vector<Scalar>> rows;
    rows.reserve(vectors.size());
    for (const auto& v : vectors) {
        if (v.space() != ambient) throw space_mismatch("span over mixed spaces");
        rows.push_back(v.coords());
    }
    Echelon e = rref_span(std::move(rows), ambient.dim, ambient.domain, ambient.chirality);
    std::vector<Vec> basis;
    basis.reserve(e.basis.size());
    for (auto& b : e.basis) basis.emplace_back(ambient, std::move(b));
    return Subspace(ambient, std::move(basis), std::move(e.pivots));
}

Subspace span(const std::vector<Vec>& vectors) {
    if (vectors.empty()) throw std::invalid_argument("span of an empty list needs an ambient space");
    return span(vectors.front().space(), vectors);
}

Subspace Subspace::zero(const VectorSpaceRef& ambient) { return span(ambient, {}); }

Subspace Subspace::full(const VectorSpaceRef& ambient) {
    std::vector<Vec> units;
    units.reserve(static_cast<std::size_t>(ambient.dim));
    for (int i = 0; i < ambient.dim; ++i) units.push_back(Vec::unit(ambient, i));
    return span(ambient, units);
}

bool Subspace::contains(const Vec& v) const { return coefficients(v).has_value(); }

std::optional<std::vector<Scalar>> Subspace::coefficients(const Vec& v) const {
    if (v.space() != ambient_) throw space_mismatch("membership test across spaces");
    // Pivot coordinates read the coefficients off directly: basis[i] has a 1
    // at pivots[i] and zeros at every other pivot.
    std::vector<Scalar> coeffs;
    coeffs.reserve(basis_.size());
    Vec residual = v;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        Scalar c = residual[pivots_[i]];
        coeffs.push_back(c);
        if (!c.is_zero()) residual = residual - basis_[i].scaled(c);
    }
    if (!residual.is_zero()) return std::nullopt;
    return coeffs;
}

Subspace sum(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient()) throw space_mismatch("sum across ambients");
    std::vector<Vec> gens = a.basis();
    gens.insert(gens.end(), b.basis().begin(), b.basis().end());
    return span(a.ambient(), gens);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient()) throw space_mismatch("intersection across ambients");
    const VectorSpaceRef& amb = a.ambient();
    int ka = a.dim(), kb = b.dim();
    // Solve for coefficient pairs giving a common point: the side-correct
    // homogeneous system on the stacked generators.
    std::vector<Vec> gens;
    if (amb.chirality == Chirality::right) {
        // columns are the basis vectors; find sum a_i l_i - sum b_j m_j = 0
        Mat m = Mat::zero(amb.dim, ka + kb, amb.domain);
        for (int j = 0; j < ka; ++j)
            for (int i = 0; i < amb.dim; ++i) m.at(i, j) = a.basis()[j][i];
        for (int j = 0; j < kb; ++j)
            for (int i = 0; i < amb.dim; ++i) m.at(i, ka + j) = -b.basis()[j][i];
        for (const auto& sol : nullspace_col_action(m)) {
            Vec x = Vec::zero(amb);
            for (int j = 0; j < ka; ++j) x = x + a.basis()[j].scaled(sol[j]);
            gens.push_back(std::move(x));
        }
    } else {
        Mat m = Mat::zero(ka + kb, amb.dim, amb.domain);
        for (int i = 0; i < ka; ++i)
            for (int j = 0; j < amb.dim; ++j) m.at(i, j) = a.basis()[i][j];
        for (int i = 0; i < kb; ++i)
            for (int j = 0; j < amb.dim; ++j) m.at(ka + i, j) = -b.basis()[i][j];
        for (const auto& sol : nullspace_row_action(m)) {
            Vec x = Vec::zero(amb);
            for (int i = 0; i < ka; ++i) x = x + a.basis()[i].scaled(sol[i]);
            gens.push_back(std::move(x));
        }
    }
    return span(amb, gens);
}

bool subspace_leq(const Subspace& a, const Subspace& b) {
    return std::all_of(a.basis().begin(), a.basis().end(),
                       [&b](const Vec& v) { return b.contains(v); });
}

std::vector<Vec> extend_basis(const std::vector<Vec>& independent, const VectorSpaceRef& space) {
    Subspace current = span(space, independent);
    if (current.dim() != static_cast<int>(independent.size()))
        throw std::invalid_argument("extend_basis requires an independent input");
    std::vector<Vec> added;
    for (int i = 0; i < space.dim && current.dim() < space.dim; ++i) {
        Vec e = Vec::unit(space, i);
        if (current.contains(e)) continue;
        added.push_back(e);
        std::vector<Vec> gens = current.basis();
        gens.push_back(e);
        current = span(space, gens);
    }
    return added;
}

std::vector<Vec> extend_basis_within(const std::vector<Vec>& independent, const Subspace& super) {
    Subspace current = span(super.ambient(), independent);
    if (current.dim() != static_cast<int>(independent.size()))
        throw std::invalid_argument("extend_basis_within requires an independent input");
    if (!subspace_leq(current, super))
        throw std::invalid_argument("extend_basis_within input outside the target subspace");
    std::vector<Vec> added;
    for (const Vec& b : super.basis()) {
        if (current.dim() == super.dim()) break;
        if (current.contains(b)) continue;
        added.push_back(b);
        std::vector<Vec> gens = current.basis();
        gens.push_back(b);
        current = span(super.ambient(), gens);
    }
    return added;
}

}  // namespace skewlin
