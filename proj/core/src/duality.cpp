#include "skewlin/duality.hpp"

namespace skewlin {

Subspace perp(const Subspace& s) {
    const VectorSpaceRef& v = s.ambient();
    VectorSpaceRef vdual = dual(v);
    int k = s.dim();
    std::vector<Vec> gens;
    if (v.chirality == Chirality::right) {
        // f(b) = sum_j f_j * b_j = 0 for each basis vector: a row-action
        // nullspace with the basis vectors laid out as columns
        Mat m = Mat::zero(v.dim, k, v.domain);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < v.dim; ++j) m.at(j, i) = s.basis()[i][j];
        for (auto& sol : nullspace_row_action(m)) gens.emplace_back(vdual, std::move(sol));
    } else {
        // f(b) = sum_j b_j * f_j = 0: a column-action nullspace on the rows
        Mat m = Mat::zero(k, v.dim, v.domain);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < v.dim; ++j) m.at(i, j) = s.basis()[i][j];
        for (auto& sol : nullspace_col_action(m)) gens.emplace_back(vdual, std::move(sol));
    }
    return span(vdual, gens);
}

bool check_image_perp(const std::vector<LinMap>& family) {
    if (family.empty()) throw std::invalid_argument("empty family has no codomain");
    const VectorSpaceRef& w = family.front().codomain_space();
    Subspace lhs = perp(family_image(w, family));
    std::vector<LinMap> adjoints;
    adjoints.reserve(family.size());
    for (const auto& t : family) adjoints.push_back(adjoint(t));
    Subspace rhs = family_kernel(dual(w), adjoints);
    return lhs == rhs;
}

bool check_kernel_perp(const std::vector<LinMap>& family) {
    if (family.empty()) throw std::invalid_argument("empty family has no domain");
    const VectorSpaceRef& v = family.front().domain_space();
    Subspace lhs = perp(family_kernel(v, family));
    std::vector<LinMap> adjoints;
    adjoints.reserve(family.size());
    for (const auto& t : family) adjoints.push_back(adjoint(t));
    Subspace rhs = family_image(dual(v), adjoints);
    return lhs == rhs;
}

QuotientDualIso quotient_dual_iso(const VectorSpaceRef& domain,
                                  const std::vector<LinMap>& family) {
    Subspace ker = family_kernel(domain, family);
    Subspace kperp = perp(ker);
    std::vector<Vec> complement_units = extend_basis(ker.basis(), domain);
    std::vector<int> complement;
    for (const Vec& u : complement_units)
        for (int i = 0; i < domain.dim; ++i)
            if (!u[i].is_zero()) complement.push_back(i);
    int q = static_cast<int>(complement.size());
    VectorSpaceRef quotient{domain.domain, q, domain.chirality};
    VectorSpaceRef vdual = dual(domain);
    VectorSpaceRef qdual = dual(quotient);

    // forward just reads off the complement coordinates of a functional
    std::vector<Vec> fwd_targets;
    for (int j = 0; j < domain.dim; ++j) {
        Vec img = Vec::zero(qdual);
        for (int t = 0; t < q; ++t)
            if (complement[t] == j) img = Vec::unit(qdual, t);
        fwd_targets.push_back(img);
    }
    LinMap forward = LinMap::from_images(vdual, qdual, fwd_targets);

    // backward reconstructs f from its values on the complement: decompose
    // each coordinate vector over (kernel basis | complement units) and keep
    // the complement coefficients
    Mat c = Mat::zero(domain.dim, domain.dim, domain.domain);
    int total = 0;
    auto put_vec = [&](const Vec& b) {
        for (int i = 0; i < domain.dim; ++i) {
            if (domain.chirality == Chirality::right)
                c.at(i, total) = b[i];
            else
                c.at(total, i) = b[i];
        }
        ++total;
    };
    for (const Vec& b : ker.basis()) put_vec(b);
    for (const Vec& u : complement_units) put_vec(u);
    auto cinv = inverse(c);
    if (!cinv) throw std::logic_error("kernel basis plus complement is not a basis");
    int k = ker.dim();
    std::vector<Vec> bwd_targets;  // image of each unit functional of qdual
    for (int t = 0; t < q; ++t) {
        std::vector<Scalar> f;
        f.reserve(static_cast<std::size_t>(domain.dim));
        for (int j = 0; j < domain.dim; ++j) {
            // coefficient of complement unit t in the decomposition of e_j
            if (domain.chirality == Chirality::right)
                f.push_back(cinv->at(k + t, j));
            else
                f.push_back(cinv->at(j, k + t));
        }
        bwd_targets.push_back(Vec(vdual, std::move(f)));
    }
    LinMap backward = LinMap::from_images(qdual, vdual, bwd_targets);
    return QuotientDualIso{std::move(kperp), quotient, qdual, std::move(forward),
                           std::move(backward), std::move(complement)};
}

LinMap map_with_adjoint_image(const Subspace& m, const VectorSpaceRef& w) {
    const VectorSpaceRef& vdual = m.ambient();
    VectorSpaceRef v = dual(vdual);
    if (w.domain != v.domain) throw domain_mismatch("target space over a different domain");
    if (w.chirality != v.chirality)
        throw space_mismatch("target space of the wrong chirality");
    if (w.dim < m.dim())
        throw std::invalid_argument("target dimension below the dimension of the subspace");
    LinMap t = LinMap::zero(v, w);
    for (int i = 0; i < m.dim(); ++i)
        t = t + rank_one(Vec::unit(w, i), m.basis()[i]);
    if (image(adjoint(t)) != m) throw std::logic_error("adjoint image construction failed");
    return t;
}

}  // namespace skewlin
