#include "skewlin/linmap.hpp"

namespace skewlin {

namespace {

void require_shapes(const VectorSpaceRef& dom, const VectorSpaceRef& cod, const Mat& grid) {
    if (dom.domain != cod.domain) throw domain_mismatch("map across scalar domains");
    if (dom.chirality != cod.chirality) throw space_mismatch("map across chiralities");
    if (grid.domain() != dom.domain) throw domain_mismatch("grid domain mismatch");
    int want_rows = dom.chirality == Chirality::right ? cod.dim : dom.dim;
    int want_cols = dom.chirality == Chirality::right ? dom.dim : cod.dim;
    if (grid.rows() != want_rows || grid.cols() != want_cols)
        throw space_mismatch("grid shape does not match spaces");
}

}  // namespace

LinMap::LinMap(VectorSpaceRef domain, VectorSpaceRef codomain, Mat grid)
    : dom_(domain), cod_(codomain), grid_(std::move(grid)) {
    require_shapes(dom_, cod_, grid_);
}

LinMap LinMap::zero(const VectorSpaceRef& domain, const VectorSpaceRef& codomain) {
    int rows = domain.chirality == Chirality::right ? codomain.dim : domain.dim;
    int cols = domain.chirality == Chirality::right ? domain.dim : codomain.dim;
    return LinMap(domain, codomain, Mat::zero(rows, cols, domain.domain));
}

LinMap LinMap::identity(const VectorSpaceRef& space) {
    return LinMap(space, space, Mat::identity(space.dim, space.domain));
}

LinMap LinMap::from_images(const VectorSpaceRef& domain, const VectorSpaceRef& codomain,
                           const std::vector<Vec>& unit_images) {
    if (static_cast<int>(unit_images.size()) != domain.dim)
        throw space_mismatch("one image per coordinate vector required");
    LinMap out = zero(domain, codomain);
    for (int j = 0; j < domain.dim; ++j) {
        if (unit_images[j].space() != codomain) throw space_mismatch("image outside codomain");
        for (int i = 0; i < codomain.dim; ++i) {
            if (domain.chirality == Chirality::right)
                out.grid_.at(i, j) = unit_images[j][i];
            else
                out.grid_.at(j, i) = unit_images[j][i];
        }
    }
    return out;
}

LinMap LinMap::from_basis_images(const VectorSpaceRef& domain, const VectorSpaceRef& codomain,
                                 const std::vector<Vec>& basis, const std::vector<Vec>& images) {
    int n = domain.dim;
    if (static_cast<int>(basis.size()) != n || basis.size() != images.size())
        throw space_mismatch("basis/image count mismatch");
    if (n == 0) return zero(domain, codomain);
    Mat c = Mat::zero(n, n, domain.domain);
    for (int l = 0; l < n; ++l) {
        if (basis[l].space() != domain) throw space_mismatch("basis vector outside domain");
        for (int i = 0; i < n; ++i) {
            if (domain.chirality == Chirality::right)
                c.at(i, l) = basis[l][i];
            else
                c.at(l, i) = basis[l][i];
        }
    }
    auto cinv = inverse(c);
    if (!cinv) throw std::invalid_argument("from_basis_images: vectors are not a basis");
    int m = codomain.dim;
    if (domain.chirality == Chirality::right) {
        Mat z = Mat::zero(m, n, domain.domain);
        for (int l = 0; l < n; ++l) {
            if (images[l].space() != codomain) throw space_mismatch("image outside codomain");
            for (int i = 0; i < m; ++i) z.at(i, l) = images[l][i];
        }
        return LinMap(domain, codomain, matmul(z, *cinv));
    }
    Mat z = Mat::zero(n, m, domain.domain);
    for (int l = 0; l < n; ++l) {
        if (images[l].space() != codomain) throw space_mismatch("image outside codomain");
        for (int i = 0; i < m; ++i) z.at(l, i) = images[l][i];
    }
    return LinMap(domain, codomain, matmul(*cinv, z));
}

Vec LinMap::apply(const Vec& x) const {
    if (x.space() != dom_) throw space_mismatch("apply outside the domain space");
    std::vector<Scalar> y(static_cast<std::size_t>(cod_.dim), Scalar::zero(dom_.domain));
    if (dom_.chirality == Chirality::right) {
        for (int i = 0; i < cod_.dim; ++i)
            for (int j = 0; j < dom_.dim; ++j) y[i] = y[i] + grid_.at(i, j) * x[j];
    } else {
        for (int j = 0; j < cod_.dim; ++j)
            for (int i = 0; i < dom_.dim; ++i) y[j] = y[j] + x[i] * grid_.at(i, j);
    }
    return Vec(cod_, std::move(y));
}

Vec LinMap::unit_image(int j) const {
    std::vector<Scalar> y;
    y.reserve(static_cast<std::size_t>(cod_.dim));
    for (int i = 0; i < cod_.dim; ++i)
        y.push_back(dom_.chirality == Chirality::right ? grid_.at(i, j) : grid_.at(j, i));
    return Vec(cod_, std::move(y));
}

LinMap LinMap::operator+(const LinMap& o) const {
    if (dom_ != o.dom_ || cod_ != o.cod_) throw space_mismatch("map addition across spaces");
    return LinMap(dom_, cod_, matadd(grid_, o.grid_));
}

LinMap LinMap::operator-(const LinMap& o) const { return *this + (-o); }

LinMap LinMap::operator-() const { return LinMap(dom_, cod_, matneg(grid_)); }

LinMap compose(const LinMap& a, const LinMap& b) {
    if (a.domain_space() != b.codomain_space()) throw space_mismatch("compose shape mismatch");
    if (a.domain_space().chirality == Chirality::right)
        return LinMap(b.domain_space(), a.codomain_space(), matmul(a.grid(), b.grid()));
    return LinMap(b.domain_space(), a.codomain_space(), matmul(b.grid(), a.grid()));
}

Subspace kernel(const LinMap& t) {
    const VectorSpaceRef& dom = t.domain_space();
    std::vector<std::vector<Scalar>> sols = dom.chirality == Chirality::right
                                                ? nullspace_col_action(t.grid())
                                                : nullspace_row_action(t.grid());
    std::vector<Vec> gens;
    gens.reserve(sols.size());
    for (auto& s : sols) gens.emplace_back(dom, std::move(s));
    return span(dom, gens);
}

Subspace image(const LinMap& t) {
    std::vector<Vec> gens;
    gens.reserve(static_cast<std::size_t>(t.domain_space().dim));
    for (int j = 0; j < t.domain_space().dim; ++j) gens.push_back(t.unit_image(j));
    return span(t.codomain_space(), gens);
}

int rank(const LinMap& t) { return mat_rank(t.grid()); }

int coimage_dim(const LinMap& t) { return t.domain_space().dim - kernel(t).dim(); }

int cokernel_dim(const LinMap& t) { return t.codomain_space().dim - rank(t); }

Scalar eval(const Vec& f, const Vec& x) {
    if (f.space() != dual(x.space())) throw space_mismatch("functional/vector space mismatch");
    Scalar acc = Scalar::zero(x.space().domain);
    if (x.space().chirality == Chirality::right) {
        for (int j = 0; j < x.dim(); ++j) acc = acc + f[j] * x[j];
    } else {
        for (int j = 0; j < x.dim(); ++j) acc = acc + x[j] * f[j];
    }
    return acc;
}

LinMap rank_one(const Vec& x, const Vec& f) {
    VectorSpaceRef domain = dual(f.space());
    const VectorSpaceRef& codomain = x.space();
    if (domain.chirality != codomain.chirality || domain.domain != codomain.domain)
        throw space_mismatch("rank_one across incompatible spaces");
    int n = domain.dim, m = codomain.dim;
    if (codomain.chirality == Chirality::right) {
        Mat g = Mat::zero(m, n, domain.domain);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j) g.at(i, j) = x[i] * f[j];
        return LinMap(domain, codomain, std::move(g));
    }
    Mat g = Mat::zero(n, m, domain.domain);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < m; ++i) g.at(j, i) = f[j] * x[i];
    return LinMap(domain, codomain, std::move(g));
}

LinMap adjoint(const LinMap& t) {
    return LinMap(dual(t.codomain_space()), dual(t.domain_space()), t.grid());
}

Vec natural_embed(const Vec& x) { return Vec(dual(dual(x.space())), x.coords()); }

std::vector<std::pair<Vec, Vec>> decompose_rank_one(const LinMap& t) {
    Subspace im = image(t);
    VectorSpaceRef fspace = dual(t.domain_space());
    std::vector<std::pair<Vec, Vec>> out;
    out.reserve(static_cast<std::size_t>(im.dim()));
    for (int i = 0; i < im.dim(); ++i) {
        int p = im.pivots()[i];
        // the coefficient of the i-th image basis vector inside t(e_j) is
        // coordinate p of t(e_j); collecting over j gives the functional
        std::vector<Scalar> fc;
        fc.reserve(static_cast<std::size_t>(t.domain_space().dim));
        for (int j = 0; j < t.domain_space().dim; ++j) fc.push_back(t.unit_image(j)[p]);
        out.emplace_back(im.basis()[i], Vec(fspace, std::move(fc)));
    }
    return out;
}

std::optional<Vec> solve_preimage(const LinMap& t, const Vec& target) {
    if (target.space() != t.codomain_space()) throw space_mismatch("target outside codomain");
    auto sol = t.domain_space().chirality == Chirality::right
                   ? solve_col_action(t.grid(), target.coords())
                   : solve_row_action(t.grid(), target.coords());
    if (!sol) return std::nullopt;
    return Vec(t.domain_space(), std::move(*sol));
}

Subspace family_image(const VectorSpaceRef& codomain, const std::vector<LinMap>& family) {
    std::vector<Vec> gens;
    for (const auto& t : family) {
        if (t.codomain_space() != codomain) throw space_mismatch("family codomain mismatch");
        for (int j = 0; j < t.domain_space().dim; ++j) gens.push_back(t.unit_image(j));
    }
    return span(codomain, gens);
}

Subspace family_kernel(const VectorSpaceRef& domain, const std::vector<LinMap>& family) {
    Subspace acc = Subspace::full(domain);
    for (const auto& t : family) {
        if (t.domain_space() != domain) throw space_mismatch("family domain mismatch");
        acc = intersect(acc, kernel(t));
    }
    return acc;
}

}  // namespace skewlin
