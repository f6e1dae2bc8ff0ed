#pragma once

// Linear transformations between spaces of one chirality, their kernels,
// images, rank-one building blocks, duals and adjoints.

#include <utility>
#include <vector>

#include "skewlin/space.hpp"

namespace skewlin {

/// A linear transformation V -> W stored as a grid of scalars.  Right
/// chirality: grid is dim(W) x dim(V) and acts by matrix * column, so
/// A(x*l) = (Ax)*l holds by construction.  Left chirality: grid is
/// dim(V) x dim(W) and acts by row * matrix, so A(l*x) = l*(Ax).
class LinMap {
   public:
    LinMap(VectorSpaceRef domain, VectorSpaceRef codomain, Mat grid);
    static LinMap zero(const VectorSpaceRef& domain, const VectorSpaceRef& codomain);
    static LinMap identity(const VectorSpaceRef& space);
    /// Map determined by the images of the standard coordinate vectors.
    static LinMap from_images(const VectorSpaceRef& domain, const VectorSpaceRef& codomain,
                              const std::vector<Vec>& unit_images);
    /// Map determined by images of an arbitrary basis of the domain.
    static LinMap from_basis_images(const VectorSpaceRef& domain, const VectorSpaceRef& codomain,
                                    const std::vector<Vec>& basis, const std::vector<Vec>& images);

    const VectorSpaceRef& domain_space() const { return dom_; }
    const VectorSpaceRef& codomain_space() const { return cod_; }
    const Mat& grid() const { return grid_; }

    Vec apply(const Vec& x) const;
    Vec unit_image(int j) const;  // image of the j-th coordinate vector

    bool is_zero() const { return grid_.is_zero(); }

    LinMap operator+(const LinMap& o) const;
    LinMap operator-(const LinMap& o) const;
    LinMap operator-() const;

    friend bool operator==(const LinMap& a, const LinMap& b) {
        return a.dom_ == b.dom_ && a.cod_ == b.cod_ && a.grid_ == b.grid_;
    }
    friend bool operator!=(const LinMap& a, const LinMap& b) { return !(a == b); }

   private:
    VectorSpaceRef dom_, cod_;
    Mat grid_;
};

/// a after b; apply(compose(a,b), x) == apply(a, apply(b, x)).
LinMap compose(const LinMap& a, const LinMap& b);

Subspace kernel(const LinMap& t);
Subspace image(const LinMap& t);
int rank(const LinMap& t);
int coimage_dim(const LinMap& t);   // dim domain - dim kernel
int cokernel_dim(const LinMap& t);  // dim codomain - rank

/// Evaluation f(x) of a functional f in dual(space of x).
Scalar eval(const Vec& f, const Vec& x);

/// x (x) f: y -> x*f(y) for right spaces, y -> f(y)*x for left spaces.
/// The scalar product is taken in codomain-chirality order, which is
/// observable over the quaternions.
LinMap rank_one(const Vec& x, const Vec& f);

/// The adjoint T': dual(W) -> dual(V), (T'f)(v) = f(Tv).  Same grid acting
/// on the other side; over a noncommutative domain entry transposition
/// would be wrong.
LinMap adjoint(const LinMap& t);

/// Natural embedding of V into its double dual; in finite dimension this is
/// the coordinate identity (the double-dual space compares equal to V).
Vec natural_embed(const Vec& x);

/// Writes t as a sum of exactly rank(t) rank-one terms (x_i, f_i), using the
/// canonical image basis as the x_i.
std::vector<std::pair<Vec, Vec>> decompose_rank_one(const LinMap& t);

/// One preimage of `target` under t (free coordinates zero), or nullopt.
std::optional<Vec> solve_preimage(const LinMap& t, const Vec& target);

/// Span of the union of images of a family of maps with common codomain.
Subspace family_image(const VectorSpaceRef& codomain, const std::vector<LinMap>& family);
/// Intersection of kernels of a family with common domain.
Subspace family_kernel(const VectorSpaceRef& domain, const std::vector<LinMap>& family);

}  // namespace skewlin
