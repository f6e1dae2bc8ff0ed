#pragma once

// Finite-dimensional right/left vector spaces over a division ring,
// coordinate vectors, and subspaces held in canonical reduced echelon form.

#include <optional>
#include <string>
#include <vector>

#include "skewlin/elim.hpp"

namespace skewlin {

struct VectorSpaceRef {
    ScalarDomain domain;
    int dim;
    Chirality chirality;

    friend bool operator==(const VectorSpaceRef& a, const VectorSpaceRef& b) {
        return a.domain == b.domain && a.dim == b.dim && a.chirality == b.chirality;
    }
    friend bool operator!=(const VectorSpaceRef& a, const VectorSpaceRef& b) { return !(a == b); }
};

VectorSpaceRef make_space(const ScalarDomain& d, int dim, Chirality c = Chirality::right);

/// The dual space: same dimension, opposite chirality.  Functionals on V
/// are plain vectors of dual(V).
VectorSpaceRef dual(const VectorSpaceRef& v);

class Vec {
   public:
    Vec(VectorSpaceRef space, std::vector<Scalar> coords);
    static Vec zero(const VectorSpaceRef& space);
    static Vec unit(const VectorSpaceRef& space, int index);

    const VectorSpaceRef& space() const { return space_; }
    int dim() const { return space_.dim; }
    const std::vector<Scalar>& coords() const { return coords_; }
    const Scalar& operator[](int i) const { return coords_[static_cast<std::size_t>(i)]; }

    bool is_zero() const;

    Vec operator+(const Vec& o) const;
    Vec operator-(const Vec& o) const;
    Vec operator-() const;
    /// Scalar action on the space's side: x*lambda for right, lambda*x for left.
    Vec scaled(const Scalar& lambda) const;

    friend bool operator==(const Vec& a, const Vec& b) {
        return a.space_ == b.space_ && a.coords_ == b.coords_;
    }
    friend bool operator!=(const Vec& a, const Vec& b) { return !(a == b); }

   private:
    VectorSpaceRef space_;
    std::vector<Scalar> coords_;
};

/// Subspace in canonical reduced echelon form; equality of canonical bases
/// is equality of subspaces.
class Subspace {
   public:
    static Subspace zero(const VectorSpaceRef& ambient);
    static Subspace full(const VectorSpaceRef& ambient);

    const VectorSpaceRef& ambient() const { return ambient_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<Vec>& basis() const { return basis_; }
    const std::vector<int>& pivots() const { return pivots_; }

    bool contains(const Vec& v) const;
    /// Side-correct combination coefficients of v over the canonical basis,
    /// or nullopt when v is outside the subspace.
    std::optional<std::vector<Scalar>> coefficients(const Vec& v) const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

    friend Subspace span(const VectorSpaceRef& ambient, const std::vector<Vec>& vectors);

   private:
    Subspace(VectorSpaceRef ambient, std::vector<Vec> basis, std::vector<int> pivots)
        : ambient_(ambient), basis_(std::move(basis)), pivots_(std::move(pivots)) {}
    VectorSpaceRef ambient_;
    std::vector<Vec> basis_;
    std::vector<int> pivots_;
};

Subspace span(const VectorSpaceRef& ambient, const std::vector<Vec>& vectors);
Subspace span(const std::vector<Vec>& vectors);  // ambient taken from the first vector

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
bool subspace_leq(const Subspace& a, const Subspace& b);

/// Completes an independent set to a basis of the full space with standard
/// coordinate vectors, chosen greedily in index order; returns only the
/// added vectors.  Throws on dependent input.
std::vector<Vec> extend_basis(const std::vector<Vec>& independent, const VectorSpaceRef& space);

/// Completes an independent subset of `super` to a basis of `super`, drawing
/// greedily from super's canonical basis; returns only the added vectors.
std::vector<Vec> extend_basis_within(const std::vector<Vec>& independent, const Subspace& super);

}  // namespace skewlin
