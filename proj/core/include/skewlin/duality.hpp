#pragma once

// Annihilators and the perp calculus: perp subspaces, the two perp/adjoint
// identities for families of maps, the explicit isomorphism between the
// annihilator of a joint kernel and the dual of the quotient, and the
// construction of a map with a prescribed adjoint image.

#include "skewlin/factor.hpp"

namespace skewlin {

/// Annihilator { f in dual(V) : f vanishes on s }, canonical form.
/// dim perp(s) + dim s = dim V.
Subspace perp(const Subspace& s);

/// Computes perp(joint image) and the intersection of adjoint kernels and
/// reports whether the canonical forms agree (they always do; exposed as a
/// checkable identity).
bool check_image_perp(const std::vector<LinMap>& family);

/// Computes perp(joint kernel) and the joint image of the adjoints and
/// reports agreement; finite families only.
bool check_kernel_perp(const std::vector<LinMap>& family);

struct QuotientDualIso {
    Subspace kernel_perp;        // (ker family)^perp inside dual(V)
    VectorSpaceRef quotient;     // complement coordinates standing in for V/ker
    VectorSpaceRef quotient_dual;
    LinMap forward;              // dual(V) -> quotient_dual, iso on kernel_perp
    LinMap backward;             // quotient_dual -> dual(V), image = kernel_perp
    std::vector<int> complement; // coordinate indices spanning the complement
};

/// The isomorphism between (ker family)^perp and the dual of V/ker(family),
/// with the quotient realized on a complement basis.  forward(backward) is
/// the identity on the quotient dual and backward(forward) restricts to the
/// identity on kernel_perp.
QuotientDualIso quotient_dual_iso(const VectorSpaceRef& domain,
                                  const std::vector<LinMap>& family);

/// A map T : V -> W with image(adjoint(T)) equal to the given subspace of
/// dual(V); requires dim W >= dim m.  Built as a sum of rank-one terms over
/// the canonical basis of m against leading coordinate vectors of W.
LinMap map_with_adjoint_image(const Subspace& m, const VectorSpaceRef& w);

}  // namespace skewlin
