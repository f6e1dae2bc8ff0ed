#pragma once

// One-sided and two-sided submodules of the maps V -> W given by finite
// generator lists.  Membership is decided through the canonical invariant
// (joint image for right submodules, joint kernel for left ones), never by
// closure search; the closure enumeration in enumerate.hpp exists as an
// independent oracle.

#include "skewlin/factor.hpp"

namespace skewlin {

enum class ModuleSide { right, left, two_sided };

class SubmoduleGens {
   public:
    SubmoduleGens(ModuleSide side, VectorSpaceRef v, VectorSpaceRef w, std::vector<LinMap> gens);

    ModuleSide side() const { return side_; }
    const VectorSpaceRef& v_space() const { return v_; }
    const VectorSpaceRef& w_space() const { return w_; }
    const std::vector<LinMap>& gens() const { return gens_; }

    /// span of the union of generator images (the right-side invariant).
    const Subspace& image_sum() const { return image_sum_; }
    /// intersection of generator kernels (the left-side invariant).
    const Subspace& kernel_intersection() const { return kernel_intersection_; }

   private:
    ModuleSide side_;
    VectorSpaceRef v_, w_;
    std::vector<LinMap> gens_;
    Subspace image_sum_;
    Subspace kernel_intersection_;
};

/// t lies in the right submodule generated by gens iff im(t) is inside the
/// image sum; positive answers carry P_i with sum_i gens_i * P_i = t,
/// negative ones a vector in im(t) escaping the image sum.
FactorResult member_right(const SubmoduleGens& gens, const LinMap& t);

/// t lies in the left submodule iff the joint kernel is inside ker(t);
/// positive answers carry P_i with sum_i P_i * gens_i = t, negative ones a
/// joint-kernel vector t does not kill.
FactorResult member_left(const SubmoduleGens& gens, const LinMap& t);

/// Membership in the bi-submodule.  In finite dimension any nonzero
/// generator reaches everything: the chosen generator is replicated just
/// enough for the rank inequality and factored through; one (P_i, Q_i) pair
/// per replica, source_index naming the generator used.
FactorResult member_two_sided(const SubmoduleGens& gens, const LinMap& t);

/// Canonical object deciding equality of generated submodules: the image
/// sum for right generators, the kernel intersection for left ones.
/// Two-sided generator lists are not classified by a subspace; throws.
Subspace saturate(const SubmoduleGens& gens);

/// Single generator with the same invariant, available under the dimension
/// hypotheses (right: dim V >= dim W, left: dim V <= dim W); nullopt
/// otherwise -- outside those hypotheses no principality is promised.
std::optional<LinMap> principal_generator(const SubmoduleGens& gens);

/// For V = W: an idempotent generating the same one-sided submodule (a
/// projection onto the image sum, or along the kernel intersection).
std::vector<LinMap> idempotent_generators(const SubmoduleGens& gens);

struct ConjectureEvidence {
    long long checked = 0;
    long long agreements = 0;
    long long disagreements = 0;
    std::optional<LinMap> counterexample;
};

/// Experimental comparison, for left generator lists over a prime field, of
/// brute-force closure membership against the kernel-inclusion predicate.
/// Reports evidence only; agreement is not asserted anywhere.  `trials`
/// caps the number of probe maps when exhausting all of L(V,W) is too big.
ConjectureEvidence conjecture_probe(const SubmoduleGens& gens, long long trials);

}  // namespace skewlin
