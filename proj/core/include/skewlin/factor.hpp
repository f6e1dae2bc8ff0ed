#pragma once

// Witness-producing factorizations.  Each decision procedure either returns
// explicit transformations realizing the stated identity (re-substituted
// exactly before being handed back) or a finite certificate showing why no
// factorization exists.

#include <optional>
#include <variant>
#include <vector>

#include "skewlin/linmap.hpp"

namespace skewlin {

enum class WitnessForm {
    t_eq_ps,        // T = P*S
    t_eq_sum_ps,    // T = P1*S1 + ... + Pn*Sn
    s_eq_tp,        // S = T*P
    s_eq_sum_tp,    // S = T1*P1 + ... + Tn*Pn
    s_eq_ptq,       // S = P*T*Q
    s_eq_sum_ptq,   // S = P1*T1*Q1 + ... + Pn*Tn*Qn
};

struct WitnessFlags {
    bool injective = false;
    bool surjective = false;
    bool invertible = false;
};

struct FactorWitness {
    WitnessForm form;
    /// When set, the identity holds with the two call arguments exchanged
    /// (the equal-kernel and equal-image procedures pick the direction the
    /// dimension comparison allows).
    bool swapped = false;
    std::vector<LinMap> outer;               // the P_i
    std::vector<LinMap> inner;               // the Q_i (rank forms only)
    std::vector<std::size_t> source_index;   // which input map each term multiplies
    std::vector<WitnessFlags> outer_flags;
    std::vector<WitnessFlags> inner_flags;
};

struct NoFactor {
    /// A vector violating the required kernel/image inclusion.
    std::optional<Vec> certificate;
    /// (needed rank, available rank) when the obstruction is a rank count.
    std::optional<std::pair<long long, long long>> rank_certificate;
};

using FactorResult = std::variant<FactorWitness, NoFactor>;

inline bool has_witness(const FactorResult& r) {
    return std::holds_alternative<FactorWitness>(r);
}
inline const FactorWitness& witness(const FactorResult& r) { return std::get<FactorWitness>(r); }
inline const NoFactor& refusal(const FactorResult& r) { return std::get<NoFactor>(r); }

/// ker(s) included in ker(t) iff t factors as P*s with P from the codomain
/// of s to the codomain of t; both maps must share the domain space.
FactorResult factor_kernel_subset(const LinMap& s, const LinMap& t);

/// ker(s) = ker(t) iff an injective witness exists: t = P*s when
/// cokernel_dim(s) <= cokernel_dim(t), else s = P*t (swapped).  Witness
/// invertible exactly when the cokernel dimensions agree.
FactorResult factor_kernel_equal(const LinMap& s, const LinMap& t);

/// The kernel intersection of `gens` included in ker(t) iff
/// t = sum_i P_i * gens_i.
FactorResult factor_kernel_multi(const std::vector<LinMap>& gens, const LinMap& t);

/// im(s) included in im(t) iff s factors as t*P; both maps must share the
/// codomain space.
FactorResult factor_image_subset(const LinMap& s, const LinMap& t);

/// im(s) = im(t) iff a surjective witness exists: t = s*P when
/// dim ker(s) <= dim ker(t) (swapped), else s = t*P.  Invertible exactly
/// when the kernel dimensions agree.
FactorResult factor_image_equal(const LinMap& s, const LinMap& t);

/// im(s) included in the joint image of `gens` iff s = sum_i gens_i * P_i.
FactorResult factor_image_multi(const LinMap& s, const std::vector<LinMap>& gens);

/// rank(s) <= rank(t) iff s = P*t*Q; the four spaces are arbitrary over one
/// scalar domain and chirality.
FactorResult factor_rank(const LinMap& s, const LinMap& t);

/// rank(s) <= sum_i rank(gens_i) iff s = sum_i P_i*gens_i*Q_i; one term per
/// generator.
FactorResult factor_rank_multi(const LinMap& s, const std::vector<LinMap>& gens);

/// Exact re-substitution checks.  The factorization routines run these
/// before returning, so a false result from here on a returned witness
/// would be a library defect; they are exposed so callers can audit.
bool verify_factor(const FactorWitness& w, const LinMap& s, const LinMap& t);
bool verify_factor_kernel_multi(const FactorWitness& w, const std::vector<LinMap>& gens,
                                const LinMap& t);
bool verify_factor_image_multi(const FactorWitness& w, const LinMap& s,
                               const std::vector<LinMap>& gens);
bool verify_factor_rank_multi(const FactorWitness& w, const LinMap& s,
                              const std::vector<LinMap>& gens);

WitnessFlags witness_flags(const LinMap& m);

}  // namespace skewlin
