#include "skewlin/submodule.hpp"

#include "skewlin/enumerate.hpp"

namespace skewlin {

SubmoduleGens::SubmoduleGens(ModuleSide side, VectorSpaceRef v, VectorSpaceRef w,
                             std::vector<LinMap> gens)
    : side_(side),
      v_(v),
      w_(w),
      gens_(std::move(gens)),
      image_sum_(Subspace::zero(w)),
      kernel_intersection_(Subspace::full(v)) {
    for (const auto& g : gens_) {
        if (g.domain_space() != v_ || g.codomain_space() != w_)
            throw space_mismatch("generator outside the declared spaces");
    }
    image_sum_ = family_image(w_, gens_);
    kernel_intersection_ = family_kernel(v_, gens_);
}

FactorResult member_right(const SubmoduleGens& gens, const LinMap& t) {
    if (gens.side() != ModuleSide::right)
        throw std::invalid_argument("member_right needs right-side generators");
    if (t.domain_space() != gens.v_space() || t.codomain_space() != gens.w_space())
        throw space_mismatch("candidate outside the module's spaces");
    return factor_image_multi(t, gens.gens());
}

FactorResult member_left(const SubmoduleGens& gens, const LinMap& t) {
    if (gens.side() != ModuleSide::left)
        throw std::invalid_argument("member_left needs left-side generators");
    if (t.domain_space() != gens.v_space() || t.codomain_space() != gens.w_space())
        throw space_mismatch("candidate outside the module's spaces");
    return factor_kernel_multi(gens.gens(), t);
}

FactorResult member_two_sided(const SubmoduleGens& gens, const LinMap& t) {
    if (gens.side() != ModuleSide::two_sided)
        throw std::invalid_argument("member_two_sided needs two-sided generators");
    if (t.domain_space() != gens.v_space() || t.codomain_space() != gens.w_space())
        throw space_mismatch("candidate outside the module's spaces");
    int rt = rank(t);
    if (rt == 0) {
        // the zero map is a member of every bi-submodule, with an empty sum
        return FactorWitness{WitnessForm::s_eq_sum_ptq, false, {}, {}, {}, {}, {}};
    }
    // best generator = largest rank; any nonzero one generates everything
    int best = -1, best_rank = 0;
    for (std::size_t k = 0; k < gens.gens().size(); ++k) {
        int r = rank(gens.gens()[k]);
        if (r > best_rank) {
            best_rank = r;
            best = static_cast<int>(k);
        }
    }
    if (best < 0) return NoFactor{std::nullopt, std::pair<long long, long long>{rt, 0}};
    int copies = (rt + best_rank - 1) / best_rank;
    std::vector<LinMap> replicated(static_cast<std::size_t>(copies), gens.gens()[best]);
    FactorResult r = factor_rank_multi(t, replicated);
    FactorWitness w = witness(r);
    for (auto& idx : w.source_index) idx = static_cast<std::size_t>(best);
    if (!verify_factor_rank_multi(w, t, gens.gens()))
        throw std::logic_error("two-sided membership witness failed re-substitution");
    return w;
}

Subspace saturate(const SubmoduleGens& gens) {
    switch (gens.side()) {
        case ModuleSide::right: return gens.image_sum();
        case ModuleSide::left: return gens.kernel_intersection();
        case ModuleSide::two_sided:
            throw std::invalid_argument("two-sided submodules are not classified by a subspace");
    }
    throw std::logic_error("unreachable");
}

std::optional<LinMap> principal_generator(const SubmoduleGens& gens) {
    const VectorSpaceRef& v = gens.v_space();
    const VectorSpaceRef& w = gens.w_space();
    if (gens.side() == ModuleSide::right) {
        if (v.dim < w.dim) return std::nullopt;
        // send leading coordinate vectors onto the image-sum basis
        const Subspace& m = gens.image_sum();
        std::vector<Vec> images;
        for (int j = 0; j < v.dim; ++j)
            images.push_back(j < m.dim() ? m.basis()[j] : Vec::zero(w));
        return LinMap::from_images(v, w, images);
    }
    if (gens.side() == ModuleSide::left) {
        if (v.dim > w.dim) return std::nullopt;
        // kill the kernel intersection, embed a complement on coordinates
        const Subspace& k = gens.kernel_intersection();
        std::vector<Vec> complement = extend_basis(k.basis(), v);
        std::vector<Vec> basis = k.basis();
        std::vector<Vec> targets(basis.size(), Vec::zero(w));
        for (std::size_t i = 0; i < complement.size(); ++i) {
            basis.push_back(complement[i]);
            targets.push_back(Vec::unit(w, static_cast<int>(i)));
        }
        return LinMap::from_basis_images(v, w, basis, targets);
    }
    throw std::invalid_argument("principality is a one-sided notion here");
}

std::vector<LinMap> idempotent_generators(const SubmoduleGens& gens) {
    const VectorSpaceRef& v = gens.v_space();
    if (v != gens.w_space())
        throw space_mismatch("idempotent generators need V = W");
    if (gens.side() == ModuleSide::right) {
        // projection onto the image sum
        const Subspace& m = gens.image_sum();
        std::vector<Vec> basis = m.basis();
        std::vector<Vec> targets = m.basis();
        for (const Vec& c : extend_basis(m.basis(), v)) {
            basis.push_back(c);
            targets.push_back(Vec::zero(v));
        }
        LinMap e = LinMap::from_basis_images(v, v, basis, targets);
        if (compose(e, e) != e) throw std::logic_error("projection is not idempotent");
        return {e};
    }
    if (gens.side() == ModuleSide::left) {
        // projection along the kernel intersection
        const Subspace& k = gens.kernel_intersection();
        std::vector<Vec> basis = k.basis();
        std::vector<Vec> targets(basis.size(), Vec::zero(v));
        for (const Vec& c : extend_basis(k.basis(), v)) {
            basis.push_back(c);
            targets.push_back(c);
        }
        LinMap e = LinMap::from_basis_images(v, v, basis, targets);
        if (compose(e, e) != e) throw std::logic_error("projection is not idempotent");
        return {e};
    }
    throw std::invalid_argument("idempotent generators are one-sided here");
}

ConjectureEvidence conjecture_probe(const SubmoduleGens& gens, long long trials) {
    if (gens.side() != ModuleSide::left)
        throw std::invalid_argument("the probe concerns left submodules");
    if (gens.v_space().domain.kind() != DomainKind::prime_field)
        throw std::invalid_argument("closure enumeration needs a finite prime field");

    std::vector<LinMap> closed = closure(gens);
    auto in_closure = [&closed](const LinMap& t) {
        for (const auto& m : closed)
            if (m == t) return true;
        return false;
    };
    const Subspace& jk = gens.kernel_intersection();
    auto predicate = [&jk](const LinMap& t) { return subspace_leq(jk, kernel(t)); };

    ConjectureEvidence ev;
    std::vector<LinMap> probes = all_linmaps(gens.v_space(), gens.w_space());
    if (trials > 0 && static_cast<long long>(probes.size()) > trials)
        probes.erase(probes.begin() + static_cast<std::ptrdiff_t>(trials), probes.end());
    for (const auto& t : probes) {
        bool a = in_closure(t);
        bool b = predicate(t);
        ++ev.checked;
        if (a == b) {
            ++ev.agreements;
        } else {
            ++ev.disagreements;
            if (!ev.counterexample) ev.counterexample = t;
        }
    }
    return ev;
}

}  // namespace skewlin
