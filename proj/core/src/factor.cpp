#include "skewlin/factor.hpp"

namespace skewlin {

namespace {

VectorSpaceRef power_space(const VectorSpaceRef& w, int n) {
    return VectorSpaceRef{w.domain, n * w.dim, w.chirality};
}

// V -> W^n from maps V -> W; block i carries gens[i].
LinMap stack_codomain(const VectorSpaceRef& v, const VectorSpaceRef& w,
                      const std::vector<LinMap>& gens) {
    int n = static_cast<int>(gens.size());
    VectorSpaceRef cod = power_space(w, n);
    LinMap out = LinMap::zero(v, cod);
    Mat grid = out.grid();
    for (int b = 0; b < n; ++b) {
        const Mat& g = gens[b].grid();
        for (int i = 0; i < g.rows(); ++i)
            for (int j = 0; j < g.cols(); ++j) {
                if (v.chirality == Chirality::right)
                    grid.at(b * w.dim + i, j) = g.at(i, j);
                else
                    grid.at(i, b * w.dim + j) = g.at(i, j);
            }
    }
    return LinMap(v, cod, std::move(grid));
}

// Splits P : W^n -> Z into the maps W -> Z acting on each block.
std::vector<LinMap> split_codomain(const LinMap& p, int n, const VectorSpaceRef& w) {
    std::vector<LinMap> out;
    out.reserve(static_cast<std::size_t>(n));
    const VectorSpaceRef& z = p.codomain_space();
    for (int b = 0; b < n; ++b) {
        Mat g = w.chirality == Chirality::right ? Mat::zero(z.dim, w.dim, w.domain)
                                                : Mat::zero(w.dim, z.dim, w.domain);
        for (int i = 0; i < g.rows(); ++i)
            for (int j = 0; j < g.cols(); ++j) {
                if (w.chirality == Chirality::right)
                    g.at(i, j) = p.grid().at(i, b * w.dim + j);
                else
                    g.at(i, j) = p.grid().at(b * w.dim + i, j);
            }
        out.emplace_back(w, z, std::move(g));
    }
    return out;
}

// Z^n -> W from maps Z -> W; (y_1..y_n) goes to sum_i gens[i](y_i).
LinMap stack_domain(const VectorSpaceRef& z, const VectorSpaceRef& w,
                    const std::vector<LinMap>& gens) {
    int n = static_cast<int>(gens.size());
    VectorSpaceRef dom = power_space(z, n);
    LinMap out = LinMap::zero(dom, w);
    Mat grid = out.grid();
    for (int b = 0; b < n; ++b) {
        const Mat& g = gens[b].grid();
        for (int i = 0; i < g.rows(); ++i)
            for (int j = 0; j < g.cols(); ++j) {
                if (z.chirality == Chirality::right)
                    grid.at(i, b * z.dim + j) = g.at(i, j);
                else
                    grid.at(b * z.dim + i, j) = g.at(i, j);
            }
    }
    return LinMap(dom, w, std::move(grid));
}

// Splits P : V -> Z^n into the maps V -> Z landing in each block.
std::vector<LinMap> split_domain(const LinMap& p, int n, const VectorSpaceRef& z) {
    std::vector<LinMap> out;
    out.reserve(static_cast<std::size_t>(n));
    const VectorSpaceRef& v = p.domain_space();
    for (int b = 0; b < n; ++b) {
        Mat g = z.chirality == Chirality::right ? Mat::zero(z.dim, v.dim, z.domain)
                                                : Mat::zero(v.dim, z.dim, z.domain);
        for (int i = 0; i < g.rows(); ++i)
            for (int j = 0; j < g.cols(); ++j) {
                if (z.chirality == Chirality::right)
                    g.at(i, j) = p.grid().at(b * z.dim + i, j);
                else
                    g.at(i, j) = p.grid().at(i, b * z.dim + j);
            }
        out.emplace_back(v, z, std::move(g));
    }
    return out;
}

std::vector<Vec> concat(std::vector<Vec> a, const std::vector<Vec>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

LinMap sum_of_terms(const std::vector<LinMap>& terms, const VectorSpaceRef& dom,
                    const VectorSpaceRef& cod) {
    LinMap acc = LinMap::zero(dom, cod);
    for (const auto& t : terms) acc = acc + t;
    return acc;
}

[[noreturn]] void soundness_failure() {
    throw std::logic_error("factorization witness failed re-substitution");
}

// Certificate vector in `inside` escaping `outside`; inclusion must fail.
Vec escape_vector(const Subspace& inside, const Subspace& outside) {
    for (const Vec& b : inside.basis())
        if (!outside.contains(b)) return b;
    throw std::logic_error("no escape vector in an included subspace");
}

}  // namespace

WitnessFlags witness_flags(const LinMap& m) {
    int r = rank(m);
    WitnessFlags f;
    f.injective = r == m.domain_space().dim;
    f.surjective = r == m.codomain_space().dim;
    f.invertible = f.injective && f.surjective;
    return f;
}

FactorResult factor_kernel_subset(const LinMap& s, const LinMap& t) {
    if (s.domain_space() != t.domain_space())
        throw space_mismatch("kernel factorization needs a common domain");
    const VectorSpaceRef& v = s.domain_space();
    Subspace ker_s = kernel(s);
    Subspace ker_t = kernel(t);
    if (!subspace_leq(ker_s, ker_t))
        return NoFactor{escape_vector(ker_s, ker_t), std::nullopt};

    // basis of V split as: ker s, its completion inside ker t, the rest
    std::vector<Vec> b1 = ker_s.basis();
    std::vector<Vec> b2 = extend_basis_within(b1, ker_t);
    std::vector<Vec> b23 = concat(b2, extend_basis(concat(b1, b2), v));
    std::vector<Vec> s_images;
    std::vector<Vec> targets;
    for (const Vec& x : b23) {
        s_images.push_back(s.apply(x));
        targets.push_back(t.apply(x));
    }
    // on the completion of s(B2 u B3) inside W the witness is fixed to zero
    std::vector<Vec> b4 = extend_basis(s_images, s.codomain_space());
    for (std::size_t i = 0; i < b4.size(); ++i)
        targets.push_back(Vec::zero(t.codomain_space()));
    LinMap p = LinMap::from_basis_images(s.codomain_space(), t.codomain_space(),
                                         concat(s_images, b4), targets);
    if (compose(p, s) != t) soundness_failure();
    FactorWitness w{WitnessForm::t_eq_ps, false, {p}, {}, {0}, {witness_flags(p)}, {}};
    return w;
}

namespace {

// ker s = ker t and coker(s) <= coker(t): injective P with t = P*s, built on
// the basis split of the shared kernel.
LinMap directed_kernel_equal(const LinMap& s, const LinMap& t) {
    const VectorSpaceRef& v = s.domain_space();
    std::vector<Vec> b1 = kernel(s).basis();
    std::vector<Vec> b2 = extend_basis(b1, v);
    std::vector<Vec> s_images, t_images;
    for (const Vec& x : b2) {
        s_images.push_back(s.apply(x));
        t_images.push_back(t.apply(x));
    }
    std::vector<Vec> b3 = extend_basis(s_images, s.codomain_space());
    std::vector<Vec> b4 = extend_basis(t_images, t.codomain_space());
    std::vector<Vec> targets = t_images;
    for (std::size_t i = 0; i < b3.size(); ++i) targets.push_back(b4[i]);
    return LinMap::from_basis_images(s.codomain_space(), t.codomain_space(),
                                     concat(s_images, b3), targets);
}

}  // namespace

FactorResult factor_kernel_equal(const LinMap& s, const LinMap& t) {
    if (s.domain_space() != t.domain_space())
        throw space_mismatch("kernel factorization needs a common domain");
    Subspace ker_s = kernel(s);
    Subspace ker_t = kernel(t);
    if (ker_s != ker_t) {
        Vec cert = subspace_leq(ker_s, ker_t) ? escape_vector(ker_t, ker_s)
                                              : escape_vector(ker_s, ker_t);
        return NoFactor{cert, std::nullopt};
    }
    bool swapped = cokernel_dim(s) > cokernel_dim(t);
    LinMap p = swapped ? directed_kernel_equal(t, s) : directed_kernel_equal(s, t);
    if (compose(p, swapped ? t : s) != (swapped ? s : t)) soundness_failure();
    FactorWitness w{WitnessForm::t_eq_ps, swapped, {p}, {}, {0}, {witness_flags(p)}, {}};
    return w;
}

FactorResult factor_kernel_multi(const std::vector<LinMap>& gens, const LinMap& t) {
    const VectorSpaceRef& v = t.domain_space();
    VectorSpaceRef w_space = gens.empty() ? t.codomain_space() : gens.front().codomain_space();
    for (const auto& g : gens) {
        if (g.domain_space() != v) throw space_mismatch("generators need the common domain");
        if (g.codomain_space() != w_space)
            throw space_mismatch("generators need a common codomain");
    }
    Subspace joint_kernel = family_kernel(v, gens);
    Subspace ker_t = kernel(t);
    if (!subspace_leq(joint_kernel, ker_t))
        return NoFactor{escape_vector(joint_kernel, ker_t), std::nullopt};
    FactorWitness w{WitnessForm::t_eq_sum_ps, false, {}, {}, {}, {}, {}};
    if (!gens.empty()) {
        LinMap stacked = stack_codomain(v, w_space, gens);
        FactorResult inner = factor_kernel_subset(stacked, t);
        w.outer = split_codomain(witness(inner).outer.front(), static_cast<int>(gens.size()),
                                 w_space);
        for (std::size_t i = 0; i < w.outer.size(); ++i) {
            w.source_index.push_back(i);
            w.outer_flags.push_back(witness_flags(w.outer[i]));
        }
    }
    if (!verify_factor_kernel_multi(w, gens, t)) soundness_failure();
    return w;
}

FactorResult factor_image_subset(const LinMap& s, const LinMap& t) {
    if (s.codomain_space() != t.codomain_space())
        throw space_mismatch("image factorization needs a common codomain");
    const VectorSpaceRef& v = s.domain_space();
    Subspace im_s = image(s);
    Subspace im_t = image(t);
    if (!subspace_leq(im_s, im_t)) return NoFactor{escape_vector(im_s, im_t), std::nullopt};

    // kernel basis goes to zero; the completion picks any preimage under t
    std::vector<Vec> b1 = kernel(s).basis();
    std::vector<Vec> b3 = extend_basis(b1, v);
    std::vector<Vec> targets(b1.size(), Vec::zero(t.domain_space()));
    for (const Vec& y : b3) {
        auto x = solve_preimage(t, s.apply(y));
        if (!x) soundness_failure();
        targets.push_back(std::move(*x));
    }
    LinMap p = LinMap::from_basis_images(v, t.domain_space(), concat(b1, b3), targets);
    if (compose(t, p) != s) soundness_failure();
    FactorWitness w{WitnessForm::s_eq_tp, false, {p}, {}, {0}, {witness_flags(p)}, {}};
    return w;
}

namespace {

// im s = im t and dim ker s <= dim ker t: surjective P with t = s*P.
LinMap directed_image_equal(const LinMap& s, const LinMap& t) {
    const VectorSpaceRef& v = s.domain_space();
    const VectorSpaceRef& z = t.domain_space();
    std::vector<Vec> b1 = kernel(s).basis();
    std::vector<Vec> b2 = kernel(t).basis();
    std::vector<Vec> b3 = extend_basis(b1, v);
    std::vector<Vec> b4;
    for (const Vec& y : b3) {
        auto x = solve_preimage(t, s.apply(y));
        if (!x) soundness_failure();
        b4.push_back(std::move(*x));
    }
    // ker t maps onto ker s index-first (zero once the shorter list runs out),
    // each preimage x_y maps back to y; that makes P surjective.
    std::vector<Vec> targets;
    for (std::size_t i = 0; i < b2.size(); ++i)
        targets.push_back(i < b1.size() ? b1[i] : Vec::zero(v));
    for (const Vec& y : b3) targets.push_back(y);
    return LinMap::from_basis_images(z, v, concat(b2, b4), targets);
}

}  // namespace

FactorResult factor_image_equal(const LinMap& s, const LinMap& t) {
    if (s.codomain_space() != t.codomain_space())
        throw space_mismatch("image factorization needs a common codomain");
    Subspace im_s = image(s);
    Subspace im_t = image(t);
    if (im_s != im_t) {
        Vec cert = subspace_leq(im_s, im_t) ? escape_vector(im_t, im_s)
                                            : escape_vector(im_s, im_t);
        return NoFactor{cert, std::nullopt};
    }
    bool swapped = kernel(s).dim() <= kernel(t).dim();
    LinMap p = swapped ? directed_image_equal(s, t) : directed_image_equal(t, s);
    if (compose(swapped ? s : t, p) != (swapped ? t : s)) soundness_failure();
    FactorWitness w{WitnessForm::s_eq_tp, swapped, {p}, {}, {0}, {witness_flags(p)}, {}};
    return w;
}

FactorResult factor_image_multi(const LinMap& s, const std::vector<LinMap>& gens) {
    const VectorSpaceRef& w_space = s.codomain_space();
    VectorSpaceRef z = gens.empty() ? s.domain_space() : gens.front().domain_space();
    for (const auto& g : gens) {
        if (g.codomain_space() != w_space)
            throw space_mismatch("generators need the common codomain");
        if (g.domain_space() != z) throw space_mismatch("generators need a common domain");
    }
    Subspace joint_image = family_image(w_space, gens);
    Subspace im_s = image(s);
    if (!subspace_leq(im_s, joint_image))
        return NoFactor{escape_vector(im_s, joint_image), std::nullopt};
    FactorWitness w{WitnessForm::s_eq_sum_tp, false, {}, {}, {}, {}, {}};
    if (!gens.empty()) {
        LinMap stacked = stack_domain(z, w_space, gens);
        FactorResult inner = factor_image_subset(s, stacked);
        w.outer = split_domain(witness(inner).outer.front(), static_cast<int>(gens.size()), z);
        for (std::size_t i = 0; i < w.outer.size(); ++i) {
            w.source_index.push_back(i);
            w.outer_flags.push_back(witness_flags(w.outer[i]));
        }
    }
    if (!verify_factor_image_multi(w, s, gens)) soundness_failure();
    return w;
}

namespace {

// P : Y -> W sending the canonical image basis of t onto the image basis of
// s along `assign`, zero on the completion of Y.
LinMap image_collapse(const LinMap& t, const Subspace& im_s, const std::vector<int>& assign) {
    const Subspace im_t = image(t);
    const VectorSpaceRef& y_space = t.codomain_space();
    const VectorSpaceRef& w_space = im_s.ambient();
    std::vector<Vec> front = im_t.basis();
    std::vector<Vec> ext = extend_basis(front, y_space);
    std::vector<Vec> targets;
    for (std::size_t j = 0; j < front.size(); ++j) targets.push_back(im_s.basis()[assign[j]]);
    for (std::size_t i = 0; i < ext.size(); ++i) targets.push_back(Vec::zero(w_space));
    return LinMap::from_basis_images(y_space, w_space, concat(front, ext), targets);
}

}  // namespace

FactorResult factor_rank(const LinMap& s, const LinMap& t) {
    if (s.domain_space().domain != t.domain_space().domain)
        throw domain_mismatch("rank factorization across scalar domains");
    if (s.domain_space().chirality != t.domain_space().chirality)
        throw space_mismatch("rank factorization across chiralities");
    int rs = rank(s), rt = rank(t);
    if (rs > rt) return NoFactor{std::nullopt, std::pair<long long, long long>{rs, rt}};
    if (rs == 0) {
        LinMap p = LinMap::zero(t.codomain_space(), s.codomain_space());
        LinMap q = LinMap::zero(s.domain_space(), t.domain_space());
        FactorWitness w{WitnessForm::s_eq_ptq, false, {p}, {q}, {0},
                        {witness_flags(p)}, {witness_flags(q)}};
        if (!s.is_zero()) soundness_failure();
        return w;
    }
    Subspace im_s = image(s);
    std::vector<int> assign;
    for (int j = 0; j < rt; ++j) assign.push_back(std::min(j, rs - 1));
    LinMap p = image_collapse(t, im_s, assign);
    FactorResult inner = factor_image_subset(s, compose(p, t));
    LinMap q = witness(inner).outer.front();
    if (compose(p, compose(t, q)) != s) soundness_failure();
    FactorWitness w{WitnessForm::s_eq_ptq, false, {p}, {q}, {0},
                    {witness_flags(p)}, {witness_flags(q)}};
    return w;
}

FactorResult factor_rank_multi(const LinMap& s, const std::vector<LinMap>& gens) {
    VectorSpaceRef x = gens.empty() ? s.domain_space() : gens.front().domain_space();
    VectorSpaceRef y = gens.empty() ? s.codomain_space() : gens.front().codomain_space();
    for (const auto& g : gens) {
        if (g.domain_space() != x || g.codomain_space() != y)
            throw space_mismatch("generators need common spaces");
        if (g.domain_space().domain != s.domain_space().domain)
            throw domain_mismatch("rank factorization across scalar domains");
        if (g.domain_space().chirality != s.domain_space().chirality)
            throw space_mismatch("rank factorization across chiralities");
    }
    int rs = rank(s);
    long long total = 0;
    std::vector<int> ranks;
    for (const auto& g : gens) {
        ranks.push_back(rank(g));
        total += ranks.back();
    }
    if (rs > total) return NoFactor{std::nullopt, std::pair<long long, long long>{rs, total}};

    FactorWitness w{WitnessForm::s_eq_sum_ptq, false, {}, {}, {}, {}, {}};
    auto emit = [&w](const LinMap& p, const LinMap& q, std::size_t idx) {
        w.outer.push_back(p);
        w.inner.push_back(q);
        w.source_index.push_back(idx);
        w.outer_flags.push_back(witness_flags(p));
        w.inner_flags.push_back(witness_flags(q));
    };

    // a single generator already large enough reduces to the pairwise case
    int big = -1;
    for (std::size_t k = 0; k < gens.size(); ++k)
        if (ranks[k] >= rs) {
            big = static_cast<int>(k);
            break;
        }
    if (rs == 0 || big >= 0) {
        for (std::size_t k = 0; k < gens.size(); ++k) {
            if (static_cast<int>(k) == big && rs > 0) {
                FactorResult pairwise = factor_rank(s, gens[k]);
                const FactorWitness& single = witness(pairwise);
                emit(single.outer.front(), single.inner.front(), k);
            } else {
                emit(LinMap::zero(y, s.codomain_space()), LinMap::zero(s.domain_space(), x), k);
            }
        }
        if (!verify_factor_rank_multi(w, s, gens)) soundness_failure();
        return w;
    }

    // every generator is small: partition the image basis of s among the
    // generators, one-to-one inside each block, onto overall
    Subspace im_s = image(s);
    std::vector<LinMap> collapsed;
    long long c = 0;
    for (std::size_t k = 0; k < gens.size(); ++k) {
        std::vector<int> assign;
        for (int j = 0; j < ranks[k]; ++j)
            assign.push_back(static_cast<int>((c + j) % rs));
        c += ranks[k];
        collapsed.push_back(image_collapse(gens[k], im_s, assign));
    }
    std::vector<LinMap> products;
    for (std::size_t k = 0; k < gens.size(); ++k)
        products.push_back(compose(collapsed[k], gens[k]));
    FactorResult inner = factor_image_multi(s, products);
    const FactorWitness& iw = witness(inner);
    for (std::size_t k = 0; k < gens.size(); ++k) emit(collapsed[k], iw.outer[k], k);
    if (!verify_factor_rank_multi(w, s, gens)) soundness_failure();
    return w;
}

bool verify_factor(const FactorWitness& w, const LinMap& s, const LinMap& t) {
    if (w.outer.size() != 1) return false;
    const LinMap& p = w.outer.front();
    switch (w.form) {
        case WitnessForm::t_eq_ps:
            return w.swapped ? compose(p, t) == s : compose(p, s) == t;
        case WitnessForm::s_eq_tp:
            return w.swapped ? compose(s, p) == t : compose(t, p) == s;
        case WitnessForm::s_eq_ptq:
            return w.inner.size() == 1 && compose(p, compose(t, w.inner.front())) == s;
        default:
            return false;
    }
}

bool verify_factor_kernel_multi(const FactorWitness& w, const std::vector<LinMap>& gens,
                                const LinMap& t) {
    if (w.form != WitnessForm::t_eq_sum_ps) return false;
    std::vector<LinMap> terms;
    for (std::size_t i = 0; i < w.outer.size(); ++i)
        terms.push_back(compose(w.outer[i], gens[w.source_index[i]]));
    return sum_of_terms(terms, t.domain_space(), t.codomain_space()) == t;
}

bool verify_factor_image_multi(const FactorWitness& w, const LinMap& s,
                               const std::vector<LinMap>& gens) {
    if (w.form != WitnessForm::s_eq_sum_tp) return false;
    std::vector<LinMap> terms;
    for (std::size_t i = 0; i < w.outer.size(); ++i)
        terms.push_back(compose(gens[w.source_index[i]], w.outer[i]));
    return sum_of_terms(terms, s.domain_space(), s.codomain_space()) == s;
}

bool verify_factor_rank_multi(const FactorWitness& w, const LinMap& s,
                              const std::vector<LinMap>& gens) {
    if (w.form != WitnessForm::s_eq_sum_ptq) return false;
    if (w.outer.size() != w.inner.size()) return false;
    std::vector<LinMap> terms;
    for (std::size_t i = 0; i < w.outer.size(); ++i)
        terms.push_back(compose(w.outer[i], compose(gens[w.source_index[i]], w.inner[i])));
    return sum_of_terms(terms, s.domain_space(), s.codomain_space()) == s;
}

}  // namespace skewlin
