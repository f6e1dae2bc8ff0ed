#include <doctest.h>

#include "skewlin/duality.hpp"
#include "skewlin/factor.hpp"
#include "skewlin/random.hpp"
#include "support.hpp"

using namespace skewlin;
using namespace skewlin::testsupport;

namespace {

VectorSpaceRef rspace(const ScalarDomain& d, int dim) {
    return VectorSpaceRef{d, dim, Chirality::right};
}

Scalar qi() { return Scalar::quaternion(Rat(0), Rat(1), Rat(0), Rat(0)); }
Scalar qj() { return Scalar::quaternion(Rat(0), Rat(0), Rat(1), Rat(0)); }
Scalar qk() { return Scalar::quaternion(Rat(0), Rat(0), Rat(0), Rat(1)); }

}  // namespace

TEST_SUITE_BEGIN("factor");

TEST_CASE("kernel-subset factorization on the worked examples") {
    auto v2 = rspace(ScalarDomain::gf(2), 2);
    LinMap s = rmap(v2, v2, {{1, 0}, {0, 0}});
    LinMap t = rmap(v2, v2, {{1, 0}, {1, 0}});
    FactorResult r = factor_kernel_subset(s, t);
    REQUIRE(has_witness(r));
    const LinMap& p = witness(r).outer.front();
    CHECK(compose(p, s) == t);
    CHECK(p == rmap(v2, v2, {{1, 0}, {1, 0}}));

    FactorResult self = factor_kernel_subset(s, s);
    REQUIRE(has_witness(self));
    CHECK(compose(witness(self).outer.front(), s) == s);

    // over the quaternions in one dimension the witness is forced: t * s^{-1}
    auto h1 = rspace(ScalarDomain::quaternions(), 1);
    LinMap sj(h1, h1, Mat(1, 1, qj()));
    LinMap ti(h1, h1, Mat(1, 1, qi()));
    FactorResult qr = factor_kernel_subset(sj, ti);
    REQUIRE(has_witness(qr));
    CHECK(witness(qr).outer.front() == LinMap(h1, h1, Mat(1, 1, -qk())));
}

TEST_CASE("kernel-subset refusals carry a checkable certificate") {
    auto v2 = rspace(ScalarDomain::gf(2), 2);
    LinMap s = LinMap::zero(v2, v2);
    LinMap t = LinMap::identity(v2);
    FactorResult r = factor_kernel_subset(s, t);
    REQUIRE_FALSE(has_witness(r));
    const NoFactor& nf = refusal(r);
    REQUIRE(nf.certificate.has_value());
    CHECK(s.apply(*nf.certificate).is_zero());
    CHECK_FALSE(t.apply(*nf.certificate).is_zero());
}

TEST_CASE("kernel-equal factorization and its flags") {
    auto v2 = rspace(ScalarDomain::gf(2), 2);
    LinMap s = rmap(v2, v2, {{1, 0}, {0, 0}});
    LinMap t = rmap(v2, v2, {{1, 0}, {1, 0}});
    FactorResult r = factor_kernel_equal(s, t);
    REQUIRE(has_witness(r));
    const FactorWitness& w = witness(r);
    CHECK_FALSE(w.swapped);
    CHECK(compose(w.outer.front(), s) == t);
    CHECK(w.outer_flags.front().invertible);
    CHECK(rank(w.outer.front()) == 2);

    FactorResult self = factor_kernel_equal(s, s);
    REQUIRE(has_witness(self));
    CHECK(witness(self).outer_flags.front().invertible);

    // unequal cokernels: injective witness into the bigger codomain
    auto v1 = rspace(ScalarDomain::gf(2), 1);
    LinMap s2 = rmap(v2, v1, {{1, 0}});
    LinMap t2 = rmap(v2, v2, {{1, 0}, {0, 0}});
    FactorResult r2 = factor_kernel_equal(s2, t2);
    REQUIRE(has_witness(r2));
    const FactorWitness& w2 = witness(r2);
    CHECK_FALSE(w2.swapped);
    CHECK(compose(w2.outer.front(), s2) == t2);
    CHECK(w2.outer_flags.front().injective);
    CHECK_FALSE(w2.outer_flags.front().invertible);

    // and the mirrored direction when the first argument has more cokernel
    FactorResult r3 = factor_kernel_equal(t2, s2);
    REQUIRE(has_witness(r3));
    CHECK(witness(r3).swapped);
    CHECK(compose(witness(r3).outer.front(), s2) == t2);

    LinMap other = rmap(v2, v2, {{0, 1}, {0, 0}});
    CHECK_FALSE(has_witness(factor_kernel_equal(s, other)));
}

TEST_CASE("kernel-multi factorization") {
    auto v2 = rspace(ScalarDomain::gf(2), 2);
    LinMap s1 = rmap(v2, v2, {{1, 0}, {0, 0}});
    LinMap s2 = rmap(v2, v2, {{0, 0}, {0, 1}});
    LinMap id = LinMap::identity(v2);
    FactorResult r = factor_kernel_multi({s1, s2}, id);
    REQUIRE(has_witness(r));
    CHECK(verify_factor_kernel_multi(witness(r), {s1, s2}, id));

    // a single generator reduces to the pairwise form
    LinMap t = rmap(v2, v2, {{1, 0}, {1, 0}});
    FactorResult single = factor_kernel_multi({s1}, t);
    REQUIRE(has_witness(single));
    CHECK(compose(witness(single).outer.front(), s1) == t);

    // all-zero generators cannot produce a nonzero map
    FactorResult no = factor_kernel_multi({LinMap::zero(v2, v2)}, id);
    REQUIRE_FALSE(has_witness(no));
    REQUIRE(refusal(no).certificate.has_value());
    CHECK_FALSE(id.apply(*refusal(no).certificate).is_zero());
}

TEST_CASE("image-subset factorization on the worked examples") {
    auto v1 = rspace(ScalarDomain::gf(2), 1);
    auto v2 = rspace(ScalarDomain::gf(2), 2);
    LinMap s = rmap(v1, v2, {{1}, {1}});
    LinMap t = rmap(v2, v2, {{1, 0}, {1, 0}});
    FactorResult r = factor_image_subset(s, t);
    REQUIRE(has_witness(r));
    CHECK(compose(t, witness(r).outer.front()) == s);
    CHECK(witness(r).outer.front() == rmap(v1, v2, {{1}, {0}}));

    LinMap z = LinMap::zero(v2, v2);
    FactorResult rz = factor_image_subset(z, t);
    REQUIRE(has_witness(rz));
    CHECK(witness(rz).outer.front().is_zero());

    FactorResult self = factor_image_subset(t, t);
    REQUIRE(has_witness(self));
    CHECK(compose(t, witness(self).outer.front()) == t);
}

TEST_CASE("image-equal factorization and the invertible case") {
    auto v2 = rspace(ScalarDomain::gf(2), 2);
    LinMap s = rmap(v2, v2, {{1, 0}, {1, 0}});
    LinMap t = rmap(v2, v2, {{0, 1}, {0, 1}});
    FactorResult r = factor_image_equal(s, t);
    REQUIRE(has_witness(r));
    const FactorWitness& w = witness(r);
    CHECK(w.swapped);  // equal kernel dims resolve to t = s*P
    CHECK(compose(s, w.outer.front()) == t);
    CHECK(w.outer_flags.front().invertible);
    CHECK(w.outer.front() == rmap(v2, v2, {{0, 1}, {1, 0}}));

    FactorResult self = factor_image_equal(s, s);
    REQUIRE(has_witness(self));
    CHECK(compose(s, witness(self).outer.front()) == s);
    CHECK(witness(self).outer_flags.front().invertible);

    LinMap other = rmap(v2, v2, {{1, 0}, {0, 0}});
    FactorResult no = factor_image_equal(s, other);
    REQUIRE_FALSE(has_witness(no));
    // certificate escapes one of the two images; check it brute-force
    const Vec& cert = *refusal(no).certificate;
    bool in_s = image(s).contains(cert);
    bool in_other = image(other).contains(cert);
    CHECK(in_s != in_other);
}

TEST_CASE("image-multi factorization") {
    auto v2 = rspace(ScalarDomain::gf(2), 2);
    LinMap t1 = rmap(v2, v2, {{1, 0}, {0, 0}});
    LinMap t2 = rmap(v2, v2, {{0, 0}, {0, 1}});
    LinMap id = LinMap::identity(v2);
    FactorResult r = factor_image_multi(id, {t1, t2});
    REQUIRE(has_witness(r));
    CHECK(verify_factor_image_multi(witness(r), id, {t1, t2}));

    LinMap s = rmap(v2, v2, {{0, 1}, {0, 0}});
    FactorResult single = factor_image_multi(s, {t1});
    REQUIRE(has_witness(single));
    CHECK(compose(t1, witness(single).outer.front()) == s);

    // image escaping the joint image
    FactorResult no = factor_image_multi(id, {t1});
    REQUIRE_FALSE(has_witness(no));
    const Vec& cert = *refusal(no).certificate;
    CHECK(image(id).contains(cert));
    CHECK_FALSE(image(t1).contains(cert));
}

TEST_CASE("rank factorization on the worked examples") {
    auto d2 = rspace(ScalarDomain::rationals(), 2);
    LinMap s = rmap(d2, d2, {{2, 0}, {0, 0}});
    LinMap t = rmap(d2, d2, {{0, 1}, {1, 0}});
    FactorResult r = factor_rank(s, t);
    REQUIRE(has_witness(r));
    const FactorWitness& w = witness(r);
    CHECK(compose(w.outer.front(), compose(t, w.inner.front())) == s);

    LinMap z = LinMap::zero(d2, d2);
    FactorResult rz = factor_rank(z, t);
    REQUIRE(has_witness(rz));
    CHECK(witness(rz).outer.front().is_zero());
    CHECK(witness(rz).inner.front().is_zero());

    FactorResult no = factor_rank(t, s);  // rank 2 > rank 1
    REQUIRE_FALSE(has_witness(no));
    REQUIRE(refusal(no).rank_certificate.has_value());
    CHECK(refusal(no).rank_certificate->first == 2);
    CHECK(refusal(no).rank_certificate->second == 1);
}

TEST_CASE("rank-multi factorization") {
    auto v2 = rspace(ScalarDomain::gf(2), 2);
    LinMap id = LinMap::identity(v2);
    LinMap t1 = rmap(v2, v2, {{1, 0}, {0, 0}});
    FactorResult r = factor_rank_multi(id, {t1, t1});
    REQUIRE(has_witness(r));
    CHECK(verify_factor_rank_multi(witness(r), id, {t1, t1}));

    FactorResult single = factor_rank_multi(t1, {id});
    REQUIRE(has_witness(single));
    CHECK(verify_factor_rank_multi(witness(single), t1, {id}));

    auto v3 = rspace(ScalarDomain::gf(3), 3);
    LinMap id3 = LinMap::identity(v3);
    LinMap r1 = rmap(v3, v3, {{1, 0, 0}, {0, 0, 0}, {0, 0, 0}});
    FactorResult no = factor_rank_multi(id3, {r1, r1});
    REQUIRE_FALSE(has_witness(no));
    CHECK(refusal(no).rank_certificate->first == 3);
    CHECK(refusal(no).rank_certificate->second == 2);
}

TEST_CASE("completeness against the inclusion predicates at desk scale") {
    // over GF(2) in dimensions <= 2, existence decided by the library must
    // match the inclusion predicate computed by enumerating domain vectors
    auto d = ScalarDomain::gf(2);
    for (int nv : {1, 2})
        for (int nw : {1, 2})
            for (int nz : {1, 2}) {
                auto v = rspace(d, nv);
                auto w = rspace(d, nw);
                auto z = rspace(d, nz);
                for (const LinMap& s : all_linmaps(v, w))
                    for (const LinMap& t : all_linmaps(v, z)) {
                        bool included = true;
                        for (const Vec& x : all_vectors(v))
                            if (s.apply(x).is_zero() && !t.apply(x).is_zero()) included = false;
                        CHECK(has_witness(factor_kernel_subset(s, t)) == included);
                    }
            }
}

TEST_CASE("brute-force witness search agrees with the decision") {
    // exhaustive search over all candidate P for tiny shapes
    auto d = ScalarDomain::gf(2);
    auto v = rspace(d, 2);
    for (const LinMap& s : all_linmaps(v, v))
        for (const LinMap& t : all_linmaps(v, v)) {
            bool found = false;
            for (const LinMap& p : all_linmaps(v, v))
                if (compose(p, s) == t) found = true;
            CHECK(has_witness(factor_kernel_subset(s, t)) == found);

            bool found_img = false;
            for (const LinMap& p : all_linmaps(v, v))
                if (compose(t, p) == s) found_img = true;
            CHECK(has_witness(factor_image_subset(s, t)) == found_img);
        }
}

TEST_CASE("soundness and flags on random instances") {
    for (const auto& dom : all_domains()) {
        for (Chirality side : both_sides()) {
            CAPTURE(dom.name());
            Rng rng(41);
            for (int iter = 0; iter < 30; ++iter) {
                VectorSpaceRef v{dom, 3, side};
                VectorSpaceRef w{dom, 2, side};
                VectorSpaceRef z{dom, 3, side};
                LinMap s = random_linmap(rng, v, w);
                LinMap t = random_linmap(rng, v, z);
                FactorResult r = factor_kernel_subset(s, t);
                if (has_witness(r)) {
                    CHECK(verify_factor(witness(r), s, t));
                    const auto& fl = witness(r).outer_flags.front();
                    const auto& p = witness(r).outer.front();
                    CHECK(fl.injective == (rank(p) == p.domain_space().dim));
                    CHECK(fl.surjective == (rank(p) == p.codomain_space().dim));
                }
                LinMap s2 = random_linmap(rng, v, w);
                LinMap t2 = random_linmap(rng, z, w);
                FactorResult r2 = factor_image_subset(s2, t2);
                if (has_witness(r2)) CHECK(verify_factor(witness(r2), s2, t2));
                LinMap s3 = random_linmap(rng, v, w);
                LinMap t3 = random_linmap(rng, z, z);
                FactorResult r3 = factor_rank(s3, t3);
                if (has_witness(r3)) CHECK(verify_factor(witness(r3), s3, t3));
            }
        }
    }
}

TEST_CASE("equivalence chains between kernel inclusion, adjoint images, and witnesses") {
    for (const auto& dom : all_domains()) {
        for (Chirality side : both_sides()) {
            CAPTURE(dom.name());
            Rng rng(43);
            for (int iter = 0; iter < 25; ++iter) {
                VectorSpaceRef v{dom, 3, side};
                VectorSpaceRef w{dom, 2, side};
                VectorSpaceRef z{dom, 2, side};
                std::vector<LinMap> gens;
                for (int i = 0; i < 2; ++i) gens.push_back(random_linmap(rng, v, w));
                LinMap t = random_linmap(rng, v, z);

                bool kernel_incl = subspace_leq(family_kernel(v, gens), kernel(t));
                std::vector<LinMap> adj;
                for (const auto& g : gens) adj.push_back(adjoint(g));
                bool adjoint_incl =
                    subspace_leq(image(adjoint(t)), family_image(dual(v), adj));
                bool witness_exists = has_witness(factor_kernel_multi(gens, t));
                CHECK(kernel_incl == adjoint_incl);
                CHECK(adjoint_incl == witness_exists);

                // the image-side chain
                std::vector<LinMap> tgens;
                for (int i = 0; i < 2; ++i) tgens.push_back(random_linmap(rng, z, w));
                LinMap s = random_linmap(rng, v, w);
                bool image_incl = subspace_leq(image(s), family_image(w, tgens));
                std::vector<LinMap> tadj;
                for (const auto& g : tgens) tadj.push_back(adjoint(g));
                bool adj_kernel_incl =
                    subspace_leq(family_kernel(dual(w), tadj), kernel(adjoint(s)));
                bool w_exists = has_witness(factor_image_multi(s, tgens));
                CHECK(image_incl == adj_kernel_incl);
                CHECK(adj_kernel_incl == w_exists);
            }
        }
    }
}

TEST_CASE("kernel-dimension comparison decides rank factorization of co-domained maps") {
    for (const auto& dom : all_domains()) {
        Rng rng(47);
        for (int iter = 0; iter < 25; ++iter) {
            VectorSpaceRef v{dom, 3, Chirality::right};
            VectorSpaceRef w{dom, 2, Chirality::right};
            LinMap s = random_linmap(rng, v, w);
            LinMap t = random_linmap(rng, v, w);
            bool by_kernels = kernel(s).dim() >= kernel(t).dim();
            CHECK(has_witness(factor_rank(s, t)) == by_kernels);
        }
    }
}

TEST_CASE("both cokernel branches of the equal-kernel case run") {
    // deliberately unbalanced codomains drive each branch of the dimension
    // comparison
    auto d = ScalarDomain::gf(3);
    auto v = rspace(d, 2);
    auto w1 = rspace(d, 1);
    auto w3 = rspace(d, 3);
    LinMap small = rmap(v, w1, {{1, 0}});
    LinMap big = rmap(v, w3, {{1, 0}, {0, 0}, {0, 0}});
    FactorResult fwd = factor_kernel_equal(small, big);
    REQUIRE(has_witness(fwd));
    CHECK_FALSE(witness(fwd).swapped);
    CHECK(witness(fwd).outer_flags.front().injective);
    FactorResult bwd = factor_kernel_equal(big, small);
    REQUIRE(has_witness(bwd));
    CHECK(witness(bwd).swapped);
}

TEST_SUITE_END();
