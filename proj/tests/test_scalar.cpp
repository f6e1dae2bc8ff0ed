#include <doctest.h>

#include "skewlin/random.hpp"
#include "skewlin/scalar.hpp"
#include "support.hpp"

using namespace skewlin;
using namespace skewlin::testsupport;

TEST_SUITE_BEGIN("scalar");

TEST_CASE("prime field construction accepts primes only") {
    CHECK_NOTHROW(ScalarDomain::gf(2));
    CHECK_NOTHROW(ScalarDomain::gf(65521));
    CHECK_THROWS_AS(ScalarDomain::gf(1), std::invalid_argument);
    CHECK_THROWS_AS(ScalarDomain::gf(4), std::invalid_argument);
    CHECK_THROWS_AS(ScalarDomain::gf(91), std::invalid_argument);  // 7 * 13
}

TEST_CASE("field arithmetic on the worked values") {
    auto g5 = ScalarDomain::gf(5);
    CHECK(Scalar::gf(5, 3) + Scalar::gf(5, 4) == Scalar::gf(5, 2));
    CHECK(Scalar::gf(7, 3) * Scalar::gf(7, 5) == Scalar::gf(7, 1));

    // inverse of 3 mod 5, frozen from a residue scan
    std::uint64_t expected = 0;
    for (std::uint64_t x = 1; x < 5; ++x)
        if (3 * x % 5 == 1) expected = x;
    CHECK(expected == 2);
    CHECK(Scalar::gf(5, 3).inverse() == Scalar::gf(5, expected));
    CHECK(Scalar::zero(g5).is_zero());
}

TEST_CASE("rational arithmetic is canonical") {
    CHECK(Scalar::rational(Rat(1, 2)) + Scalar::rational(Rat(1, 3)) ==
          Scalar::rational(Rat(5, 6)));
    CHECK(Scalar::rational(Rat(-2, 3)).inverse() == Scalar::rational(Rat(-3, 2)));
    CHECK(Scalar::rational(Rat(2, 4)).str() == "1/2");
    CHECK(Scalar::rational(Rat(4, 2)).str() == "2");
}

TEST_CASE("quaternion multiplication table") {
    auto qi = Scalar::quaternion(Rat(0), Rat(1), Rat(0), Rat(0));
    auto qj = Scalar::quaternion(Rat(0), Rat(0), Rat(1), Rat(0));
    auto qk = Scalar::quaternion(Rat(0), Rat(0), Rat(0), Rat(1));
    auto one = Scalar::one(ScalarDomain::quaternions());
    CHECK(qi * qj == qk);
    CHECK(qj * qi == -qk);
    CHECK(qj * qk == qi);
    CHECK(qk * qj == -qi);
    CHECK(qk * qi == qj);
    CHECK(qi * qk == -qj);
    CHECK(qi * qi == -one);
    CHECK(qj * qj == -one);
    CHECK(qk * qk == -one);
    CHECK(qi * qj != qj * qi);  // the noncommutativity witness pair

    // componentwise sum: (1+i) + (j-i) = 1+j
    auto a = one + qi;
    auto b = qj - qi;
    CHECK(a + b == one + qj);

    // inv(j) = -j since N(j)=1 and conj(j) = -j
    CHECK(qj.inverse() == -qj);
}

TEST_CASE("ring laws hold on random triples in every domain") {
    for (const auto& dom : all_domains()) {
        CAPTURE(dom.name());
        Rng rng(7);
        for (int iter = 0; iter < 200; ++iter) {
            Scalar a = random_scalar(rng, dom);
            Scalar b = random_scalar(rng, dom);
            Scalar c = random_scalar(rng, dom);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK((a + b) * c == a * c + b * c);
            if (!a.is_zero()) {
                CHECK(a * a.inverse() == Scalar::one(dom));
                CHECK(a.inverse() * a == Scalar::one(dom));
            }
            if (dom.commutative()) CHECK(a * b == b * a);
        }
    }
}

TEST_CASE("zero has no inverse") {
    for (const auto& dom : all_domains())
        CHECK_THROWS_AS(Scalar::zero(dom).inverse(), division_by_zero);
}

TEST_CASE("domain mismatch is rejected") {
    CHECK_THROWS_AS(Scalar::gf(2, 1) + Scalar::gf(3, 1), domain_mismatch);
    CHECK_THROWS_AS(Scalar::gf(2, 1) * Scalar::rational(Rat(1)), domain_mismatch);
    CHECK_FALSE(Scalar::gf(2, 1) == Scalar::gf(3, 1));
}

TEST_CASE("literals round-trip through parse and print") {
    for (const auto& dom : all_domains()) {
        CAPTURE(dom.name());
        Rng rng(11);
        for (int iter = 0; iter < 200; ++iter) {
            Scalar a = random_scalar(rng, dom);
            CHECK(Scalar::parse(dom, a.str()) == a);
        }
    }
    auto quat = ScalarDomain::quaternions();
    CHECK(Scalar::parse(quat, "1/2+3i-1j+0k") ==
          Scalar::quaternion(Rat(1, 2), Rat(3), Rat(-1), Rat(0)));
    CHECK(Scalar::parse(quat, "i") == Scalar::quaternion(Rat(0), Rat(1), Rat(0), Rat(0)));
    CHECK(Scalar::parse(quat, "-j") == Scalar::quaternion(Rat(0), Rat(0), Rat(-1), Rat(0)));
    CHECK(Scalar::parse(ScalarDomain::rationals(), "-2/3") == Scalar::rational(Rat(-2, 3)));
    CHECK(Scalar::parse(ScalarDomain::gf(5), "12") == Scalar::gf(5, 2));
    CHECK_THROWS_AS(Scalar::parse(ScalarDomain::rationals(), "1/0"), parse_error);
    CHECK_THROWS_AS(Scalar::parse(quat, "1+"), parse_error);
    CHECK_THROWS_AS(Scalar::parse(ScalarDomain::gf(5), "x"), parse_error);
}

TEST_SUITE_END();
