#include <catch2/catch.hpp>

#include <random>
#include <vector>

#include "kpd/ktheory.hpp"
#include "kpd/verify.hpp"
#include "test_support.hpp"

using kpd::binom_poly;
using kpd::ChernRank;
using kpd::eta;
using kpd::eta_inv;
using kpd::Int;
using kpd::KClass;
using kpd::Rational;
using kpd::reduce_twist;
using kpd::sl_class;
using kpd::SlCombo;
using kpd::TruncatedSeries;
using kpd::zeta;
using kpd::zeta_inv;
using kpdtest::series;

static KClass cls(int dim, std::vector<long> coords) {
    std::vector<Int> n(coords.begin(), coords.end());
    return KClass(dim, std::move(n));
}

TEST_CASE("group structure") {
    const KClass a = cls(2, {3, -1, 4});
    CHECK(a + (-a) == KClass::zero(2));
    CHECK(KClass::basis(2, 0) + KClass::basis(2, 0) == cls(2, {2, 0, 0}));

    const KClass left = KClass::basis(2, 0) - KClass::basis(2, 1);
    const KClass right = KClass::basis(2, 1) - KClass::basis(2, 2);
    CHECK(left + right == KClass::basis(2, 0) - KClass::basis(2, 2));

    CHECK(a.rank() == 6);
    CHECK_THROWS_AS(a + KClass::zero(3), kpd::DimensionMismatch);
    CHECK_THROWS_AS(KClass(2, {Int(1)}), kpd::DimensionMismatch);
    CHECK_THROWS_AS(KClass::basis(2, 3), kpd::IndexOutOfRange);
}

TEST_CASE("twist reduction through the Koszul relation") {
    CHECK(reduce_twist(1, 2) == KClass::basis(2, 1));
    CHECK(reduce_twist(2, 1) == cls(1, {-1, 2}));
    CHECK(reduce_twist(-1, 1) == cls(1, {2, -1}));
    CHECK(reduce_twist(3, 2) == cls(2, {1, -3, 3}));

    for (int d = 0; d <= 8; ++d)
        for (long m = -5; m <= d + 5; ++m)
            CHECK(eta(reduce_twist(m, d)) == binom_poly(d - m, d));
}

TEST_CASE("subspace classes") {
    CHECK(sl_class(0, 2) == KClass::basis(2, 0));
    CHECK(sl_class(1, 2) == cls(2, {1, -1, 0}));
    CHECK(sl_class(2, 2) == cls(2, {1, -2, 1}));
    CHECK(sl_class(2, 4) == cls(4, {1, -2, 1, 0, 0}));
    CHECK_THROWS_AS(sl_class(3, 2), kpd::IndexOutOfRange);
    CHECK_THROWS_AS(sl_class(-1, 2), kpd::IndexOutOfRange);
}

TEST_CASE("basis change between O and S coordinates") {
    CHECK(to_sl_basis(KClass::basis(2, 0)) == SlCombo{2, {Int(1), Int(0), Int(0)}});
    CHECK(to_o_basis(SlCombo{2, {Int(1), Int(-1), Int(0)}}) == KClass::basis(2, 1));

    std::mt19937_64 rng(61);
    std::uniform_int_distribution<int> dim(0, 10);
    std::uniform_int_distribution<long> entry(-20, 20);
    for (int i = 0; i < 200; ++i) {
        const int d = dim(rng);
        std::vector<Int> n;
        for (int m = 0; m <= d; ++m) n.emplace_back(entry(rng));
        const KClass a(d, std::move(n));
        CHECK(to_o_basis(to_sl_basis(a)) == a);
    }
}

TEST_CASE("zeta examples") {
    CHECK(zeta(KClass::zero(2)) == ChernRank::identity(2));

    const ChernRank two_bundles = zeta(KClass::basis(2, 1) + KClass::basis(2, 2));
    CHECK(two_bundles.chern() == series({"1", "-3", "2"}));
    CHECK(two_bundles.rank() == 2);

    const ChernRank s1 = zeta(KClass::basis(2, 0) - KClass::basis(2, 1));
    CHECK(s1.chern() == series({"1", "1", "1"}));
    CHECK(s1.rank() == 0);
}

TEST_CASE("eta examples") {
    CHECK(eta(KClass::basis(2, 0)) == kpdtest::poly({"1", "3/2", "1/2"}));
    CHECK(eta(KClass::zero(2)).is_zero());
    CHECK(eta(KClass::basis(2, 0) - KClass::basis(2, 1)) == kpdtest::poly({"1", "1"}));
}

TEST_CASE("zeta inverse") {
    CHECK(zeta_inv(ChernRank::identity(2)) == KClass::zero(2));
    CHECK(zeta_inv(ChernRank(series({"1", "-3", "2"}), Int(2))) == cls(2, {0, 1, 1}));

    // (1-x)^3 (1-2x)^{-1} == 1 - x + x^2 mod x^3
    CHECK(series({"1", "-1", "0"}).pow(3) * series({"1", "-2", "0"}).pow(-1) == series({"1", "-1", "1"}));
    CHECK(zeta_inv(ChernRank(series({"1", "-1", "1"}), Int(1))) == cls(2, {-1, 3, -1}));

    CHECK_THROWS_AS(ChernRank(series({"2", "0"}), Int(1)), kpd::NotAUnit);
    CHECK_THROWS_AS(ChernRank(series({"1", "1/2"}), Int(1)), kpd::NotRepresentable);
}

TEST_CASE("eta inverse") {
    CHECK(eta_inv(binom_poly(2, 2), 2) == KClass::basis(2, 0));
    CHECK(eta_inv(kpdtest::poly({"1", "1"}), 2) == KClass::basis(2, 0) - KClass::basis(2, 1));
    CHECK(eta_inv(kpdtest::poly({"1", "2"}), 2) == KClass::basis(2, 0) - KClass::basis(2, 2));
    CHECK_THROWS_AS(eta_inv(kpdtest::poly({"0", "1/2"}), 2), kpd::NotInHilbertLattice);
    CHECK_THROWS_AS(eta_inv(kpdtest::poly({"0", "0", "0", "1"}), 2), kpd::DegreeTooHigh);
}

TEST_CASE("isomorphism round trips") {
    for (int d = 0; d <= 10; ++d) {
        std::mt19937_64 rng(100 + static_cast<unsigned long>(d));
        for (int i = 0; i < 100; ++i) {
            const KClass a = kpd::verify::random_class(d, rng);
            CHECK(zeta_inv(zeta(a)) == a);
            CHECK(eta_inv(eta(a), d) == a);
        }
    }
}

TEST_CASE("zeta is a homomorphism") {
    for (int d = 0; d <= 8; ++d) {
        std::mt19937_64 rng(200 + static_cast<unsigned long>(d));
        for (int i = 0; i < 40; ++i) {
            const KClass a = kpd::verify::random_class(d, rng);
            const KClass b = kpd::verify::random_class(d, rng);
            const ChernRank z = zeta(a + b);
            CHECK(z.chern() == zeta(a).chern() * zeta(b).chern());
            CHECK(z.rank() == zeta(a).rank() + zeta(b).rank());
            CHECK(zeta(a - b) == zeta(a) - zeta(b));
        }
    }
    const ChernRank one = zeta(KClass::basis(2, 1));
    CHECK(one + (-one) == ChernRank::identity(2));
}

TEST_CASE("images separate distinct classes") {
    for (int d = 0; d <= 8; ++d) {
        std::mt19937_64 rng(300 + static_cast<unsigned long>(d));
        for (int i = 0; i < 40; ++i) {
            const KClass a = kpd::verify::random_class(d, rng);
            const KClass b = kpd::verify::random_class(d, rng);
            if (a == b) {
                CHECK(eta(a) == eta(b));
                continue;
            }
            CHECK_FALSE(eta(a) == eta(b));
            CHECK_FALSE(zeta(a) == zeta(b));
        }
    }
}

TEST_CASE("rank separates trivial Chern parts") {
    const KClass unit = KClass::basis(3, 0);
    for (long r = 2; r <= 5; ++r) {
        const ChernRank zr = zeta(Int(r) * unit);
        CHECK(zr.chern() == TruncatedSeries<Rational>::one(3));
        CHECK(zr.rank() == r);
        CHECK_FALSE(zr == zeta(unit));
    }
}
