#include <gtest/gtest.h>

#include "qmap/error.hpp"
#include "qmap/poly.hpp"
#include "support/properties.hpp"
#include "support/random.hpp"

using qmap::CycScalar;
using qmap::Poly;
using qmap::QParam;

namespace {

CycScalar frac(long n, long d) { return CycScalar::fraction(n, d); }

}  // namespace

TEST(Poly, TrimsTrailingZeros) {
    const Poly p{1, 2, 0, 0};
    EXPECT_EQ(p.degree(), 1);
    EXPECT_TRUE(Poly({0, 0}).is_zero());
    EXPECT_EQ(Poly{}.degree(), Poly::kZeroDegree);
    EXPECT_EQ((Poly{1, 1} - Poly{0, 1}), Poly{1});
}

TEST(Poly, GcdOfSquareDifference) {
    EXPECT_EQ(qmap::gcd(Poly{-1, 0, 1}, Poly{-1, 1}), (Poly{-1, 1}));
    EXPECT_EQ(qmap::gcd(Poly{-2, 0, 2}, Poly{}), (Poly{-1, 0, 1}));
    EXPECT_TRUE(qmap::gcd(Poly{}, Poly{}).is_zero());
}

TEST(Poly, DivremCubeBySquarePlusOne) {
    const auto dr = qmap::divrem(Poly{0, 0, 0, 1}, Poly{1, 0, 1});
    EXPECT_EQ(dr.quotient, (Poly{0, 1}));
    EXPECT_EQ(dr.remainder, (Poly{0, -1}));
    EXPECT_THROW(qmap::divrem(Poly{1}, Poly{}), qmap::DivisionByZero);
    EXPECT_THROW(qmap::exact_div(Poly{1, 0, 1}, Poly{0, 1}), qmap::InconsistencyError);
}

TEST(Poly, ComposeWithCube) {
    EXPECT_EQ(qmap::compose(Poly{1, 0, 1}, Poly{0, 0, 0, 1}), (Poly{1, 0, 0, 0, 0, 0, 1}));
    EXPECT_EQ(qmap::power_substitute(Poly{1, 0, 1}, 3), (Poly{1, 0, 0, 0, 0, 0, 1}));
}

TEST(Poly, HahnExamples) {
    const QParam q(frac(1, 2));
    EXPECT_TRUE(qmap::hahn(Poly{5}, q).is_zero());
    EXPECT_EQ(qmap::hahn(Poly{0, 0, 1}, q), (Poly{0, frac(3, 2)}));
    EXPECT_EQ(qmap::hahn(Poly{0, 1, 0, 1}, q), (Poly{1, 0, frac(7, 4)}));
}

TEST(Poly, HahnMatchesDifferenceQuotient) {
    // ((f(qx) − f(x)) / ((q − 1)x) evaluated at sample points.
    qmap::testing::Gen g(21);
    for (int i = 0; i < 100; ++i) {
        const QParam q = g.qparam();
        const Poly f = g.poly(8);
        const Poly h = qmap::hahn(f, q);
        for (int x = 1; x <= 4; ++x) {
            const CycScalar xs(x);
            EXPECT_EQ(h(xs), (f(q.value() * xs) - f(xs)) / ((q.value() - 1) * xs));
        }
    }
}

TEST(Poly, HahnQLeibniz) {
    // H_q(x f) = q x H_q f + f
    qmap::testing::Gen g(22);
    for (int i = 0; i < 100; ++i) {
        const QParam q = g.qparam();
        const Poly f = g.poly(8);
        EXPECT_EQ(qmap::hahn(Poly{0, 1} * f, q), (Poly{0, q.value()} * qmap::hahn(f, q) + f));
    }
}

TEST(Poly, Theta0) {
    EXPECT_EQ(qmap::theta0(Poly{5, 3, 1}), (Poly{3, 1}));
    EXPECT_TRUE(qmap::theta0(Poly{7}).is_zero());
    qmap::testing::Gen g(23);
    for (int i = 0; i < 100; ++i) {
        const Poly f = g.poly(10);
        EXPECT_EQ((Poly{0, 1} * qmap::theta0(f) + Poly::constant(f(CycScalar(0)))), f);
    }
}

TEST(Poly, Dilation) {
    const CycScalar d = frac(-2, 3);
    EXPECT_EQ(qmap::dilate(Poly{0, 0, 1}, d), (Poly{0, 0, d * d}));
    // q²·h_{1/q}(x(x − 1/(bq))) = x(x − 1/b)
    const CycScalar q = frac(1, 2), b = frac(1, 5);
    const Poly A = Poly{0, 1} * Poly{-(b * q).inv(), 1};
    EXPECT_EQ(qmap::dilate(A, q.inv()) * (q * q), (Poly{0, 1} * Poly{-b.inv(), 1}));
    qmap::testing::Gen g(24);
    for (int i = 0; i < 100; ++i) {
        const Poly f = g.poly(8);
        const CycScalar s = g.nonzero_scalar();
        EXPECT_EQ(qmap::dilate(qmap::dilate(f, s), s.inv()), f);
    }
}

TEST(Poly, GcdDividesBothAndIsSymmetric) {
    qmap::testing::Gen g(25);
    for (int i = 0; i < 100; ++i) {
        const Poly common = g.poly(2);
        const Poly a = g.poly(4) * common, b = g.poly(4) * common;
        const Poly ab = qmap::gcd(a, b);
        EXPECT_EQ(ab.degree(), qmap::gcd(b, a).degree());
        if (ab.is_zero()) continue;
        EXPECT_TRUE(ab.leading().is_one());
        EXPECT_TRUE(qmap::divrem(a, ab).remainder.is_zero());
        EXPECT_TRUE(qmap::divrem(b, ab).remainder.is_zero());
        if (!common.is_zero()) {
            EXPECT_TRUE(qmap::divrem(ab, qmap::monic(common)).remainder.is_zero());
        }
    }
}

TEST(Poly, DivremIdentity) {
    qmap::testing::Gen g(26);
    for (int i = 0; i < 100; ++i) {
        const Poly a = g.poly(9), b = g.poly_of_degree(static_cast<int>(g.integer(0, 4)));
        const auto dr = qmap::divrem(a, b);
        EXPECT_EQ(dr.quotient * b + dr.remainder, a);
        EXPECT_LT(dr.remainder.degree(), b.degree());
    }
}

TEST(Poly, PowerSubstitutionDegree) {
    qmap::testing::Gen g(27);
    for (int i = 0; i < 50; ++i) {
        const Poly f = g.poly_of_degree(static_cast<int>(g.integer(0, 6)));
        const int k = static_cast<int>(g.integer(1, 4));
        EXPECT_EQ(qmap::power_substitute(f, k).degree(), k * f.degree());
        EXPECT_EQ(qmap::power_substitute(f, k), qmap::compose(f, Poly::monomial(1, k)));
    }
}

TEST(SimpleSet, FourthPowerOverMonomials) {
    const std::vector<Poly> basis{Poly{1}, Poly{0, 1}, Poly{0, 0, 1}};
    const auto parts = qmap::simple_set_decompose(Poly::monomial(1, 4), basis, 3);
    ASSERT_EQ(parts.size(), 3u);
    EXPECT_TRUE(parts[0].is_zero());
    EXPECT_EQ(parts[1], (Poly{0, 1}));
    EXPECT_TRUE(parts[2].is_zero());
}

TEST(SimpleSet, CubeOverShiftedBasis) {
    const CycScalar tau = frac(-4, 3);
    const std::vector<Poly> basis{Poly{1}, Poly{-tau, 1}, Poly{frac(2, 7), frac(1, 3), 1}};
    const Poly f = Poly::monomial(1, 3);
    const auto parts = qmap::simple_set_decompose(f, basis, 3);
    Poly back;
    for (int j = 0; j < 3; ++j) back += basis[j] * qmap::power_substitute(parts[j], 3);
    EXPECT_EQ(back, f);
    EXPECT_EQ(parts[0].degree(), 1);
}

TEST(SimpleSet, RejectsNonSimpleBasis) {
    const std::vector<Poly> basis{Poly{1}, Poly{0, 0, 1}, Poly{0, 1}};
    EXPECT_THROW(qmap::simple_set_decompose(Poly{1, 1}, basis, 3), qmap::InvalidArgument);
    const std::vector<Poly> short_basis{Poly{1}, Poly{0, 1}};
    EXPECT_THROW(qmap::simple_set_decompose(Poly{1, 1}, short_basis, 3), qmap::InvalidArgument);
}

TEST(SimpleSet, RandomRoundTrip) {
    const auto t = qmap::testing::simple_set_round_trip(0x5151, 200);
    EXPECT_EQ(t.instances, 200);
    EXPECT_TRUE(t.ok()) << t.first_failure;
}
