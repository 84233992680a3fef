#include <gtest/gtest.h>

#include <cmath>

#include "qmap/cubic_cases.hpp"
#include "qmap/error.hpp"
#include "qmap/measures.hpp"
#include "support/properties.hpp"

using qmap::Complex;
using qmap::CycScalar;
using qmap::Poly;
using qmap::QParam;

namespace {

CycScalar frac(long n, long d) { return CycScalar::fraction(n, d); }

// Euler: (x; Q)_∞ = Σ_n (−1)^n Q^{n(n−1)/2} x^n / (Q; Q)_n
double euler_series(double x, double Q) {
    double sum = 0.0, term = 1.0, qq = 1.0;
    for (int n = 0; n < 200; ++n) {
        sum += term;
        const double next = -term * qq * x / (1.0 - qq * Q);
        qq *= Q;
        term = next;
        if (std::abs(term) < 1e-300) break;
    }
    return sum;
}

}  // namespace

TEST(QPochhammer, Basics) {
    EXPECT_EQ(qmap::qpochhammer(Complex(0.3, 0.1), 0.5, 0), Complex(1.0));
    EXPECT_NEAR(std::abs(qmap::qpochhammer(Complex(0.5), 0.5, 1) - Complex(0.5)), 0.0, 1e-16);
    const Complex three = qmap::qpochhammer(Complex(2.0), 0.5, 3);
    EXPECT_NEAR(three.real(), (1 - 2.0) * (1 - 1.0) * (1 - 0.5), 1e-15);
}

TEST(QPochhammer, InfiniteProductMatchesEulerSeries) {
    for (double q : {0.5, 1.0 / 3.0, 0.7}) {
        const double Q = q * q * q;
        const Complex p = qmap::qpochhammer_inf(Complex(q * q), Q);
        EXPECT_NEAR(p.real(), euler_series(q * q, Q), 1e-15) << q;
        EXPECT_EQ(p.imag(), 0.0);
    }
    // (1/4; 1/8)_∞ from a 50-digit evaluation.
    EXPECT_NEAR(qmap::qpochhammer_inf(Complex(0.25), 0.125).real(), 0.7233205262322574, 1e-15);
}

TEST(Measure, CaseOneMatchesExactMoments) {
    const auto c = qmap::make_case(1, {{"tau", CycScalar(-1)}, {"a", CycScalar(2)}});
    const auto run = qmap::compare_case_measure(c, QParam(frac(1, 2)), 200, 10);
    ASSERT_EQ(run.rows.size(), 11u);
    EXPECT_LE(run.max_err, 1e-10);
    EXPECT_LT(run.doubling_change, 1e-13);
    EXPECT_NEAR(std::abs(run.rows[0].numeric - Complex(1.0)), 0.0, 1e-13);
    EXPECT_EQ(run.rows[0].exact, Complex(1.0));
}

TEST(Measure, CaseThirteenMatchesExactMoments) {
    const auto c = qmap::make_case(
        13, {{"tau", frac(-4, 3)}, {"c", frac(1, 3)}, {"a", frac(1, 7)}, {"b", CycScalar(216)}});
    const auto run = qmap::compare_case_measure(c, QParam(frac(1, 2)), 200, 10);
    EXPECT_LE(run.max_err, 1e-10);
    EXPECT_LT(run.doubling_change, 1e-13);
}

TEST(Measure, RejectsUnsupportedInputs) {
    const auto c4 = qmap::make_case(4, {{"tau", CycScalar(1)}, {"a", CycScalar(2)}});
    EXPECT_THROW(qmap::compare_case_measure(c4, QParam(frac(1, 2)), 200, 10), qmap::InvalidArgument);
    const auto c1 = qmap::make_case(1, {{"tau", CycScalar(-1)}, {"a", frac(2, 3)}});
    EXPECT_THROW(qmap::compare_case_measure(c1, QParam(frac(3, 2)), 200, 10), qmap::InvalidArgument);
}

TEST(Measure, PartialSumsIncreaseToFiniteLimit) {
    const auto v = qmap::case1_measure(0.5, 200);
    for (int n = 1; n <= 6; ++n) {
        const auto s = qmap::abs_partial_sums(v, n);
        ASSERT_EQ(s.size(), 200u);
        for (std::size_t i = 1; i < s.size(); ++i) EXPECT_GE(s[i], s[i - 1]);
        EXPECT_LT(s.back() - s[100], 1e-15 * s.back());
    }
    const auto w = qmap::case13_measure(0.5, 1.0 / 7.0, 1.0 / 3.0, 200);
    const auto s0 = qmap::abs_partial_sums(w, 0);
    EXPECT_TRUE(std::isfinite(s0.back()));
    EXPECT_LT(s0.back() - s0[150], 1e-12 * s0.back());
}

TEST(RootOfUnity, PowersOfQ) {
    const CycScalar q = frac(1, 2);
    for (const auto& eta : {Poly{0, -1, 1}, Poly{frac(1, 3), frac(-4, 3), 1}}) {
        for (int l = 0; l <= 20; ++l) {
            const auto rep = qmap::root_of_unity_identities(eta, q.pow(l));
            EXPECT_TRUE(rep.ok()) << l;
            EXPECT_EQ(rep.checks.size(), 3u);
        }
    }
}

TEST(RootOfUnity, VanishingSumIsNotVacuous) {
    // A p_2 whose constant term ignores a_1 breaks the vanishing sum.
    const Poly eta{frac(2, 5), frac(1, 3), 1};
    const CycScalar mu = frac(3, 7);
    const CycScalar w = CycScalar::omega();
    CycScalar s;
    for (int p = 0; p < 3; ++p) {
        const CycScalar x = w.pow(p) * mu;
        s += w.pow(p) * eta(x) * (x * x - frac(1, 3) * x);
    }
    EXPECT_FALSE(s.is_zero());
}

TEST(RootOfUnity, RandomRationalInstances) {
    const auto t = qmap::testing::omega_identities(0x0e6a, 150);
    EXPECT_EQ(t.instances, 150);
    EXPECT_TRUE(t.ok()) << t.first_failure;
}
