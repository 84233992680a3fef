#include <gtest/gtest.h>

#include "qmap/classifier.hpp"
#include "qmap/cubic_cases.hpp"
#include "qmap/error.hpp"
#include "qmap/mapping.hpp"
#include "support/chain.hpp"
#include "support/oracles.hpp"
#include "support/random.hpp"

using qmap::ACDTriple;
using qmap::CycScalar;
using qmap::PearsonPair;
using qmap::Poly;
using qmap::QParam;

namespace {

CycScalar frac(long n, long d) { return CycScalar::fraction(n, d); }

ACDTriple scaled(const ACDTriple& t, const Poly& f) { return {t.A * f, t.C * f, t.D * f}; }

}  // namespace

TEST(ReductionChain, ClassOneLaguerreLift) {
    const CycScalar q = frac(1, 2), tau(-1), a(2);
    const auto c = qmap::testing::laguerre_chain(q, tau, a);
    const Poly z{0, 1};
    const Poly z2 = z * z;
    EXPECT_EQ(c.mapped, scaled(c.step1, z2));
    EXPECT_EQ(c.step1, scaled(c.step2, z));
    EXPECT_EQ(c.step2, scaled(c.step3, z));
    EXPECT_EQ(c.step3, scaled(c.step4, Poly{tau, 1}));

    const auto red = qmap::reduce_acd(c.mapped);
    EXPECT_EQ(red.triple, c.step4);
    Poly removed{1};
    for (const auto& f : red.trace) {
        EXPECT_TRUE(f.leading().is_one());
        removed = removed * f;
    }
    EXPECT_EQ(removed, Poly::monomial(1, 4) * (Poly{tau, 1}));
    EXPECT_EQ(qmap::class_from_acd(red.triple), 1);

    const auto pair = qmap::phi_psi_from_acd(red.triple, QParam(q));
    EXPECT_EQ(pair.phi, Poly{1});
    EXPECT_EQ(pair.psi, q.inv() * (Poly{-tau * tau, tau, (q - 1).inv()}));
}

TEST(ReductionChain, SecondStepHoldsForGenericA) {
    // τ³ ≠ −1 keeps z + τ out of C.
    const CycScalar q = frac(1, 2), tau(1), a = frac(1, 7);
    const auto c = qmap::testing::laguerre_chain(q, tau, a);
    EXPECT_EQ(c.mapped, scaled(c.step1, Poly{0, 0, 1}));
    EXPECT_EQ(c.step1, scaled(c.step2, Poly{0, 1}));
    const auto red = qmap::reduce_acd(c.mapped);
    EXPECT_EQ(red.triple, c.step2);
    EXPECT_EQ(qmap::class_from_acd(red.triple), 3);
}

TEST(ReductionChain, StopsAtClassTwoWhenTauCubedDiffers) {
    const CycScalar q = frac(1, 2), tau(1), a(2);
    const auto c = qmap::testing::laguerre_chain(q, tau, a);
    const auto red = qmap::reduce_acd(c.mapped);
    EXPECT_EQ(red.triple, c.step3);
    EXPECT_EQ(qmap::class_from_acd(red.triple), 2);
    const auto pair = qmap::phi_psi_from_acd(red.triple, QParam(q));
    EXPECT_EQ(pair.phi, (Poly{tau / q, 1}));
    EXPECT_EQ(pair.psi, (q.pow(-2) / (q - 1)) * (Poly{q * q - 1, 0, tau * q, 1}));
}

TEST(Reduce, CoprimeInputOnlyNormalized) {
    const ACDTriple t{Poly{1, 2}, Poly{3, 0, 1}, Poly{5}};
    const auto red = qmap::reduce_acd(t);
    EXPECT_TRUE(red.trace.empty());
    EXPECT_EQ(red.triple, (ACDTriple{Poly{frac(1, 2), 1}, Poly{frac(3, 2), 0, frac(1, 2)}, Poly{frac(5, 2)}}));
}

TEST(Reduce, RemovesConstructedFactor) {
    qmap::testing::Gen g(71);
    for (int i = 0; i < 50; ++i) {
        ACDTriple t{g.poly_of_degree(2), g.poly_of_degree(3), g.poly_of_degree(1)};
        const auto base = qmap::reduce_acd(t);
        const Poly f = Poly{-1, 1} * Poly{-1, 1};
        const auto red = qmap::reduce_acd(scaled(t, f * Poly{g.nonzero_scalar()}));
        EXPECT_EQ(red.triple, base.triple);
        // Idempotent, scale invariant, and the result has constant gcd.
        EXPECT_EQ(qmap::reduce_acd(red.triple).triple, red.triple);
        EXPECT_TRUE(qmap::reduce_acd(red.triple).trace.empty());
        EXPECT_EQ(qmap::gcd(qmap::gcd(red.triple.A, red.triple.C), red.triple.D).degree(), 0);
        const CycScalar s = g.nonzero_scalar();
        EXPECT_EQ(qmap::reduce_acd(scaled(t, Poly{s})).triple, base.triple);
    }
}

TEST(ClassFromAcd, ClassicalTriplesHaveClassZero) {
    const QParam q(frac(1, 2));
    const auto lag = qmap::reduce_acd(qmap::testing::classical_acd_laguerre(frac(1, 4), q.value(), CycScalar(1)));
    const auto jac = qmap::reduce_acd(qmap::testing::classical_acd_jacobi(frac(1, 3), frac(1, 5), q.value(), CycScalar(1)));
    EXPECT_EQ(qmap::class_from_acd(lag.triple), 0);
    EXPECT_EQ(qmap::class_from_acd(jac.triple), 0);
    EXPECT_THROW(qmap::class_from_acd(ACDTriple{Poly{1}, Poly{2}, Poly{}}), qmap::InvalidArgument);
}

TEST(PhiPsi, RoundTripThroughTriple) {
    // Pearson pair → (A, C, D) → reduce → pair recovers the classical pairs up to the monic Φ.
    const QParam q(frac(1, 3));
    const CycScalar a = frac(1, 4);
    const PearsonPair lag{Poly{0, 1}, (a * q.value() * (q.value() - 1)).inv() * Poly{a * q.value() - 1, 1}};
    const auto u = qmap::pearson_moments(lag, CycScalar(1), 10, q);
    const auto cls = qmap::classify(qmap::acd_from_pearson(lag, u, q), q);
    EXPECT_EQ(cls.s, 0);
    EXPECT_EQ(cls.phi, lag.phi);
    EXPECT_EQ(cls.psi, lag.psi);
    EXPECT_THROW(qmap::phi_psi_from_acd(ACDTriple{Poly{0, 2}, Poly{1}, Poly{1}}, q), qmap::InvalidArgument);
}

TEST(ClassBounds, Examples) {
    EXPECT_TRUE(qmap::class_bounds_check(1, 0, 3).ok());
    EXPECT_TRUE(qmap::class_bounds_check(2, 0, 3).ok());
    EXPECT_TRUE(qmap::class_bounds_check(9, 2, 3).ok());
    const auto bad = qmap::class_bounds_check(4, 2, 3);
    EXPECT_FALSE(bad.ok());
    EXPECT_FALSE(bad.checks[0].ok);
    EXPECT_TRUE(bad.checks[1].ok);
    EXPECT_FALSE(qmap::class_bounds_check(2, 1, 3).ok());
    EXPECT_FALSE(qmap::class_bounds_check(13, 1, 3).checks[1].ok);
}

TEST(Descent, AllCasesGiveProportionalClassicalPair) {
    const auto fixtures = qmap::load_fixtures(QMAP_TEST_FIXTURES);
    const QParam q(frac(1, 2));
    for (const auto& c : qmap::fixtures_for(fixtures, "1/2")) {
        const auto b = qmap::build_case(c, q, 24);
        const std::vector<Poly> basis{b.p.ops[0], b.p.ops[1], b.p.ops[2]};
        const auto d = qmap::descend_pearson(PearsonPair{b.cls.phi, b.cls.psi}, b.cls.s, basis, 3, q, b.u, b.v);
        EXPECT_EQ(d.bound, b.cls.s / 3) << "case " << c.id;
        EXPECT_EQ(d.p, 2 - b.cls.s) << "case " << c.id;
        const CycScalar lambda = d.pair.phi.leading() / b.pair_v.phi.leading();
        EXPECT_EQ(d.pair.phi, lambda * b.pair_v.phi) << "case " << c.id;
        EXPECT_EQ(d.pair.psi, lambda * b.pair_v.psi) << "case " << c.id;
    }
}

TEST(Descent, RejectsPairThatDoesNotAnnihilate) {
    const QParam q(frac(1, 2));
    const auto c = qmap::make_case(4, {{"tau", CycScalar(1)}, {"a", CycScalar(2)}});
    const auto b = qmap::build_case(c, q, 24);
    const std::vector<Poly> basis{b.p.ops[0], b.p.ops[1], b.p.ops[2]};
    const PearsonPair wrong{b.cls.phi, b.cls.psi + Poly{1}};
    EXPECT_THROW(qmap::descend_pearson(wrong, 2, basis, 3, q, b.u, b.v), qmap::InconsistencyError);
}

TEST(Ascent, QuadraticSmokeCase) {
    // k = 2, v little q²-Laguerre, η = x − τ.
    const QParam q(frac(1, 3));
    const QParam Q = q.power(2);
    const CycScalar a = frac(2, 7), tau = frac(3, 4);
    const PearsonPair pv{Poly{0, 1}, (a * Q.value() * (Q.value() - 1)).inv() * Poly{a * Q.value() - 1, 1}};
    const auto v = qmap::pearson_moments(pv, CycScalar(1), 20, Q);
    const Poly eta{-tau, 1};
    const auto u = qmap::lift_functional(v, eta, 2, CycScalar(1));
    const auto pu = qmap::ascend_pearson(pv, eta, 2, q);
    const auto r = qmap::pearson_residual(u, pu, q);
    EXPECT_GE(static_cast<int>(r.size()), 12);
    EXPECT_TRUE(qmap::all_zero(r));
}
