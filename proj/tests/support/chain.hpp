#pragma once

#include "qmap/mapping.hpp"
#include "qmap/stieltjes.hpp"
#include "support/oracles.hpp"

namespace qmap::testing {

struct Chain {
    ACDTriple mapped;  // lifted triple before any division
    ACDTriple step1;   // after dividing by v0 z²
    ACDTriple step2;   // after dividing by z (z_1 = 0)
    ACDTriple step3;   // after dividing by z (a = 1/q)
    ACDTriple step4;   // after dividing by z + τ (τ³ = −1)
};

// Little q³-Laguerre v lifted with η = z(z + τ); the four intermediate reference triples are written
// out from their closed forms with u_0 = v_0 = 1.
inline Chain laguerre_chain(const CycScalar& q, const CycScalar& tau, const CycScalar& a) {
    const CycScalar q3 = q.pow(3), qi = q.inv(), u0(1);
    const QParam qp(q);
    const Poly z{0, 1};
    const Poly eta = z * Poly{tau, 1};
    const CycScalar z1(0), z2 = -tau;
    const CycScalar ell = q3 / (a * (q3 - 1));
    const CycScalar b3 = 1 + qi + qi * qi;

    Chain c;
    c.mapped = acd_mapped(classical_acd_laguerre(a, q3, u0), eta, 3, qp, u0, u0);
    const Poly f1{-z1, qi}, f2{-z2, qi};
    c.step1.A = z * Poly{-z1, 1} * Poly{-z2, 1};
    c.step1.C = b3 * f1 * f2 * (ell * Poly{a * q3 - 1, 0, 0, 1} - Poly{q3}) + z * Poly{-z1 - z2, qi + 1};
    c.step1.D = (u0 * b3 * ell) * f1 * f2 * Poly{-z1, 1} * Poly{-z2, 1};

    const CycScalar m = (q * (q - 1) * a).inv();
    c.step2.A = z * Poly{tau, 1};
    c.step2.C = m * Poly{tau * q * (a * q - 1), a * q * q - 1, 0, tau * q, 1};
    c.step2.D = (u0 * m) * z * Poly{tau * q, 1} * Poly{tau, 1};

    const CycScalar n = (q - 1).inv();
    c.step3.A = Poly{tau, 1};
    c.step3.C = n * Poly{q - 1, 0, tau * q, 1};
    c.step3.D = (u0 * n) * Poly{tau * q, 1} * Poly{tau, 1};

    c.step4.A = Poly{1};
    c.step4.C = n * Poly{tau * tau * (1 - q), -tau * (1 - q), 1};
    c.step4.D = (u0 * n) * Poly{tau * q, 1};
    return c;
}

}  // namespace qmap::testing
