#pragma once

#include <span>
#include <vector>

#include "qmap/functional.hpp"
#include "qmap/poly.hpp"
#include "qmap/report.hpp"
#include "qmap/stieltjes.hpp"

namespace qmap {

struct Reduction {
    /// Co-prime triple with monic A.
    ACDTriple triple;
    /// Monic common factor removed at each round, in order.
    std::vector<Poly> trace;
};

/// Divides out gcd(gcd(A, C), D) until it is constant, then makes A monic.
Reduction reduce_acd(const ACDTriple& t);

/// s = max(deg C − 1, deg D) of a co-prime triple.
/// Throws InvalidArgument when the triple gives a negative class (C constant and D = 0).
int class_from_acd(const ACDTriple& t);

/// Φ = q^{−deg A}h_qA, Ψ = q^{−deg A}(H_qA + q^{−1}C). Requires A monic.
PearsonPair phi_psi_from_acd(const ACDTriple& t, const QParam& q);

struct ClassReport {
    ACDTriple reduced;
    int s = 0;
    Poly phi;
    Poly psi;
    std::vector<Poly> trace;
};

/// reduce_acd, class_from_acd and phi_psi_from_acd in one pass.
ClassReport classify(const ACDTriple& t, const QParam& q);

/// s̃ ≤ ⌊s/k⌋, s ≤ (s̃+3)k − 3, and s ≤ k − 1 ⟹ s̃ = 0.
Report class_bounds_check(int s, int s_tilde, int k);

struct Descent {
    PearsonPair pair;
    /// p = (1 + ⌊s/k⌋)k − 1 − s
    int p = 0;
    /// max(deg f_0 − 2, deg g_0 − 1)
    int bound = 0;
};

/// Pearson pair (f_0, g_0) of v from the pair of u, where p_{kn} = q_n(x^k).
/// basis holds p_0..p_{k−1}. Throws InconsistencyError when H_{q^k}(f_0v) = g_0v fails on v's moments
/// or when pair_u does not annihilate u.
Descent descend_pearson(const PearsonPair& pair_u, int s, std::span<const Poly> basis, int k,
                        const QParam& q, const MomentFunctional& u, const MomentFunctional& v);

/// Pearson pair of the lift u from the pair of v (parameter q^k):
/// Φ = q^{1−k}η(qx)Φ̃(x^k),
/// Ψ = q^{1−k}([k]_q x^{k−1}η(x/q)Ψ̃(x^k) + (H_qη + q^{−1}H_{q^{−1}}η)Φ̃(x^k)).
PearsonPair ascend_pearson(const PearsonPair& pair_v, const Poly& eta, int k, const QParam& q);

}  // namespace qmap
