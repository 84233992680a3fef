#pragma once

#include <vector>

#include "qmap/functional.hpp"
#include "qmap/opseq.hpp"
#include "qmap/poly.hpp"
#include "qmap/report.hpp"

namespace qmap {

/// Everything produced when a block recurrence admits p_{kn+m} = θ_m · q_n(π_k).
struct MappingData {
    int k = 0;
    int m = 0;
    CycScalar r0;
    Poly pi_k;
    Poly theta_m;
    Poly eta;
    /// r_0, r_1, ... (diagonal recurrence coefficients of q_n)
    std::vector<CycScalar> r;
    /// s_1, s_2, ... (off-diagonal recurrence coefficients of q_n)
    std::vector<CycScalar> s;
    Report conditions;

    Recurrence q_recurrence() const { return Recurrence(r, s); }
};

/// Highest block level n for which every condition of the mapping theorem can be evaluated.
int max_condition_level(const BlockView& view, int m);

/// Evaluates the four block conditions for levels n = 0..N:
/// (i) b_n^{(m)} constant, (ii) Δ_n(m+2, m+k−1) constant, (iii) θ_m divides Δ_0(m+2, m+k−1),
/// (iv) r_n(x) constant in x.
Report check_conditions(const BlockView& view, int m, int N);

struct MappedPair {
    MappingData data;
    OPSequence q;
};
/// Builds θ_m = Δ_0(1, m−1), π_k = Δ_0(1,m)η − a_0^{(m+1)}Δ_0(m+3, m+k−1) + r_0, the q_n
/// recurrence (r_n = r_0 + r_n(0), s_n = a_n^{(m)} a_{n−1}^{(m+1)}⋯a_{n−1}^{(m+k−1)}) and q_0..q_N.
/// Throws InconsistencyError naming the first failed condition.
MappedPair build_mapping(const BlockView& view, int m, const CycScalar& r0, int N);

/// p_{kn+m} = θ_m · q_n(π_k) for n = 0..N.
Report verify_mapping_identity(const OPSequence& p, const MappingData& map, const OPSequence& q, int N);

/// η·p_{kn+m+j+1} = Δ_n(m+2, m+j) q_{n+1}(π_k) + (Π_{i=1}^{j+1} a_n^{(m+i)}) Δ_n(m+j+3, m+k−1) q_n(π_k)
/// for j = 0..k−1 and n = 0..N.
Report verify_interleave(const BlockView& view, const OPSequence& p, const MappingData& map,
                         const OPSequence& q, int N);

/// The functional u with S_u(z) = (u0/v0) η(z) S_v(z^k), for deg η = k − 1:
/// u_{kn+(k−1−i)} = (u0/v0) e_i v_n where η = Σ e_i z^i.
MomentFunctional lift_functional(const MomentFunctional& v, const Poly& eta, int k, const CycScalar& u0);

}  // namespace qmap
