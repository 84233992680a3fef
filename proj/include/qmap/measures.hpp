#pragma once

#include <complex>
#include <vector>

#include "qmap/cubic_cases.hpp"
#include "qmap/poly.hpp"
#include "qmap/report.hpp"

namespace qmap {

using Complex = std::complex<double>;

/// (a; q)_l = Π_{i<l}(1 − aq^i).
Complex qpochhammer(Complex a, double q, int l);
/// (a; q)_∞ for 0 < q < 1, stopping once |aq^i| < 1e−17.
Complex qpochhammer_inf(Complex a, double q);

/// v = Σ_ℓ a_ℓ δ_{μ_ℓ³}, truncated at L = weights.size() atoms.
struct DiscreteMeasure {
    std::vector<Complex> weights;
    std::vector<Complex> nodes;

    int truncation() const noexcept { return static_cast<int>(weights.size()); }
};

/// Σ_ℓ a_ℓ μ_ℓ^{3n} for n = 0..nmax.
std::vector<Complex> measure_moments(const DiscreteMeasure& v, int nmax);

/// Moments of u = (u0/v0)Σ_ℓ a_ℓ/(3μ_ℓ²) Σ_p j^p η(j^pμ_ℓ) δ_{j^pμ_ℓ}, j = e^{2πi/3}, for n = 0..nmax.
std::vector<Complex> discrete_lift(const DiscreteMeasure& v, const Poly& eta2, Complex u0_over_v0, int nmax);

/// Partial sums of |a_ℓ μ_ℓ^{n−2}| over ℓ < L.
std::vector<double> abs_partial_sums(const DiscreteMeasure& v, int n);

/// a_ℓ = (q²;q³)_∞ q^{2ℓ}/(q³;q³)_ℓ, μ_ℓ = q^ℓ.
DiscreteMeasure case1_measure(double q, int L);
/// a_ℓ = (aq³;q³)_∞/(ac^{−3}q³;q³)_∞ · (c^{−3};q³)_ℓ/(q³;q³)_ℓ · (aq³)^ℓ, μ_ℓ = q^ℓ.
DiscreteMeasure case13_measure(double q, double a, double c, int L);

/// Exact checks in ℚ(ω): Σ_p ω^pη(ω^pμ) = 3μ², and Σ_p ω^pη(ω^pμ)p_j(ω^pμ)(ω^pμ)^{3e} = 0 for
/// j = 1, 2 and e = 0, 1, 2, with p_1 = x − τ, p_2 = x² − (τ + b_1)x + τb_1 − a_1 where
/// η = x² + τx + k and a_1 = k − τ².
Report root_of_unity_identities(const Poly& eta2, const CycScalar& mu, const CycScalar& b1 = CycScalar(0));

struct MomentComparison {
    int n = 0;
    Complex exact;
    Complex numeric;
    double abs_err = 0.0;
};

struct MeasureRun {
    int L = 0;
    std::vector<MomentComparison> rows;
    /// max_n |u_n(L) − u_n(2L)|
    double doubling_change = 0.0;
    double max_err = 0.0;
};

/// Exact moments of the lifted u (u_0 = v_0 = 1) against the discrete representation, for cases 1 and 13.
/// Requires 0 < q < 1 rational; case 13 additionally 0 < a < q^{−1}.
MeasureRun compare_case_measure(const CubicCase& c, const QParam& q, int L, int nmax);

}  // namespace qmap
