#pragma once

#include <optional>
#include <vector>

#include "qmap/functional.hpp"
#include "qmap/poly.hpp"
#include "qmap/scalars.hpp"

namespace qmap {

/// Truncated formal Laurent series P(z) + Σ_{n<depth} c_n z^{−n−1}.
/// Only the first `depth` principal coefficients are known; the polynomial part is exact.
class LaurentSeries {
public:
    LaurentSeries() = default;
    LaurentSeries(Poly poly_part, std::vector<CycScalar> principal);

    const Poly& poly_part() const noexcept { return poly_; }
    /// Coefficient of z^{−n−1}.
    const CycScalar& principal(int n) const;
    const std::vector<CycScalar>& principal() const noexcept { return principal_; }
    int depth() const noexcept { return static_cast<int>(principal_.size()); }

    bool is_zero() const;
    /// Index of the first nonzero principal coefficient, if any.
    std::optional<int> first_nonzero() const;

    LaurentSeries truncated(int depth) const;

    friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator*(const CycScalar& c, const LaurentSeries& s);
    friend bool operator==(const LaurentSeries&, const LaurentSeries&) = default;

private:
    Poly poly_;
    std::vector<CycScalar> principal_;
};

/// (A, C, D) of A(z)(H_{q^{-1}}S)(z) = C(z)S(z) + D(z).
struct ACDTriple {
    Poly A;
    Poly C;
    Poly D;

    friend bool operator==(const ACDTriple&, const ACDTriple&) = default;
};

/// S_u(z) = −Σ u_n z^{−n−1}, depth order(u) + 1.
LaurentSeries series_from_functional(const MomentFunctional& u);
/// Inverse of series_from_functional; requires a zero polynomial part.
MomentFunctional functional_from_series(const LaurentSeries& s);

/// H_{q^{-1}} applied termwise, with q the stored parameter: z^{−n−1} ↦ −q[n+1]_q z^{−n−2}.
/// Depth grows by one.
LaurentSeries hahn_qinv_series(const LaurentSeries& s, const QParam& q);

/// A·S; depth shrinks by deg A.
LaurentSeries poly_mul_series(const Poly& a, const LaurentSeries& s);

/// S(z^k); requires a zero polynomial part. Depth becomes k·depth.
LaurentSeries substitute_zk(const LaurentSeries& s, int k);

/// A·(H_{q^{-1}}S) − C·S − D.
LaurentSeries stieltjes_residual(const ACDTriple& t, const LaurentSeries& s, const QParam& q);

/// A = q^{deg Φ}h_{q^{-1}}Φ, C = q^{deg Φ}(qΨ − H_{q^{-1}}Φ),
/// D = q^{deg Φ}(q(uθ_0Ψ) − H_{q^{-1}}(uθ_0Φ)).
ACDTriple acd_from_pearson(const PearsonPair& pair, const MomentFunctional& u, const QParam& q);

/// Lift of v's triple (parameter q^k) to u through S_u = (u0/v0)η(z)S_v(z^k).
ACDTriple acd_mapped(const ACDTriple& vt, const Poly& eta, int k, const QParam& q, const CycScalar& u0,
                     const CycScalar& v0);

struct SeriesCheck {
    bool ok = false;
    int depth = 0;
    std::optional<int> first_nonzero;
    /// True when the polynomial part of the difference is nonzero.
    bool poly_part_nonzero = false;
};

/// Zero test of a residual series within its depth.
SeriesCheck check_zero(const LaurentSeries& residual);

/// [k]_{q^{-1}} z^{k−1} η(q^{-1}z)(H_{q^{-k}}S_v)(z^k) = (v0/u0)(H_{q^{-1}}S_u)(z) − (H_{q^{-1}}η)(z)S_v(z^k).
SeriesCheck verify_susvq(const LaurentSeries& su, const LaurentSeries& sv, const Poly& eta, int k,
                         const QParam& q);

}  // namespace qmap
