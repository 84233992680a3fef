#pragma once

#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "qmap/scalars.hpp"

namespace qmap {

/// Dense univariate polynomial over ℚ(ω), coefficients indexed by power.
/// Trailing zeros are always trimmed, so the zero polynomial has no coefficients.
class Poly {
public:
    /// Degree reported for the zero polynomial (stands for −∞).
    static constexpr int kZeroDegree = -1;

    Poly() = default;
    Poly(std::initializer_list<CycScalar> coeffs);
    explicit Poly(std::vector<CycScalar> coeffs);

    static Poly constant(CycScalar c);
    static Poly x() { return Poly{0, 1}; }
    /// c·x^n
    static Poly monomial(CycScalar c, int n);

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_constant() const noexcept { return coeffs_.size() <= 1; }

    std::span<const CycScalar> coeffs() const noexcept { return coeffs_; }
    /// Coefficient of x^i; zero beyond the degree.
    const CycScalar& operator[](std::size_t i) const;
    const CycScalar& leading() const;

    CycScalar operator()(const CycScalar& x) const;

    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    Poly& operator*=(const CycScalar& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const CycScalar& c) { return a *= c; }
    friend Poly operator*(const CycScalar& c, Poly a) { return a *= c; }
    Poly operator-() const;

    friend bool operator==(const Poly&, const Poly&) = default;

    std::string str() const;

private:
    void trim();
    std::vector<CycScalar> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

struct DivRem {
    Poly quotient;
    Poly remainder;
};

/// Euclidean division a = q·b + r with deg r < deg b. Throws DivisionByZero for b = 0.
DivRem divrem(const Poly& a, const Poly& b);
/// Exact quotient; throws InconsistencyError when b does not divide a.
Poly exact_div(const Poly& a, const Poly& b);
/// Monic gcd (zero only when both arguments are zero).
Poly gcd(const Poly& a, const Poly& b);
Poly monic(const Poly& f);
/// a ∘ b
Poly compose(const Poly& a, const Poly& b);
/// f(x^k), i.e. σ_{x^k}[f].
Poly power_substitute(const Poly& f, int k);
/// x^n · f
Poly shift_up(const Poly& f, int n);
Poly pow(const Poly& f, int n);

/// Hahn operator (H_q f)(x) = (f(qx) − f(x))/((q − 1)x), acting as x^n ↦ [n]_q x^{n−1}.
Poly hahn(const Poly& f, const QParam& q);
/// θ_0 f = (f(x) − f(0))/x
Poly theta0(const Poly& f);
/// h_d f = f(dx)
Poly dilate(const Poly& f, const CycScalar& d);

/// Writes f = Σ_j basis[j](x)·φ_j(x^k) for a simple set basis (deg basis[j] = j, j < k).
/// Each φ_j satisfies deg φ_j ≤ ⌊deg f / k⌋.
std::vector<Poly> simple_set_decompose(const Poly& f, std::span<const Poly> basis, int k);

}  // namespace qmap
