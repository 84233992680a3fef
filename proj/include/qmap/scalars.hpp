#pragma once

#include <complex>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace qmap {

/// Arbitrary-precision rational, always in canonical form (reduced, positive denominator).
using Rational = mpq_class;

/// Builds num/den in canonical form. Throws DivisionByZero when den == 0.
Rational make_rational(long num, long den = 1);

/// Element re + om·ω of ℚ(ω), where ω is a primitive cube root of unity (ω² + ω + 1 = 0).
class CycScalar {
public:
    CycScalar() = default;
    CycScalar(int value) : re_(value) {}  // NOLINT(google-explicit-constructor)
    CycScalar(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
    CycScalar(Rational re) : re_(std::move(re)) { re_.canonicalize(); }  // NOLINT
    CycScalar(Rational re, Rational om);

    static CycScalar omega() { return {Rational(0), Rational(1)}; }
    static CycScalar fraction(long num, long den) { return make_rational(num, den); }

    const Rational& re() const noexcept { return re_; }
    const Rational& om() const noexcept { return om_; }

    bool is_zero() const noexcept { return sgn(re_) == 0 && sgn(om_) == 0; }
    bool is_one() const noexcept { return sgn(om_) == 0 && re_ == 1; }
    bool is_rational() const noexcept { return sgn(om_) == 0; }

    /// re² − re·om + om²; zero iff the scalar is zero.
    Rational norm() const;
    /// Galois conjugate re + om·ω².
    CycScalar conj() const;
    /// Multiplicative inverse. Throws DivisionByZero for 0.
    CycScalar inv() const;
    /// Integer power; negative exponents invert (throws DivisionByZero for 0).
    CycScalar pow(long n) const;

    CycScalar& operator+=(const CycScalar& rhs);
    CycScalar& operator-=(const CycScalar& rhs);
    CycScalar& operator*=(const CycScalar& rhs);
    CycScalar& operator/=(const CycScalar& rhs);

    friend CycScalar operator+(CycScalar lhs, const CycScalar& rhs) { return lhs += rhs; }
    friend CycScalar operator-(CycScalar lhs, const CycScalar& rhs) { return lhs -= rhs; }
    friend CycScalar operator*(CycScalar lhs, const CycScalar& rhs) { return lhs *= rhs; }
    friend CycScalar operator/(CycScalar lhs, const CycScalar& rhs) { return lhs /= rhs; }
    CycScalar operator-() const;

    friend bool operator==(const CycScalar& a, const CycScalar& b) {
        return a.re_ == b.re_ && a.om_ == b.om_;
    }
    friend bool operator!=(const CycScalar& a, const CycScalar& b) { return !(a == b); }

    /// Embedding into ℂ with ω ↦ e^{2πi/3}.
    std::complex<double> to_complex() const;

    /// "p/q" when om = 0, otherwise "p/q+r/s*w" (or "p/q-r/s*w").
    std::string str() const;
    /// Accepts the output of str() plus the shorthands "3", "-w", "1/2*w", "1+w".
    static CycScalar parse(std::string_view text);

private:
    Rational re_{0};
    Rational om_{0};
};

std::ostream& operator<<(std::ostream& os, const CycScalar& s);

/// The deformation parameter q of the Hahn operator. Construction checks q ≠ 0 and
/// q^n ≠ 1 for 1 ≤ n ≤ max_order.
class QParam {
public:
    static constexpr int kDefaultMaxOrder = 256;

    explicit QParam(CycScalar q, int max_order = kDefaultMaxOrder);

    const CycScalar& value() const noexcept { return q_; }
    int max_order() const noexcept { return max_order_; }

    /// Basic number [n]_q = 1 + q + ... + q^{n-1}; [0]_q = 0. Requires 0 ≤ n ≤ max_order + 1.
    CycScalar bracket(int n) const;
    CycScalar pow(long n) const { return q_.pow(n); }

    QParam inverse() const { return QParam(q_.inv(), max_order_); }
    QParam power(int k) const { return QParam(q_.pow(k), max_order_); }

private:
    CycScalar q_;
    int max_order_;
};

}  // namespace qmap
