#include "qmap/stieltjes.hpp"

#include <algorithm>

#include "qmap/error.hpp"

namespace qmap {

LaurentSeries::LaurentSeries(Poly poly_part, std::vector<CycScalar> principal)
    : poly_(std::move(poly_part)), principal_(std::move(principal)) {}

const CycScalar& LaurentSeries::principal(int n) const {
    if (n < 0 || n >= depth()) {
        throw TruncationError("series coefficient z^-" + std::to_string(n + 1) + " beyond depth " +
                              std::to_string(depth()));
    }
    return principal_[static_cast<std::size_t>(n)];
}

bool LaurentSeries::is_zero() const { return poly_.is_zero() && all_zero(principal_); }

std::optional<int> LaurentSeries::first_nonzero() const {
    for (std::size_t n = 0; n < principal_.size(); ++n)
        if (!principal_[n].is_zero()) return static_cast<int>(n);
    return std::nullopt;
}

LaurentSeries LaurentSeries::truncated(int d) const {
    if (d > depth()) throw TruncationError("cannot deepen a truncated series");
    return {poly_, std::vector<CycScalar>(principal_.begin(), principal_.begin() + std::max(d, 0))};
}

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
    const int d = std::min(a.depth(), b.depth());
    std::vector<CycScalar> pr(static_cast<std::size_t>(d));
    for (int n = 0; n < d; ++n) pr[static_cast<std::size_t>(n)] = a.principal(n) + b.principal(n);
    return {a.poly_part() + b.poly_part(), std::move(pr)};
}

LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return a + (CycScalar(-1) * b); }

LaurentSeries operator*(const CycScalar& c, const LaurentSeries& s) {
    std::vector<CycScalar> pr = s.principal_;
    for (auto& x : pr) x *= c;
    return {s.poly_ * c, std::move(pr)};
}

LaurentSeries series_from_functional(const MomentFunctional& u) {
    std::vector<CycScalar> pr;
    pr.reserve(u.moments().size());
    for (const auto& m : u.moments()) pr.push_back(-m);
    return {Poly{}, std::move(pr)};
}

MomentFunctional functional_from_series(const LaurentSeries& s) {
    if (!s.poly_part().is_zero()) throw InvalidArgument("Stieltjes series has a polynomial part");
    std::vector<CycScalar> m;
    m.reserve(s.principal().size());
    for (const auto& c : s.principal()) m.push_back(-c);
    return MomentFunctional(std::move(m));
}

LaurentSeries hahn_qinv_series(const LaurentSeries& s, const QParam& q) {
    std::vector<CycScalar> pr(static_cast<std::size_t>(s.depth()) + 1);
    CycScalar bracket(1);  // [n+1]_q
    for (int n = 0; n < s.depth(); ++n) {
        pr[static_cast<std::size_t>(n) + 1] = -(q.value() * bracket * s.principal(n));
        bracket = CycScalar(1) + q.value() * bracket;
    }
    return {hahn(s.poly_part(), q.inverse()), std::move(pr)};
}

LaurentSeries poly_mul_series(const Poly& a, const LaurentSeries& s) {
    if (a.is_zero()) return {Poly{}, std::vector<CycScalar>(static_cast<std::size_t>(s.depth()))};
    const int da = a.degree();
    if (s.depth() < da) {
        throw TruncationError("series depth " + std::to_string(s.depth()) + " too small for a degree " +
                              std::to_string(da) + " multiplier");
    }
    // z^j · z^{−n−1}: polynomial when j ≥ n+1, principal index n − j otherwise.
    std::vector<CycScalar> poly(static_cast<std::size_t>(std::max(da, 0)));
    for (int j = 1; j <= da; ++j) {
        if (a[j].is_zero()) continue;
        for (int n = 0; n < j; ++n) poly[static_cast<std::size_t>(j - n - 1)] += a[j] * s.principal(n);
    }
    const int depth = s.depth() - da;
    std::vector<CycScalar> pr(static_cast<std::size_t>(depth));
    for (int m = 0; m < depth; ++m) {
        CycScalar acc;
        for (int j = 0; j <= da; ++j)
            if (!a[j].is_zero()) acc += a[j] * s.principal(m + j);
        pr[static_cast<std::size_t>(m)] = std::move(acc);
    }
    return {a * s.poly_part() + Poly(std::move(poly)), std::move(pr)};
}

LaurentSeries substitute_zk(const LaurentSeries& s, int k) {
    if (k < 1) throw InvalidArgument("substitute_zk needs k >= 1");
    if (!s.poly_part().is_zero()) throw InvalidArgument("substitute_zk needs a zero polynomial part");
    std::vector<CycScalar> pr(static_cast<std::size_t>(s.depth() * k));
    for (int n = 0; n < s.depth(); ++n) pr[static_cast<std::size_t>(k * n + k - 1)] = s.principal(n);
    return {Poly{}, std::move(pr)};
}

LaurentSeries stieltjes_residual(const ACDTriple& t, const LaurentSeries& s, const QParam& q) {
    LaurentSeries r = poly_mul_series(t.A, hahn_qinv_series(s, q)) - poly_mul_series(t.C, s);
    return {r.poly_part() - t.D, r.principal()};
}

ACDTriple acd_from_pearson(const PearsonPair& pair, const MomentFunctional& u, const QParam& q) {
    const QParam qi = q.inverse();
    const CycScalar scale = q.pow(pair.phi.degree());
    ACDTriple t;
    t.A = dilate(pair.phi, qi.value()) * scale;
    t.C = (pair.psi * q.value() - hahn(pair.phi, qi)) * scale;
    t.D = (u_poly(u, theta0(pair.psi)) * q.value() - hahn(u_poly(u, theta0(pair.phi)), qi)) * scale;
    return t;
}

ACDTriple acd_mapped(const ACDTriple& vt, const Poly& eta, int k, const QParam& q, const CycScalar& u0,
                     const CycScalar& v0) {
    if (eta.degree() != k - 1) throw InvalidArgument("acd_mapped needs deg eta = k - 1");
    const QParam qi = q.inverse();
    const CycScalar kq = qi.bracket(k);
    const Poly zk1 = Poly::monomial(kq, k - 1);
    const Poly eta_q = dilate(eta, qi.value());
    const Poly a_k = power_substitute(vt.A, k);
    ACDTriple t;
    t.A = eta * a_k * v0;
    t.C = (zk1 * eta_q * power_substitute(vt.C, k) + hahn(eta, qi) * a_k) * v0;
    t.D = zk1 * eta_q * eta * power_substitute(vt.D, k) * u0;
    return t;
}

SeriesCheck check_zero(const LaurentSeries& residual) {
    SeriesCheck c;
    c.depth = residual.depth();
    c.first_nonzero = residual.first_nonzero();
    c.poly_part_nonzero = !residual.poly_part().is_zero();
    c.ok = !c.first_nonzero && !c.poly_part_nonzero;
    return c;
}

SeriesCheck verify_susvq(const LaurentSeries& su, const LaurentSeries& sv, const Poly& eta, int k,
                         const QParam& q) {
    const QParam qi = q.inverse();
    const CycScalar u0 = -su.principal(0);
    const CycScalar v0 = -sv.principal(0);
    const Poly lhs_factor = Poly::monomial(qi.bracket(k), k - 1) * dilate(eta, qi.value());
    const LaurentSeries lhs = poly_mul_series(lhs_factor, substitute_zk(hahn_qinv_series(sv, q.power(k)), k));
    const LaurentSeries rhs =
        (v0 / u0) * hahn_qinv_series(su, q) - poly_mul_series(hahn(eta, qi), substitute_zk(sv, k));
    return check_zero(lhs - rhs);
}

}  // namespace qmap
