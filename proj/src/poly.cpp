#include "qmap/poly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "qmap/error.hpp"

namespace qmap {

namespace {
const CycScalar kZero{};
}

Poly::Poly(std::initializer_list<CycScalar> coeffs) : coeffs_(coeffs) { trim(); }

Poly::Poly(std::vector<CycScalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::constant(CycScalar c) { return Poly(std::vector<CycScalar>{std::move(c)}); }

Poly Poly::monomial(CycScalar c, int n) {
    if (n < 0) throw InvalidArgument("negative monomial exponent");
    std::vector<CycScalar> v(static_cast<std::size_t>(n) + 1);
    v.back() = std::move(c);
    return Poly(std::move(v));
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const CycScalar& Poly::operator[](std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : kZero;
}

const CycScalar& Poly::leading() const {
    if (coeffs_.empty()) throw InvalidArgument("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

CycScalar Poly::operator()(const CycScalar& x) const {
    CycScalar acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

Poly& Poly::operator+=(const Poly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator*=(const CycScalar& c) {
    if (c.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<CycScalar> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            if (b.coeffs_[j].is_zero()) continue;
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return Poly(std::move(out));
}

Poly Poly::operator-() const {
    Poly out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

std::string Poly::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        if (coeffs_[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << coeffs_[i] << ")";
        if (i >= 1) os << "*x";
        if (i >= 2) os << "^" << i;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

DivRem divrem(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly{}, a};
    std::vector<CycScalar> rem(a.coeffs().begin(), a.coeffs().end());
    std::vector<CycScalar> quot(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
    const CycScalar lead_inv = b.leading().inv();
    const auto db = static_cast<std::size_t>(b.degree());
    for (std::size_t top = rem.size(); top-- > db;) {
        if (rem[top].is_zero()) continue;
        const CycScalar c = rem[top] * lead_inv;
        const std::size_t shift = top - db;
        quot[shift] = c;
        for (std::size_t i = 0; i <= db; ++i) rem[shift + i] -= c * b[i];
    }
    rem.resize(db);
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly exact_div(const Poly& a, const Poly& b) {
    auto [q, r] = divrem(a, b);
    if (!r.is_zero()) throw InconsistencyError("polynomial division leaves remainder " + r.str());
    return q;
}

Poly monic(const Poly& f) {
    if (f.is_zero()) return f;
    return f * f.leading().inv();
}

Poly gcd(const Poly& a, const Poly& b) {
    Poly x = a;
    Poly y = b;
    while (!y.is_zero()) {
        Poly r = divrem(x, y).remainder;
        x = std::move(y);
        y = monic(r);
    }
    return monic(x);
}

Poly compose(const Poly& a, const Poly& b) {
    Poly out;
    for (std::size_t i = a.coeffs().size(); i-- > 0;) {
        out = out * b;
        out += Poly::constant(a[i]);
    }
    return out;
}

Poly power_substitute(const Poly& f, int k) {
    if (k < 1) throw InvalidArgument("power substitution needs k >= 1");
    if (f.is_zero()) return f;
    std::vector<CycScalar> out(static_cast<std::size_t>(f.degree() * k) + 1);
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) out[i * static_cast<std::size_t>(k)] = f[i];
    return Poly(std::move(out));
}

Poly shift_up(const Poly& f, int n) {
    if (n < 0) throw InvalidArgument("negative shift");
    if (f.is_zero()) return f;
    std::vector<CycScalar> out(static_cast<std::size_t>(n));
    out.insert(out.end(), f.coeffs().begin(), f.coeffs().end());
    return Poly(std::move(out));
}

Poly pow(const Poly& f, int n) {
    if (n < 0) throw InvalidArgument("negative polynomial power");
    Poly out = Poly::constant(1);
    for (int i = 0; i < n; ++i) out = out * f;
    return out;
}

Poly hahn(const Poly& f, const QParam& q) {
    if (f.degree() < 1) return {};
    std::vector<CycScalar> out(static_cast<std::size_t>(f.degree()));
    CycScalar bracket(1);  // [n]_q, built incrementally: [n+1] = 1 + q[n]
    for (std::size_t n = 1; n < f.coeffs().size(); ++n) {
        out[n - 1] = f[n] * bracket;
        bracket = CycScalar(1) + q.value() * bracket;
    }
    return Poly(std::move(out));
}

Poly theta0(const Poly& f) {
    if (f.degree() < 1) return {};
    return Poly(std::vector<CycScalar>(f.coeffs().begin() + 1, f.coeffs().end()));
}

Poly dilate(const Poly& f, const CycScalar& d) {
    std::vector<CycScalar> out(f.coeffs().begin(), f.coeffs().end());
    CycScalar power(1);
    for (auto& c : out) {
        c *= power;
        power *= d;
    }
    return Poly(std::move(out));
}

std::vector<Poly> simple_set_decompose(const Poly& f, std::span<const Poly> basis, int k) {
    if (k < 2) throw InvalidArgument("simple set decomposition needs k >= 2");
    if (basis.size() != static_cast<std::size_t>(k)) {
        throw InvalidArgument("simple set must contain exactly k polynomials");
    }
    for (int j = 0; j < k; ++j) {
        if (basis[static_cast<std::size_t>(j)].degree() != j) {
            throw InvalidArgument("basis is not a simple set: deg p_" + std::to_string(j) + " = " +
                                  std::to_string(basis[static_cast<std::size_t>(j)].degree()));
        }
    }
    std::vector<std::vector<CycScalar>> parts(static_cast<std::size_t>(k));
    Poly rest = f;
    while (!rest.is_zero()) {
        const int d = rest.degree();
        const int j = d % k;
        const int e = (d - j) / k;
        const Poly& pj = basis[static_cast<std::size_t>(j)];
        const CycScalar c = rest.leading() / pj.leading();
        auto& part = parts[static_cast<std::size_t>(j)];
        if (part.size() <= static_cast<std::size_t>(e)) part.resize(static_cast<std::size_t>(e) + 1);
        part[static_cast<std::size_t>(e)] += c;
        rest -= pj * Poly::monomial(c, e * k);
    }
    std::vector<Poly> out;
    out.reserve(parts.size());
    for (auto& p : parts) out.emplace_back(std::move(p));
    return out;
}

}  // namespace qmap
