#include "qmap/functional.hpp"

#include <algorithm>
#include <string>

#include "qmap/error.hpp"

namespace qmap {

const CycScalar& MomentFunctional::operator[](int n) const {
    if (n < 0 || n > order()) {
        throw TruncationError("moment u_" + std::to_string(n) + " beyond effective order " +
                              std::to_string(order()));
    }
    return moments_[static_cast<std::size_t>(n)];
}

MomentFunctional MomentFunctional::truncated(int n) const {
    if (n > order()) throw TruncationError("cannot extend a truncated functional");
    if (n < 0) return {};
    return MomentFunctional(std::vector<CycScalar>(moments_.begin(), moments_.begin() + n + 1));
}

CycScalar act(const MomentFunctional& u, const Poly& f) {
    if (f.degree() > u.order()) {
        throw TruncationError("<u, f> needs moment " + std::to_string(f.degree()) + " but order is " +
                              std::to_string(u.order()));
    }
    CycScalar acc;
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        if (!f[i].is_zero()) acc += f[i] * u.moments()[i];
    }
    return acc;
}

MomentFunctional left_mul(const Poly& phi, const MomentFunctional& u) {
    if (phi.is_zero()) return MomentFunctional(std::vector<CycScalar>(u.moments().size()));
    const int order = u.order() - phi.degree();
    if (order < 0) throw TruncationError("left multiplication exhausts the tracked moments");
    std::vector<CycScalar> out(static_cast<std::size_t>(order) + 1);
    for (int n = 0; n <= order; ++n) {
        CycScalar acc;
        for (std::size_t i = 0; i < phi.coeffs().size(); ++i) {
            if (!phi[i].is_zero()) acc += phi[i] * u[static_cast<int>(i) + n];
        }
        out[static_cast<std::size_t>(n)] = std::move(acc);
    }
    return MomentFunctional(std::move(out));
}

MomentFunctional hahn(const MomentFunctional& u, const QParam& q) {
    std::vector<CycScalar> out(u.moments().size() + 1);
    CycScalar bracket(1);
    for (std::size_t n = 1; n < out.size(); ++n) {
        out[n] = -(bracket * u.moments()[n - 1]);
        bracket = CycScalar(1) + q.value() * bracket;
    }
    return MomentFunctional(std::move(out));
}

MomentFunctional dilate(const MomentFunctional& u, const CycScalar& d) {
    std::vector<CycScalar> out(u.moments().begin(), u.moments().end());
    CycScalar power(1);
    for (auto& m : out) {
        m *= power;
        power *= d;
    }
    return MomentFunctional(std::move(out));
}

MomentFunctional sigma_star(const MomentFunctional& u, int k) {
    if (k < 1) throw InvalidArgument("sigma_star needs k >= 1");
    if (u.order() < 0) return {};
    std::vector<CycScalar> out;
    for (int n = 0; n * k <= u.order(); ++n) out.push_back(u[n * k]);
    return MomentFunctional(std::move(out));
}

Poly u_poly(const MomentFunctional& u, const Poly& f) {
    if (f.degree() > u.order()) throw TruncationError("u_poly: degree exceeds the functional's order");
    std::vector<CycScalar> out(f.coeffs().size());
    for (std::size_t j = 0; j < out.size(); ++j) {
        CycScalar acc;
        for (std::size_t i = j; i < f.coeffs().size(); ++i) {
            if (!f[i].is_zero()) acc += f[i] * u.moments()[i - j];
        }
        out[j] = std::move(acc);
    }
    return Poly(std::move(out));
}

namespace {

// Equation n of H_q(Φu) = Ψu reads −[n]_q Σ φ_i u_{i+n−1} − Σ ψ_i u_{i+n} = 0.
int top_index(const PearsonPair& pair, int n) {
    int top = pair.psi.degree() + n;
    if (n >= 1 && !pair.phi.is_zero()) top = std::max(top, pair.phi.degree() + n - 1);
    return top;
}

// Value of equation n for the given (partial) moments, skipping index `skip`.
CycScalar equation_value(const PearsonPair& pair, const QParam& q, int n,
                         std::span<const CycScalar> m, int skip) {
    CycScalar acc;
    if (n >= 1) {
        const CycScalar bn = q.bracket(n);
        for (std::size_t i = 0; i < pair.phi.coeffs().size(); ++i) {
            const int idx = static_cast<int>(i) + n - 1;
            if (idx == skip || pair.phi[i].is_zero()) continue;
            acc -= bn * pair.phi[i] * m[static_cast<std::size_t>(idx)];
        }
    }
    for (std::size_t i = 0; i < pair.psi.coeffs().size(); ++i) {
        const int idx = static_cast<int>(i) + n;
        if (idx == skip || pair.psi[i].is_zero()) continue;
        acc -= pair.psi[i] * m[static_cast<std::size_t>(idx)];
    }
    return acc;
}

CycScalar top_coefficient(const PearsonPair& pair, const QParam& q, int n) {
    const int top = top_index(pair, n);
    CycScalar c;
    if (n >= 1 && pair.phi.degree() + n - 1 == top) c -= q.bracket(n) * pair.phi.leading();
    if (pair.psi.degree() + n == top) c -= pair.psi.leading();
    return c;
}

}  // namespace

int pearson_free_moments(const PearsonPair& pair) {
    if (pair.phi.is_zero() || pair.psi.is_zero()) throw InvalidArgument("Pearson pair must be nonzero");
    const int t0 = top_index(pair, 0);
    const int t1 = top_index(pair, 1);
    return t1 > t0 + 1 ? t1 - 1 : t0;
}

MomentFunctional pearson_moments(const PearsonPair& pair, std::span<const CycScalar> seed, int order,
                                 const QParam& q) {
    const int free = pearson_free_moments(pair);
    if (static_cast<int>(seed.size()) < std::max(free, 1)) {
        throw InvalidArgument("Pearson pair leaves " + std::to_string(free) +
                              " leading moments free but only " + std::to_string(seed.size()) +
                              " were supplied");
    }
    std::vector<CycScalar> m(seed.begin(), seed.end());
    if (static_cast<int>(m.size()) > order + 1) m.resize(static_cast<std::size_t>(order) + 1);
    for (int n = 0;; ++n) {
        const int top = top_index(pair, n);
        if (top > order) break;
        if (top < static_cast<int>(m.size())) {
            if (!equation_value(pair, q, n, m, -1).is_zero()) {
                throw InconsistencyError("seed moments violate Pearson equation n = " + std::to_string(n));
            }
            continue;
        }
        const CycScalar lead = top_coefficient(pair, q, n);
        if (lead.is_zero()) {
            throw RegularityError("Pearson step n = " + std::to_string(n) +
                                      ": coefficient of u_" + std::to_string(top) +
                                      " vanishes ([n]_q lc(Phi) + lc(Psi) = 0)",
                                  n);
        }
        m.push_back(CycScalar{});
        m.back() = -equation_value(pair, q, n, m, top) / lead;
    }
    return MomentFunctional(std::move(m));
}

MomentFunctional pearson_moments(const PearsonPair& pair, const CycScalar& u0, int order,
                                 const QParam& q) {
    const CycScalar seed[] = {u0};
    return pearson_moments(pair, seed, order, q);
}

std::vector<CycScalar> pearson_residual(const MomentFunctional& u, const PearsonPair& pair,
                                        const QParam& q) {
    std::vector<CycScalar> out;
    for (int n = 0; top_index(pair, n) <= u.order(); ++n) {
        out.push_back(equation_value(pair, q, n, u.moments(), -1));
    }
    return out;
}

bool all_zero(std::span<const CycScalar> values) {
    return std::all_of(values.begin(), values.end(), [](const CycScalar& c) { return c.is_zero(); });
}

}  // namespace qmap
