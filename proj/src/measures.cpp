#include "qmap/measures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qmap/error.hpp"
#include "qmap/mapping.hpp"

namespace qmap {

namespace {

Complex eval(const Poly& f, Complex x) {
    Complex acc = 0.0;
    const auto c = f.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + it->to_complex();
    return acc;
}

double real_of(const CycScalar& s, const char* what) {
    if (!s.is_rational()) throw InvalidArgument(std::string(what) + " must be rational");
    return s.re().get_d();
}

}  // namespace

Complex qpochhammer(Complex a, double q, int l) {
    if (l < 0) throw InvalidArgument("qpochhammer needs l >= 0");
    Complex prod = 1.0;
    Complex term = a;
    for (int i = 0; i < l; ++i) {
        prod *= 1.0 - term;
        term *= q;
    }
    return prod;
}

Complex qpochhammer_inf(Complex a, double q) {
    if (!(q > 0.0 && q < 1.0)) throw InvalidArgument("infinite q-Pochhammer needs 0 < q < 1");
    Complex prod = 1.0;
    Complex term = a;
    while (std::abs(term) >= 1e-17) {
        prod *= 1.0 - term;
        term *= q;
    }
    return prod;
}

std::vector<Complex> measure_moments(const DiscreteMeasure& v, int nmax) {
    std::vector<Complex> out(static_cast<std::size_t>(nmax) + 1);
    for (int l = 0; l < v.truncation(); ++l) {
        const Complex x = std::pow(v.nodes[l], 3);
        Complex w = v.weights[l];
        for (int n = 0; n <= nmax; ++n) {
            out[n] += w;
            w *= x;
        }
    }
    return out;
}

std::vector<Complex> discrete_lift(const DiscreteMeasure& v, const Poly& eta2, Complex u0_over_v0, int nmax) {
    if (eta2.degree() != 2) throw InvalidArgument("discrete_lift needs deg eta = 2");
    const Complex j = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
    const Complex jp[3] = {1.0, j, j * j};
    std::vector<Complex> out(static_cast<std::size_t>(nmax) + 1);
    for (int l = 0; l < v.truncation(); ++l) {
        const Complex mu = v.nodes[l];
        if (mu == 0.0) throw InvalidArgument("measure node vanishes");
        const Complex scale = v.weights[l] / (3.0 * mu * mu);
        for (int p = 0; p < 3; ++p) {
            const Complex x = jp[p] * mu;
            Complex w = scale * jp[p] * eval(eta2, x);
            for (int n = 0; n <= nmax; ++n) {
                out[n] += w;
                w *= x;
            }
        }
    }
    for (auto& x : out) x *= u0_over_v0;
    return out;
}

std::vector<double> abs_partial_sums(const DiscreteMeasure& v, int n) {
    std::vector<double> out;
    out.reserve(v.weights.size());
    double acc = 0.0;
    for (int l = 0; l < v.truncation(); ++l) {
        acc += std::abs(v.weights[l] * std::pow(v.nodes[l], n - 2));
        out.push_back(acc);
    }
    return out;
}

DiscreteMeasure case1_measure(double q, int L) {
    const double q3 = q * q * q;
    DiscreteMeasure m;
    const Complex head = qpochhammer_inf(q * q, q3);
    Complex ratio = 1.0;  // q^{2ℓ}/(q³;q³)_ℓ
    double mu = 1.0;
    for (int l = 0; l < L; ++l) {
        m.weights.push_back(head * ratio);
        m.nodes.emplace_back(mu);
        ratio *= q * q / (1.0 - std::pow(q3, l + 1));
        mu *= q;
    }
    return m;
}

DiscreteMeasure case13_measure(double q, double a, double c, int L) {
    const double q3 = q * q * q;
    const double ci3 = 1.0 / (c * c * c);
    DiscreteMeasure m;
    const Complex head = qpochhammer_inf(a * q3, q3) / qpochhammer_inf(a * ci3 * q3, q3);
    Complex ratio = 1.0;  // (c^{−3};q³)_ℓ (aq³)^ℓ/(q³;q³)_ℓ
    double mu = 1.0;
    for (int l = 0; l < L; ++l) {
        m.weights.push_back(head * ratio);
        m.nodes.emplace_back(mu);
        ratio *= (1.0 - ci3 * std::pow(q3, l)) * a * q3 / (1.0 - std::pow(q3, l + 1));
        mu *= q;
    }
    return m;
}

Report root_of_unity_identities(const Poly& eta2, const CycScalar& mu, const CycScalar& b1) {
    if (eta2.degree() != 2 || !eta2.leading().is_one()) throw InvalidArgument("eta must be monic of degree 2");
    const CycScalar tau = eta2[1];
    const CycScalar a1 = eta2[0] - tau * tau;
    const Poly p1{-tau, 1};
    const Poly p2{tau * b1 - a1, -(tau + b1), 1};
    const CycScalar w = CycScalar::omega();
    CycScalar wp[3] = {1, w, w * w};

    auto weighted = [&](const Poly& f) {
        CycScalar acc;
        for (const auto& j : wp) {
            const CycScalar x = j * mu;
            acc += j * eta2(x) * f(x);
        }
        return acc;
    };
    Report rep;
    const CycScalar total = weighted(Poly{1});
    rep.add("sum_p w^p eta(w^p mu) = 3 mu^2", total == 3 * mu * mu, total.str());
    for (int which = 1; which <= 2; ++which) {
        const Poly& pj = which == 1 ? p1 : p2;
        bool ok = true;
        std::string detail;
        for (int e = 0; e <= 2 && ok; ++e) {
            const CycScalar s = weighted(pj * Poly::monomial(1, 3 * e));
            if (!s.is_zero()) {
                ok = false;
                detail = "e = " + std::to_string(e) + ": " + s.str();
            }
        }
        rep.add("p_" + std::to_string(which) + " contribution vanishes", ok, detail);
    }
    return rep;
}

MeasureRun compare_case_measure(const CubicCase& c, const QParam& q, int L, int nmax) {
    if (c.id != 1 && c.id != 13) throw InvalidArgument("discrete representation implemented for cases 1 and 13");
    const double qd = real_of(q.value(), "q");
    if (!(qd > 0.0 && qd < 1.0)) throw InvalidArgument("discrete representation needs 0 < q < 1");
    {
        const Report val = validate_case(c, q);
        if (const Check* f = val.first_failure()) throw InvalidArgument("case parameters invalid: " + f->name);
    }
    DiscreteMeasure m, m2;
    if (c.id == 1) {
        m = case1_measure(qd, L);
        m2 = case1_measure(qd, 2 * L);
    } else {
        const double a = real_of(c.param("a"), "a");
        const double cc = real_of(c.param("c"), "c");
        if (!(a > 0.0 && a < 1.0 / qd)) throw InvalidArgument("case 13 representation needs 0 < a < 1/q");
        m = case13_measure(qd, a, cc, L);
        m2 = case13_measure(qd, a, cc, 2 * L);
    }
    const Poly eta = case_eta(c, q);
    const QParam Q = q.power(3);
    const PearsonPair pair = c.family == Family::LittleLaguerre ? laguerre_pair(c.param("a"), Q)
                                                                : jacobi_pair(c.param("a"), c.param("b"), Q);
    const MomentFunctional v = pearson_moments(pair, CycScalar(1), nmax / 3 + 1, Q);
    const MomentFunctional u = lift_functional(v, eta, 3, CycScalar(1));

    const auto num = discrete_lift(m, eta, 1.0, nmax);
    const auto num2 = discrete_lift(m2, eta, 1.0, nmax);
    MeasureRun run;
    run.L = L;
    for (int n = 0; n <= nmax; ++n) {
        MomentComparison row;
        row.n = n;
        row.exact = u[n].to_complex();
        row.numeric = num[n];
        row.abs_err = std::abs(row.exact - row.numeric);
        run.max_err = std::max(run.max_err, row.abs_err);
        run.doubling_change = std::max(run.doubling_change, std::abs(num2[n] - num[n]));
        run.rows.push_back(row);
    }
    return run;
}

}  // namespace qmap
