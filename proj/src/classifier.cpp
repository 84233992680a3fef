#include "qmap/classifier.hpp"

#include <algorithm>
#include <string>

#include "qmap/error.hpp"

namespace qmap {

Reduction reduce_acd(const ACDTriple& t) {
    if (t.A.is_zero()) throw InvalidArgument("reduce_acd needs A != 0");
    Reduction out{t, {}};
    ACDTriple& r = out.triple;
    for (;;) {
        const Poly g = gcd(gcd(r.A, r.C), r.D);
        if (g.degree() <= 0) break;
        r.A = exact_div(r.A, g);
        r.C = exact_div(r.C, g);
        r.D = exact_div(r.D, g);
        out.trace.push_back(g);
    }
    const CycScalar lead = r.A.leading().inv();
    r.A *= lead;
    r.C *= lead;
    r.D *= lead;
    return out;
}

int class_from_acd(const ACDTriple& t) {
    const int s = std::max(t.C.degree() - 1, t.D.degree());
    if (s < 0) throw InvalidArgument("triple has constant C and zero D; no class is defined");
    return s;
}

PearsonPair phi_psi_from_acd(const ACDTriple& t, const QParam& q) {
    if (t.A.is_zero() || !t.A.leading().is_one()) throw InvalidArgument("phi_psi_from_acd needs monic A");
    const CycScalar scale = q.pow(-t.A.degree());
    return {dilate(t.A, q.value()) * scale, (hahn(t.A, q) + t.C * q.value().inv()) * scale};
}

ClassReport classify(const ACDTriple& t, const QParam& q) {
    Reduction red = reduce_acd(t);
    ClassReport rep;
    rep.s = class_from_acd(red.triple);
    PearsonPair pair = phi_psi_from_acd(red.triple, q);
    rep.phi = std::move(pair.phi);
    rep.psi = std::move(pair.psi);
    rep.reduced = std::move(red.triple);
    rep.trace = std::move(red.trace);
    return rep;
}

Report class_bounds_check(int s, int s_tilde, int k) {
    if (k < 1) throw InvalidArgument("class bounds need k >= 1");
    Report rep;
    const std::string vals = "s = " + std::to_string(s) + ", s~ = " + std::to_string(s_tilde) +
                             ", k = " + std::to_string(k);
    rep.add("s~ <= floor(s/k)", s_tilde <= s / k, vals);
    rep.add("s <= (s~+3)k - 3", s <= (s_tilde + 3) * k - 3, vals);
    rep.add("s <= k-1 implies s~ = 0", s > k - 1 || s_tilde == 0, vals);
    return rep;
}

Descent descend_pearson(const PearsonPair& pair_u, int s, std::span<const Poly> basis, int k,
                        const QParam& q, const MomentFunctional& u, const MomentFunctional& v) {
    if (k < 2) throw InvalidArgument("descent needs k >= 2");
    if (static_cast<int>(basis.size()) != k) throw InvalidArgument("descent needs the basis p_0..p_{k-1}");
    if (s < 0) throw InvalidArgument("class must be nonnegative");
    if (!all_zero(pearson_residual(u, pair_u, q))) {
        throw InconsistencyError("the given pair does not satisfy H_q(Phi u) = Psi u");
    }
    const int ell = 1 + s / k;
    const int p = ell * k - 1 - s;

    const Poly lhs = shift_up(pair_u.phi, k + p - 1);
    Poly rhs = shift_up(pair_u.psi, p);
    if (p >= 1) rhs += shift_up(pair_u.phi, p - 1) * q.bracket(p);
    rhs *= (q.pow(p) * q.bracket(k)).inv();

    Descent out;
    out.p = p;
    out.pair.phi = simple_set_decompose(lhs, basis, k)[0];
    out.pair.psi = simple_set_decompose(rhs, basis, k)[0];
    out.bound = std::max(out.pair.phi.degree() - 2, out.pair.psi.degree() - 1);

    const auto res = pearson_residual(v, out.pair, q.power(k));
    if (res.empty()) throw TruncationError("v carries too few moments to check the descended pair");
    if (!all_zero(res)) throw InconsistencyError("descended pair fails H_{q^k}(f_0 v) = g_0 v");
    return out;
}

PearsonPair ascend_pearson(const PearsonPair& pair_v, const Poly& eta, int k, const QParam& q) {
    if (eta.degree() != k - 1) throw InvalidArgument("ascent needs deg eta = k - 1");
    const CycScalar scale = q.pow(1 - k);
    const Poly phi_k = power_substitute(pair_v.phi, k);
    PearsonPair out;
    out.phi = dilate(eta, q.value()) * phi_k * scale;
    out.psi = (Poly::monomial(q.bracket(k), k - 1) * dilate(eta, q.value().inv()) *
                   power_substitute(pair_v.psi, k) +
               (hahn(eta, q) + hahn(eta, q.inverse()) * q.value().inv()) * phi_k) *
              scale;
    return out;
}

}  // namespace qmap
