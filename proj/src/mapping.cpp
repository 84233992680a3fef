#include "qmap/mapping.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "qmap/error.hpp"

namespace qmap {

namespace {

std::string level_msg(const std::string& what, int n) { return what + " fails at n = " + std::to_string(n); }

std::optional<Poly> eta_from_blocks(const BlockView& view, int m) {
    const int k = view.k();
    const Poly theta = delta_det(view, 0, 1, m - 1);
    const auto [quot, rem] = divrem(delta_det(view, 0, m + 2, m + k - 1), theta);
    if (!rem.is_zero()) return std::nullopt;
    return quot;
}

// r_n(x) = a_n^{(m+1)}Δ_n(m+3,m+k−1) − a_0^{(m+1)}Δ_0(m+3,m+k−1)
//        + a_n^{(m)}Δ_{n−1}(m+2,m+k−2) − a_0^{(m)}Δ_0(1,m−2)η,   n ≥ 1
Poly r_poly(const BlockView& view, int m, const Poly& eta, int n) {
    const int k = view.k();
    Poly out = delta_det(view, n, m + 3, m + k - 1) * view.a(n, m + 1);
    out -= delta_det(view, 0, m + 3, m + k - 1) * view.a(0, m + 1);
    out += delta_det(view, n - 1, m + 2, m + k - 2) * view.a(n, m);
    out -= delta_det(view, 0, 1, m - 2) * eta * view.a(0, m);
    return out;
}

void require_block_shape(const BlockView& view, int m) {
    if (view.k() < 2) throw InvalidArgument("polynomial mapping needs k >= 2");
    if (m < 0 || m >= view.k()) throw InvalidArgument("mapping offset m must lie in [0, k-1]");
}

}  // namespace

int max_condition_level(const BlockView& view, int m) {
    const int avail = std::min(view.recurrence().b_count(), view.recurrence().a_count());
    const int top = avail - m - view.k();
    return top < 0 ? -1 : top / view.k();
}

Report check_conditions(const BlockView& view, int m, int N) {
    require_block_shape(view, m);
    if (N > max_condition_level(view, m)) {
        throw TruncationError("block data supports condition levels up to " +
                              std::to_string(max_condition_level(view, m)) + ", requested " + std::to_string(N));
    }
    const int k = view.k();
    Report rep;

    {
        std::optional<int> bad;
        for (int n = 1; n <= N && !bad; ++n)
            if (view.b(n, m) != view.b(0, m)) bad = n;
        rep.add("(i) b_n^(m) independent of n", !bad, bad ? level_msg("b_n^(m) = b_0^(m)", *bad) : "");
    }
    {
        const Poly d0 = delta_det(view, 0, m + 2, m + k - 1);
        std::optional<int> bad;
        for (int n = 1; n <= N && !bad; ++n)
            if (delta_det(view, n, m + 2, m + k - 1) != d0) bad = n;
        rep.add("(ii) Delta_n(m+2, m+k-1) independent of n", !bad,
                bad ? level_msg("Delta_n = Delta_0", *bad) : "");
    }
    const auto eta = eta_from_blocks(view, m);
    rep.add("(iii) theta_m divides Delta_0(m+2, m+k-1)", eta.has_value(),
            eta ? "eta = " + eta->str() : "nonzero remainder");
    if (!eta) {
        rep.add("(iv) r_n(x) independent of x", false, "requires (iii)");
        return rep;
    }
    std::optional<int> bad;
    for (int n = 1; n <= N && !bad; ++n)
        if (r_poly(view, m, *eta, n).degree() > 0) bad = n;
    rep.add("(iv) r_n(x) independent of x", !bad, bad ? level_msg("deg r_n <= 0", *bad) : "");
    return rep;
}

MappedPair build_mapping(const BlockView& view, int m, const CycScalar& r0, int N) {
    MappingData data;
    data.k = view.k();
    data.m = m;
    data.r0 = r0;
    data.conditions = check_conditions(view, m, N);
    if (const Check* fail = data.conditions.first_failure()) {
        throw InconsistencyError("mapping condition " + fail->name + " violated: " + fail->detail);
    }
    const int k = view.k();
    data.eta = *eta_from_blocks(view, m);
    data.theta_m = delta_det(view, 0, 1, m - 1);
    data.pi_k = delta_det(view, 0, 1, m) * data.eta -
                delta_det(view, 0, m + 3, m + k - 1) * view.a(0, m + 1) + Poly::constant(r0);

    data.r.push_back(r0);
    for (int n = 1; n <= N; ++n) {
        data.r.push_back(r0 + r_poly(view, m, data.eta, n)[0]);
        CycScalar s = view.a(n, m);
        for (int i = 1; i < k; ++i) s *= view.a(n - 1, m + i);
        data.s.push_back(std::move(s));
    }
    OPSequence q = ops_from_recurrence(data.q_recurrence(), N);
    return {std::move(data), std::move(q)};
}

Report verify_mapping_identity(const OPSequence& p, const MappingData& map, const OPSequence& q, int N) {
    Report rep;
    std::optional<int> bad;
    for (int n = 0; n <= N && !bad; ++n) {
        if (p[map.k * n + map.m] != map.theta_m * compose(q[n], map.pi_k)) bad = n;
    }
    rep.add("p_{kn+m} = theta_m q_n(pi_k)", !bad, bad ? level_msg("identity", *bad) : "");
    return rep;
}

Report verify_interleave(const BlockView& view, const OPSequence& p, const MappingData& map,
                         const OPSequence& q, int N) {
    if (map.eta.is_zero()) throw InvalidArgument("interleave formula needs eta != 0");
    const int k = map.k;
    const int m = map.m;
    Report rep;
    for (int j = 0; j < k; ++j) {
        std::optional<int> bad;
        for (int n = 0; n <= N && !bad; ++n) {
            CycScalar prod(1);
            for (int i = 1; i <= j + 1; ++i) prod *= view.a(n, m + i);
            const Poly rhs = delta_det(view, n, m + 2, m + j) * compose(q[n + 1], map.pi_k) +
                             delta_det(view, n, m + j + 3, m + k - 1) * compose(q[n], map.pi_k) * prod;
            if (map.eta * p[k * n + m + j + 1] != rhs) bad = n;
        }
        rep.add("interleave j = " + std::to_string(j), !bad, bad ? level_msg("identity", *bad) : "");
    }
    return rep;
}

MomentFunctional lift_functional(const MomentFunctional& v, const Poly& eta, int k, const CycScalar& u0) {
    if (k < 2) throw InvalidArgument("lift needs k >= 2");
    if (eta.degree() != k - 1) throw InvalidArgument("lift needs deg eta = k - 1");
    if (!eta.leading().is_one()) throw InvalidArgument("lift needs monic eta");
    const CycScalar scale = u0 / v[0];
    std::vector<CycScalar> u(static_cast<std::size_t>((v.order() + 1) * k));
    for (int n = 0; n <= v.order(); ++n) {
        const CycScalar sv = scale * v[n];
        for (int i = 0; i < k; ++i) {
            u[static_cast<std::size_t>(k * n + (k - 1 - i))] = eta[static_cast<std::size_t>(i)] * sv;
        }
    }
    return MomentFunctional(std::move(u));
}

}  // namespace qmap
