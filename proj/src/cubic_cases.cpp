#include "qmap/cubic_cases.hpp"

#include <algorithm>
#include <fstream>

#include <json.hpp>

#include "qmap/error.hpp"
#include "qmap/mapping.hpp"

namespace qmap {

namespace {

using S = CycScalar;

Poly P(std::initializer_list<CycScalar> c) { return Poly(c); }

std::string case_label(int id) { return "case " + std::to_string(id); }

void require(Report& rep, const std::string& name, bool ok, const std::string& detail = {}) {
    rep.add(name, ok, detail);
}

std::vector<std::string> required_params(int id) {
    switch (id) {
        case 1: case 4: case 5: case 6: return {"tau", "a"};
        case 13: return {"tau", "a", "b", "c"};
        default: return {"tau", "a", "b"};
    }
}

}  // namespace

std::string family_name(Family f) {
    return f == Family::LittleLaguerre ? "little-q3-laguerre" : "little-q3-jacobi";
}

PearsonPair laguerre_pair(const CycScalar& a, const QParam& Q) {
    const S& Qv = Q.value();
    const S k = (a * Qv * (Qv - 1)).inv();
    return {Poly::x(), P({a * Qv - 1, 1}) * k};
}

PearsonPair jacobi_pair(const CycScalar& a, const CycScalar& b, const QParam& Q) {
    const S& Qv = Q.value();
    const S k = (a * b * Qv * Qv * (Qv - 1)).inv();
    return {P({0, -(b * Qv).inv(), 1}), P({1 - a * Qv, a * b * Qv * Qv - 1}) * k};
}

ACDTriple laguerre_acd(const CycScalar& a, const QParam& Q, const CycScalar& u0) {
    const S& Qv = Q.value();
    const S ell = Qv / (a * (Qv - 1));
    return {Poly::x(), P({a * Qv - 1, 1}) * ell - Poly::constant(Qv), Poly::constant(u0 * ell)};
}

ACDTriple jacobi_acd(const CycScalar& a, const CycScalar& b, const QParam& Q, const CycScalar& u0) {
    const S& Qv = Q.value();
    const S ell = Qv / (a * b * (Qv - 1));
    ACDTriple t;
    t.A = P({0, -b.inv(), 1});
    t.C = P({1 - a * Qv, a * b * Qv * Qv - 1}) * ell + P({Qv / b, -(Qv * Qv) * (Qv.inv() + 1)});
    t.D = Poly::constant(u0 * (ell * (a * b * Qv * Qv - 1) - Qv * Qv));
    return t;
}

Report laguerre_regularity(const CycScalar& a, const QParam& Q, int N) {
    Report rep;
    rep.add("a != 0", !a.is_zero());
    std::string bad;
    for (int n = 0; n <= N && bad.empty(); ++n)
        if (a == Q.pow(-n - 1)) bad = "a = Q^-" + std::to_string(n + 1);
    rep.add("a != Q^{-n-1}", bad.empty(), bad);
    return rep;
}

Report jacobi_regularity(const CycScalar& a, const CycScalar& b, const QParam& Q, int N) {
    Report rep;
    const S ab = a * b;
    rep.add("ab != 0", !ab.is_zero());
    std::string bad_ab, bad_a, bad_b;
    for (int n = 0; n <= N; ++n) {
        const S inv_n = Q.pow(-n);
        const S inv_n1 = Q.pow(-n - 1);
        if (bad_ab.empty() && ab == inv_n) bad_ab = "ab = Q^-" + std::to_string(n);
        if (bad_a.empty() && a == inv_n1) bad_a = "a = Q^-" + std::to_string(n + 1);
        if (bad_b.empty() && b == inv_n1) bad_b = "b = Q^-" + std::to_string(n + 1);
    }
    rep.add("ab != Q^{-n}", bad_ab.empty(), bad_ab);
    rep.add("a != Q^{-n-1}", bad_a.empty(), bad_a);
    rep.add("b != Q^{-n-1}", bad_b.empty(), bad_b);
    return rep;
}

const CycScalar& CubicCase::param(const std::string& name) const {
    auto it = params.find(name);
    if (it == params.end()) throw InvalidArgument(case_label(id) + " has no parameter '" + name + "'");
    return it->second;
}

CubicCase make_case(int id, std::map<std::string, CycScalar> params) {
    if (id < 1 || id > 13) throw InvalidArgument("case id must lie in 1..13, got " + std::to_string(id));
    CubicCase c;
    c.id = id;
    c.family = (id == 1 || id == 4 || id == 5 || id == 6) ? Family::LittleLaguerre : Family::LittleJacobi;
    c.expected_class = id <= 3 ? 1 : 2;
    c.params = std::move(params);
    return c;
}

CycScalar case_a01(const CubicCase& c, const QParam& q) {
    const S& t = c.param("tau");
    switch (c.id) {
        case 6: case 10: case 11: case 12: {
            const S one_q = 1 + q.value();
            return -(t * t * q.bracket(3)) / (one_q * one_q);
        }
        case 13: {
            const S& cc = c.param("c");
            return -(cc * cc + t * cc + t * t);
        }
        default: return -(t * t);
    }
}

Poly case_eta(const CubicCase& c, const QParam& q) {
    const S& t = c.param("tau");
    return P({case_a01(c, q) + t * t, t, 1});
}

Report validate_case(const CubicCase& c, const QParam& q, int N) {
    Report rep;
    for (const auto& name : required_params(c.id)) {
        if (!c.has(name)) {
            rep.add("parameter " + name + " present", false);
            return rep;
        }
    }
    const S& qv = q.value();
    const S qi = qv.inv();
    const S& t = c.param("tau");
    const S& a = c.param("a");
    const S t3 = t.pow(3);
    const S one_q3 = (1 + qv).pow(3);
    const bool b_tau = c.has("b") && !t.is_zero() && c.param("b") == -(t3 * qv.pow(3)).inv();

    switch (c.id) {
        case 1: case 2:
            require(rep, "a = q^-1", a == qi);
            require(rep, "tau^3 = -1", t3 == S(-1));
            break;
        case 3:
            require(rep, "a = q^-1", a == qi);
            require(rep, "tau^3 != -1", t3 != S(-1));
            require(rep, "tau != 0", !t.is_zero());
            require(rep, "b = -tau^-3 q^-3", b_tau);
            break;
        case 4:
            require(rep, "a = q^-1", a == qi);
            require(rep, "tau != 0", !t.is_zero());
            require(rep, "tau^3 != -1", t3 != S(-1));
            break;
        case 5: case 7:
            require(rep, "a != q^-1", a != qi);
            require(rep, "tau^3 = -1", t3 == S(-1));
            break;
        case 6: case 10:
            require(rep, "tau^3 = -(1+q)^3", t3 == -one_q3);
            break;
        case 8:
            require(rep, "a = q^-1", a == qi);
            require(rep, "tau^3 != -1", t3 != S(-1));
            require(rep, "tau != 0", !t.is_zero());
            require(rep, "b != -tau^-3 q^-3", !t.is_zero() && !b_tau);
            break;
        case 9:
            require(rep, "a != q^-1", a != qi);
            require(rep, "tau^3 != -1", t3 != S(-1));
            require(rep, "tau != 0", !t.is_zero());
            require(rep, "b = -tau^-3 q^-3", b_tau);
            break;
        case 11:
            require(rep, "tau^3 = -q^-3 (1+q)^3", t3 == -(one_q3 * qi.pow(3)));
            require(rep, "b = 1", c.param("b") == S(1));
            break;
        case 12:
            require(rep, "tau != 0", !t.is_zero());
            require(rep, "tau^3 != -(1+q)^3", t3 != -one_q3);
            require(rep, "b = -(1+q)^3 tau^-3 q^-6",
                    !t.is_zero() && c.param("b") == -(one_q3 / (t3 * qv.pow(6))));
            break;
        case 13: {
            const S& cc = c.param("c");
            require(rep, "c != 0", !cc.is_zero());
            require(rep, "c != -tau q/(1+q)", cc != -(t * qv) / (1 + qv));
            require(rep, "c^2 + tau c + tau^2 != 0", !(cc * cc + t * cc + t * t).is_zero());
            require(rep, "(tau+c)^3 = -1", (t + cc).pow(3) == S(-1));
            require(rep, "b = c^-3 q^-3", !cc.is_zero() && c.param("b") == (cc.pow(3) * qv.pow(3)).inv());
            break;
        }
        default: throw InvalidArgument("case id must lie in 1..13");
    }
    const QParam Q = q.power(3);
    rep.append(c.family == Family::LittleLaguerre ? laguerre_regularity(a, Q, N)
                                                  : jacobi_regularity(a, c.param("b"), Q, N));
    return rep;
}

PearsonPair expected_pair(const CubicCase& cs, const QParam& qp) {
    const S& q = qp.value();
    const S i = q.inv();
    const S m = (q - 1).inv();
    const S& t = cs.param("tau");
    const S& a = cs.param("a");
    const S b = cs.has("b") ? cs.param("b") : S(0);
    const S t2 = t * t;
    const S t3 = t2 * t;
    const S q1 = q + 1;
    switch (cs.id) {
        case 1: return {P({1}), P({-t2, t, m}) * i};
        case 2: return {P({-i.pow(3) / b, 0, 0, 1}), P({t2, -t, m * (q.pow(4) * b - 1)}) * (i.pow(4) / b)};
        case 3:
            return {P({i * t3, -i * (1 - q) * t2, i * (1 - q) * t, 1}),
                    P({i * t2, -i * t, m * (1 - i.pow(4) / b)})};
        case 4: return {P({t * i, 1}), P({q * q - 1, 0, t * q, 1}) * (i * i * m)};
        case 5: return {Poly::x(), P({q * m * (a * q * q - 1), -t2, t, m}) * (i.pow(3) / a)};
        case 6: return {Poly::x(), P({q * q * m * (a * q - 1), -t2 / q1, t, m}) * (i.pow(3) / a)};
        case 7:
            return {P({0, -i.pow(3) / b, 0, 0, 1}),
                    P({q - a * q.pow(3), t2 * (q - 1), t * (1 - q), a * b * q.pow(6) - 1}) *
                        (i.pow(6) * m / (a * b))};
        case 8:
            return {P({-i.pow(4) * t / b, -i.pow(3) / b, 0, i * t, 1}),
                    P({1 - q * q, 0, t * q * (b * q.pow(3) - 1), q.pow(5) * b - 1}) * (i.pow(5) * m / b)};
        case 9: {
            const S ab = a * b;
            return {P({0, t3 * i, t2 * i * (q - 1), i * t * (1 - q), 1}),
                    P({ab * q.pow(4) * t3 * (q - 1) + 1 - a * q, ab * q.pow(5) * t2 * (q - 1),
                       ab * q.pow(5) * t * (1 - q), ab * q.pow(6) - 1}) *
                        (i.pow(6) * m / ab)};
        }
        case 10:
            return {P({0, -i.pow(3) / b, 0, 0, 1}),
                    P({q * q * m * (1 - a * q), t2 / q1, -t, m * (a * b * q.pow(6) - 1)}) * (i.pow(6) / (a * b))};
        case 11:
            return {P({0, t3 * i / q1.pow(3), t2 * i * (q - 1) / q1.pow(2), t * i * (1 - q) / q1, 1}),
                    P({q1.pow(-3) * m * i * (a * q.pow(3) * t3 * (q - 1) + q1.pow(3) * (1 - a)),
                       t2 / q1.pow(2) * (a * q.pow(3) + 1), -t * i / q1 * (a * q.pow(4) + 1),
                       i * i * m * (a * q.pow(6) - 1)}) *
                        (i.pow(4) / a)};
        case 12:
            return {P({0, q * t3 / q1.pow(3), t2 * (q - 1) / q1, t * i * (1 - q), 1}),
                    P({m / a / q1.pow(3) * t3 * (a * q - 1), t2 / q1, -t * i,
                       a.inv() * m / q1.pow(3) * (t3 + a * (q.pow(3) + 1) + 3 * a * q * q1)})};
        case 13: {
            const S& c = cs.param("c");
            const S ab = a * b;
            return {P({0, -c.pow(3) * i, c * c * i * (q - 1), c * i * (q - 1), 1}),
                    P({-m * (c.pow(3) * ab * q.pow(4) * (q - 1) + q * (a - 1)),
                       c * c * (ab * q.pow(5) + 1) + t * (t + 2 * c), c * (ab * q.pow(5) - 1) - t,
                       m * (ab * q.pow(6) - 1)}) *
                        (i.pow(6) / ab)};
        }
        default: throw InvalidArgument("case id must lie in 1..13");
    }
}

CaseBundle build_case(const CubicCase& c, const QParam& q, int N) {
    if (N < 3) throw InvalidArgument("build_case needs N >= 3");
    {
        const Report val = validate_case(c, q, N);
        if (const Check* f = val.first_failure()) throw CaseError("validate", f->name + " " + f->detail);
    }
    CaseBundle b;
    b.spec = c;
    b.q = q.value();
    b.a01 = case_a01(c, q);
    b.eta = case_eta(c, q);
    const QParam Q = q.power(3);
    const int Nv = (2 * N) / 3 + 1;
    try {
        b.pair_v = c.family == Family::LittleLaguerre ? laguerre_pair(c.param("a"), Q)
                                                      : jacobi_pair(c.param("a"), c.param("b"), Q);
        b.v = pearson_moments(b.pair_v, CycScalar(1), Nv, Q);
    } catch (const Error& e) {
        throw CaseError("v-moments", e.what());
    }
    b.acd_v = acd_from_pearson(b.pair_v, b.v, Q);
    b.u = lift_functional(b.v, b.eta, 3, CycScalar(1));
    try {
        b.p = recurrence_from_moments(b.u, N);
    } catch (const Error& e) {
        throw CaseError("u-recurrence", e.what());
    }
    try {
        b.qn = recurrence_from_moments(b.v, N / 3);
    } catch (const Error& e) {
        throw CaseError("v-recurrence", e.what());
    }
    b.mapped_levels = N / 3;
    for (int n = 0; n <= b.mapped_levels; ++n) {
        if (b.p.ops[3 * n] != power_substitute(b.qn.ops[n], 3)) {
            b.mapping_mismatch = n;
            break;
        }
    }
    b.acd_u = acd_mapped(b.acd_v, b.eta, 3, q, b.u[0], b.v[0]);
    try {
        b.cls = classify(b.acd_u, q);
    } catch (const Error& e) {
        throw CaseError("classify", e.what());
    }
    return b;
}

Report case_report(const CaseBundle& b) {
    const QParam q(b.q);
    const QParam Q = q.power(3);
    Report rep;
    rep.add("p_{3n} = q_n(x^3)", b.mapping_mismatch < 0,
            b.mapping_mismatch < 0 ? "n <= " + std::to_string(b.mapped_levels)
                                   : "fails at n = " + std::to_string(b.mapping_mismatch));

    const int lim = std::min(17, b.p.ops.size());
    const OrthogonalityReport orth = orthogonality_check(b.u, b.p.ops, lim);
    rep.add("orthogonality of p_n, n, m <= " + std::to_string(lim - 1), orth.ok,
            orth.ok ? std::to_string(orth.checked_pairs) + " pairs" : orth.message);

    rep.add("class", b.cls.s == b.spec.expected_class,
            "got " + std::to_string(b.cls.s) + ", expected " + std::to_string(b.spec.expected_class));
    const PearsonPair expect = expected_pair(b.spec, q);
    rep.add("Phi", b.cls.phi == expect.phi, b.cls.phi == expect.phi ? "" : "got " + b.cls.phi.str() + ", expected " + expect.phi.str());
    rep.add("Psi", b.cls.psi == expect.psi, b.cls.psi == expect.psi ? "" : "got " + b.cls.psi.str() + ", expected " + expect.psi.str());

    const auto res = pearson_residual(b.u, {b.cls.phi, b.cls.psi}, q);
    rep.add("H_q(Phi u) = Psi u", !res.empty() && all_zero(res), std::to_string(res.size()) + " moments");

    const PearsonPair up = ascend_pearson(b.pair_v, b.eta, 3, q);
    const auto res_up = pearson_residual(b.u, up, q);
    rep.add("ascended pair annihilates u", !res_up.empty() && all_zero(res_up),
            std::to_string(res_up.size()) + " moments");

    const LaurentSeries su = series_from_functional(b.u);
    const LaurentSeries sv = series_from_functional(b.v);
    const SeriesCheck st = check_zero(stieltjes_residual(b.acd_u, su, q));
    rep.add("Stieltjes residual", st.ok && st.depth >= 12, "depth " + std::to_string(st.depth));
    const SeriesCheck sq = verify_susvq(su, sv, b.eta, 3, q);
    rep.add("series identity", sq.ok && sq.depth >= 12, "depth " + std::to_string(sq.depth));

    const int s_tilde = classify(b.acd_v, Q).s;
    const Report bounds = class_bounds_check(b.cls.s, s_tilde, 3);
    rep.add("class bounds", bounds.ok() && s_tilde == 0,
            "s = " + std::to_string(b.cls.s) + ", s~ = " + std::to_string(s_tilde));
    return rep;
}

Case13Reconstruction inverse_reconstruct_case13(const CycScalar& a, const CycScalar& c, const CycScalar& tau,
                                                const QParam& qp) {
    const S& q = qp.value();
    const S q3 = q.pow(3);
    const S c3 = c.pow(3);
    if (c3 == a * q3) throw InvalidArgument("singular configuration: c^3 = a q^3");
    if (c.is_zero()) throw InvalidArgument("case 13 needs c != 0");
    const CubicCase cc = make_case(13, {{"a", a}, {"b", (c3 * q3).inv()}, {"c", c}, {"tau", tau}});
    const CaseBundle b = build_case(cc, qp, 24);

    Case13Reconstruction out;
    const S K = c * c + tau * c + tau * tau;
    const S a01 = -K;
    const Poly psi = expected_pair(cc, qp).psi;

    // ⟨u, p_1⟩ = ⟨u, p_2⟩ = 0 fix u_1, u_2; ⟨u, Ψ⟩ = 0 fixes u_3; ⟨u, p_3⟩ = 0 gives r_0 = u_3/u_0.
    const S u0 = b.u[0];
    const S u1 = tau * u0;
    const S u2 = (tau * tau - K) * u0;
    const S u3 = -(psi[0] * u0 + psi[1] * u1 + psi[2] * u2) / psi[3];
    out.r0 = u3 / u0;
    out.b02 = tau + (tau.pow(3) - out.r0) / a01;
    out.b01 = -tau - out.b02;
    out.a02 = out.b01 * out.b02 - a01 - tau * tau;

    const S den = (c3 - a * q3) * K;
    out.r0_closed = c3 * (1 - a * q3) / (c3 - a * q3);
    out.b01_closed = c + a * q3 * (c3 - 1) / den;
    out.b02_closed = c + c3 * (1 - c3) / den;
    out.a02_closed = c3 * q3 * a * (1 - c3) / (den * den);

    out.b01_moments = b.p.rec.b(1);
    out.b02_moments = b.p.rec.b(2);
    out.a02_moments = b.p.rec.a(2);

    Report& r = out.checks;
    r.add("solved moments agree with lifted u", u1 == b.u[1] && u2 == b.u[2] && u3 == b.u[3]);
    r.add("r0 closed form", out.r0 == out.r0_closed, out.r0.str() + " vs " + out.r0_closed.str());
    r.add("b01 + b02 = -tau", out.b01 + out.b02 == -tau);
    r.add("b01 closed form", out.b01 == out.b01_closed, out.b01.str() + " vs " + out.b01_closed.str());
    r.add("b02 closed form", out.b02 == out.b02_closed, out.b02.str() + " vs " + out.b02_closed.str());
    r.add("a02 closed form", out.a02 == out.a02_closed, out.a02.str() + " vs " + out.a02_closed.str());
    r.add("block relations agree with recurrence of u",
          out.b01 == out.b01_moments && out.b02 == out.b02_moments && out.a02 == out.a02_moments,
          "b1 = " + out.b01_moments.str() + ", b2 = " + out.b02_moments.str() + ", a2 = " + out.a02_moments.str());

    const std::vector<Poly> basis{b.p.ops[0], b.p.ops[1], b.p.ops[2]};
    out.descent = descend_pearson(expected_pair(cc, qp), 2, basis, 3, qp, b.u, b.v);
    const Poly f0_expected = P({0, -c3, 1});
    const Poly g0_expected = P({c3 * (1 - a * q3), a * q3 - c3}) * (q3 * a * (q3 - 1)).inv();
    r.add("f0 = y(y - c^3)", out.descent.pair.phi == f0_expected, out.descent.pair.phi.str());
    r.add("g0 closed form", out.descent.pair.psi == g0_expected, out.descent.pair.psi.str());
    out.v_pair_expected = jacobi_pair(a, (c3 * q3).inv(), qp.power(3));
    r.add("v is little q^3-Jacobi (a, c^-3 q^-3)", out.descent.pair == out.v_pair_expected);
    return out;
}

std::vector<FixtureEntry> load_fixtures(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open fixture file " + path);
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("fixture file " + path + ": " + e.what());
    }
    if (!doc.is_array()) throw ParseError("fixture file must hold a JSON array");
    std::vector<FixtureEntry> out;
    for (const auto& e : doc) {
        try {
            FixtureEntry f;
            f.q = e.at("q").get<std::string>();
            f.tag = e.value("tag", std::string("default"));
            std::map<std::string, CycScalar> params;
            for (const auto& [k, v] : e.at("params").items()) params.emplace(k, CycScalar::parse(v.get<std::string>()));
            f.c = make_case(e.at("id").get<int>(), std::move(params));
            out.push_back(std::move(f));
        } catch (const nlohmann::json::exception& ex) {
            throw ParseError("fixture entry " + e.dump() + ": " + ex.what());
        }
    }
    return out;
}

std::vector<CubicCase> fixtures_for(const std::vector<FixtureEntry>& all, const std::string& q,
                                    const std::string& tag) {
    const CycScalar qv = CycScalar::parse(q);
    std::vector<CubicCase> out;
    for (const auto& e : all)
        if (e.tag == tag && CycScalar::parse(e.q) == qv) out.push_back(e.c);
    std::sort(out.begin(), out.end(), [](const CubicCase& x, const CubicCase& y) { return x.id < y.id; });
    return out;
}

}  // namespace qmap
