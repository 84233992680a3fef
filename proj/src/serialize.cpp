#include "qmap/serialize.hpp"

#include "qmap/error.hpp"

namespace qmap {

namespace {

Json scalars(std::span<const CycScalar> v) { return scalars_json(v); }

std::vector<CycScalar> scalars_from(const Json& j) {
    if (!j.is_array()) throw ParseError("expected an array of scalars");
    std::vector<CycScalar> out;
    out.reserve(j.size());
    for (const auto& e : j) out.push_back(scalar_from_json(e));
    return out;
}

Json polys(const std::vector<Poly>& v) {
    Json out = Json::array();
    for (const auto& p : v) out.push_back(to_json(p));
    return out;
}

Json complex_json(const Complex& z) { return Json::array({z.real(), z.imag()}); }

}  // namespace

Json to_json(const CycScalar& s) { return s.str(); }

Json scalars_json(std::span<const CycScalar> v) {
    Json out = Json::array();
    for (const auto& s : v) out.push_back(s.str());
    return out;
}

Json to_json(const Poly& p) { return scalars(p.coeffs()); }

Json to_json(const MomentFunctional& u) {
    Json j;
    j["order"] = u.order();
    j["moments"] = scalars(u.moments());
    return j;
}

Json to_json(const Recurrence& r) {
    Json j;
    j["b"] = scalars(r.b_values());
    j["a"] = scalars(r.a_values());
    return j;
}

Json to_json(const OPSequence& ops) { return polys(ops.polys()); }

Json to_json(const PearsonPair& p) {
    Json j;
    j["phi"] = to_json(p.phi);
    j["psi"] = to_json(p.psi);
    return j;
}

Json to_json(const ACDTriple& t) {
    Json j;
    j["A"] = to_json(t.A);
    j["C"] = to_json(t.C);
    j["D"] = to_json(t.D);
    return j;
}

Json to_json(const MappingData& m) {
    Json j;
    j["k"] = m.k;
    j["m"] = m.m;
    j["r0"] = to_json(m.r0);
    j["pi_k"] = to_json(m.pi_k);
    j["theta_m"] = to_json(m.theta_m);
    j["eta"] = to_json(m.eta);
    j["r"] = scalars(m.r);
    j["s"] = scalars(m.s);
    j["conditions"] = to_json(m.conditions);
    return j;
}

Json to_json(const ClassReport& c) {
    Json j;
    j["class"] = c.s;
    j["phi"] = to_json(c.phi);
    j["psi"] = to_json(c.psi);
    j["reduced"] = to_json(c.reduced);
    j["trace"] = polys(c.trace);
    return j;
}

Json to_json(const Report& r) {
    Json j;
    j["ok"] = r.ok();
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        Json e;
        e["name"] = c.name;
        e["ok"] = c.ok;
        if (!c.detail.empty()) e["detail"] = c.detail;
        checks.push_back(std::move(e));
    }
    j["checks"] = std::move(checks);
    return j;
}

Json to_json(const SeriesCheck& s) {
    Json j;
    j["ok"] = s.ok;
    j["depth"] = s.depth;
    j["first_nonzero"] = s.first_nonzero ? Json(*s.first_nonzero) : Json(nullptr);
    j["poly_part_nonzero"] = s.poly_part_nonzero;
    return j;
}

Json to_json(const MomentComparison& m) {
    Json j;
    j["n"] = m.n;
    j["exact"] = complex_json(m.exact);
    j["numeric"] = complex_json(m.numeric);
    j["abs_err"] = m.abs_err;
    return j;
}

CycScalar scalar_from_json(const Json& j) {
    if (j.is_string()) return CycScalar::parse(j.get<std::string>());
    if (j.is_number_integer()) return CycScalar(j.get<long>());
    throw ParseError("scalar must be a string or an integer");
}

Poly poly_from_json(const Json& j) { return Poly(scalars_from(j)); }

MomentFunctional functional_from_json(const Json& j) {
    MomentFunctional u(scalars_from(j.at("moments")));
    if (j.contains("order") && j.at("order").get<int>() != u.order()) {
        throw ParseError("moment count disagrees with the recorded order");
    }
    return u;
}

Recurrence recurrence_from_json(const Json& j) { return Recurrence(scalars_from(j.at("b")), scalars_from(j.at("a"))); }

ACDTriple acd_from_json(const Json& j) {
    return {poly_from_json(j.at("A")), poly_from_json(j.at("C")), poly_from_json(j.at("D"))};
}

}  // namespace qmap
