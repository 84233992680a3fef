#include "qmap/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <thread>

#include "qmap/cubic_cases.hpp"
#include "qmap/error.hpp"
#include "qmap/measures.hpp"

#ifndef QMAP_DEFAULT_FIXTURES
#define QMAP_DEFAULT_FIXTURES "fixtures/cubic_cases.json"
#endif

namespace qmap {

namespace {

/// Configuration problems detected after parsing; mapped to exit status 2.
struct UsageError : Error {
    using Error::Error;
};

QParam parse_q(const std::string& text) {
    try {
        return QParam(CycScalar::parse(text));
    } catch (const Error& e) {
        throw UsageError("invalid q '" + text + "': " + e.what());
    }
}

const std::string& single_q(const JobConfig& c) {
    if (c.q.size() != 1) throw UsageError(c.command + " needs exactly one --q");
    return c.q.front();
}

std::optional<CycScalar> param(const JobConfig& c, const std::string& name) {
    auto it = c.params.find(name);
    if (it == c.params.end()) return std::nullopt;
    try {
        return CycScalar::parse(it->second);
    } catch (const Error& e) {
        throw UsageError("invalid --" + name + " '" + it->second + "': " + e.what());
    }
}

CycScalar required(const JobConfig& c, const std::string& name) {
    auto v = param(c, name);
    if (!v) throw UsageError(c.command + " needs --" + name);
    return *v;
}

std::string fixture_path(const JobConfig& c) { return c.fixtures.empty() ? QMAP_DEFAULT_FIXTURES : c.fixtures; }

std::vector<FixtureEntry> fixtures(const JobConfig& c) {
    try {
        return load_fixtures(fixture_path(c));
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
}

/// Case parameters: fixture values at q, overridden by explicit --a/--b/--c/--tau.
CubicCase resolve_case(const JobConfig& c, const std::string& q) {
    if (c.case_id < 1 || c.case_id > 13) throw UsageError(c.command + " needs --case in 1..13");
    std::map<std::string, CycScalar> params;
    const bool explicit_params = param(c, "tau").has_value();
    if (!explicit_params) {
        for (const auto& cs : fixtures_for(fixtures(c), q))
            if (cs.id == c.case_id) params = cs.params;
        if (params.empty()) {
            throw UsageError("no fixture for case " + std::to_string(c.case_id) + " at q = " + q +
                             "; pass --tau/--a/--b/--c");
        }
    }
    for (const char* name : {"a", "b", "c", "tau"})
        if (auto v = param(c, name)) params[name] = *v;
    return make_case(c.case_id, std::move(params));
}

Json header(const JobConfig& c) {
    Json j;
    j["command"] = c.command;
    return j;
}

int status_of(bool ok) { return ok ? 0 : 1; }

RunResult run_ops(const JobConfig& c) {
    const std::string& qs = single_q(c);
    const QParam q = parse_q(qs);
    if (c.N < 1) throw UsageError("ops needs --N >= 1");
    PearsonPair pair;
    if (c.family == "little-q-laguerre") {
        pair = laguerre_pair(required(c, "a"), q);
    } else if (c.family == "little-q-jacobi") {
        pair = jacobi_pair(required(c, "a"), required(c, "b"), q);
    } else {
        throw UsageError("ops needs --family little-q-laguerre or little-q-jacobi");
    }
    const CycScalar u0 = param(c, "u0").value_or(CycScalar(1));
    const MomentFunctional u = pearson_moments(pair, u0, 2 * c.N, q);
    const MomentOps mo = recurrence_from_moments(u, c.N);
    const auto res = pearson_residual(u, pair, q);
    const OrthogonalityReport orth = orthogonality_check(u, mo.ops);

    Report checks;
    checks.add("H_q(Phi u) = Psi u", all_zero(res), std::to_string(res.size()) + " moments");
    checks.add("orthogonality", orth.ok, orth.ok ? std::to_string(orth.checked_pairs) + " pairs" : orth.message);

    Json j = header(c);
    j["family"] = c.family;
    j["q"] = q.value().str();
    j["pair"] = to_json(pair);
    j["moments"] = to_json(u);
    j["recurrence"] = to_json(mo.rec);
    j["polynomials"] = to_json(mo.ops);
    j["residual"] = scalars_json(res);
    j["report"] = to_json(checks);
    j["ok"] = checks.ok();
    return {status_of(checks.ok()), std::move(j)};
}

RunResult run_map(const JobConfig& c) {
    const std::string& qs = single_q(c);
    const QParam q = parse_q(qs);
    if (c.k < 2) throw UsageError("map needs --k >= 2");
    if (c.m < 0 || c.m >= c.k) throw UsageError("map needs 0 <= --m < --k");
    MomentFunctional u;
    if (c.case_id != 0) {
        const CubicCase cs = resolve_case(c, qs);
        const Report val = validate_case(cs, q);
        if (const Check* f = val.first_failure()) throw UsageError("case parameters invalid: " + f->name);
        const QParam Q = q.power(3);
        const PearsonPair pv = cs.family == Family::LittleLaguerre ? laguerre_pair(cs.param("a"), Q)
                                                                   : jacobi_pair(cs.param("a"), cs.param("b"), Q);
        u = lift_functional(pearson_moments(pv, CycScalar(1), (2 * c.N) / 3 + 1, Q), case_eta(cs, q), 3,
                            CycScalar(1));
    } else if (c.family == "little-q-laguerre") {
        u = pearson_moments(laguerre_pair(required(c, "a"), q), CycScalar(1), 2 * c.N, q);
    } else if (c.family == "little-q-jacobi") {
        u = pearson_moments(jacobi_pair(required(c, "a"), required(c, "b"), q), CycScalar(1), 2 * c.N, q);
    } else {
        throw UsageError("map needs --case or --family");
    }
    const MomentOps p = recurrence_from_moments(u, c.N);
    const BlockView view(p.rec, c.k);
    const int levels = max_condition_level(view, c.m);
    if (levels < 1) throw UsageError("--N too small for a block analysis with k = " + std::to_string(c.k));

    Json j = header(c);
    j["q"] = q.value().str();
    j["k"] = c.k;
    j["m"] = c.m;
    j["levels"] = levels;
    const Report cond = check_conditions(view, c.m, levels);
    if (!cond.ok()) {
        j["conditions"] = to_json(cond);
        j["ok"] = false;
        return {1, std::move(j)};
    }
    CycScalar r0;
    if (auto given = param(c, "r0")) {
        r0 = *given;
    } else {
        // r_0 normalizing π_k(0) = 0
        r0 = -build_mapping(view, c.m, CycScalar(0), levels).data.pi_k[0];
    }
    const MappedPair mp = build_mapping(view, c.m, r0, levels);
    const int id_levels = std::min(levels, (c.N - c.m) / c.k);
    const int il_levels = std::min(levels - 1, (c.N - c.m - c.k) / c.k);
    Report checks = verify_mapping_identity(p.ops, mp.data, mp.q, id_levels);
    if (il_levels >= 0 && !mp.data.eta.is_zero()) checks.append(verify_interleave(view, p.ops, mp.data, mp.q, il_levels));
    j["mapping"] = to_json(mp.data);
    j["q_polynomials"] = to_json(mp.q);
    j["report"] = to_json(checks);
    j["ok"] = checks.ok();
    return {status_of(checks.ok()), std::move(j)};
}

Json case_result_json(const CaseBundle& b, const Report& rep, const std::string& q) {
    Json j;
    j["q"] = q;
    j["case"] = b.spec.id;
    j["family"] = family_name(b.spec.family);
    Json params;
    for (const auto& [k, v] : b.spec.params) params[k] = v.str();
    j["params"] = std::move(params);
    j["class"] = b.cls.s;
    j["report"] = to_json(rep);
    j["ok"] = rep.ok();
    return j;
}

RunResult run_classify(const JobConfig& c) {
    const std::string& qs = single_q(c);
    const QParam q = parse_q(qs);
    const CubicCase cs = resolve_case(c, qs);
    CaseBundle b;
    try {
        b = build_case(cs, q, c.N);
    } catch (const CaseError& e) {
        if (e.stage() == "validate") throw UsageError(e.what());
        throw;
    }
    const PearsonPair expect = expected_pair(cs, q);
    Report checks;
    checks.add("class", b.cls.s == cs.expected_class, "expected " + std::to_string(cs.expected_class));
    checks.add("Phi", b.cls.phi == expect.phi, "expected " + expect.phi.str());
    checks.add("Psi", b.cls.psi == expect.psi, "expected " + expect.psi.str());
    Json j = header(c);
    j["q"] = q.value().str();
    j["case"] = cs.id;
    j["class"] = b.cls.s;
    j["phi"] = to_json(b.cls.phi);
    j["psi"] = to_json(b.cls.psi);
    j["reduced"] = to_json(b.cls.reduced);
    j["trace"] = to_json(b.cls).at("trace");
    j["report"] = to_json(checks);
    j["ok"] = checks.ok();
    return {status_of(checks.ok()), std::move(j)};
}

int worker_count(const JobConfig& c) {
    int n = c.threads;
    if (n <= 0) {
        const char* env = std::getenv("QMAP_THREADS");
        n = env ? std::atoi(env) : 1;
    }
    return std::max(n, 1);
}

RunResult run_tables(const JobConfig& c) {
    if (c.q.empty()) throw UsageError("tables needs at least one --q");
    const auto all = fixtures(c);
    struct Job {
        std::string q;
        CubicCase cs;
    };
    std::vector<Job> jobs;
    for (const auto& qs : c.q) {
        parse_q(qs);
        const auto cases = fixtures_for(all, qs);
        if (cases.empty()) throw UsageError("no fixtures at q = " + qs);
        for (const auto& cs : cases) jobs.push_back({qs, cs});
    }
    std::vector<Json> results(jobs.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < jobs.size(); i = next++) {
            const QParam q(CycScalar::parse(jobs[i].q));
            try {
                const CaseBundle b = build_case(jobs[i].cs, q, c.N);
                results[i] = case_result_json(b, case_report(b), q.value().str());
            } catch (const Error& e) {
                Json j;
                j["q"] = q.value().str();
                j["case"] = jobs[i].cs.id;
                j["error"] = e.what();
                j["ok"] = false;
                results[i] = std::move(j);
            }
        }
    };
    const int workers = std::min<int>(worker_count(c), static_cast<int>(jobs.size()));
    std::vector<std::thread> pool;
    for (int t = 1; t < workers; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();

    bool ok = true;
    Json list = Json::array();
    for (auto& r : results) {
        ok = ok && r.at("ok").get<bool>();
        list.push_back(std::move(r));
    }
    Json j = header(c);
    j["N"] = c.N;
    j["results"] = std::move(list);
    j["ok"] = ok;
    return {status_of(ok), std::move(j)};
}

RunResult run_measure(const JobConfig& c) {
    const std::string& qs = single_q(c);
    const QParam q = parse_q(qs);
    if (c.case_id != 1 && c.case_id != 13) throw UsageError("measure supports --case 1 or 13");
    if (c.L < 1) throw UsageError("measure needs --L >= 1");
    const CubicCase cs = resolve_case(c, qs);
    MeasureRun run;
    try {
        run = compare_case_measure(cs, q, c.L, c.N);
    } catch (const InvalidArgument& e) {
        throw UsageError(e.what());
    }
    Json rows = Json::array();
    for (const auto& r : run.rows) rows.push_back(to_json(r));
    const bool ok = run.max_err <= c.tol;
    Json j = header(c);
    j["q"] = q.value().str();
    j["case"] = cs.id;
    j["L"] = c.L;
    j["tol"] = c.tol;
    j["rows"] = std::move(rows);
    j["max_err"] = run.max_err;
    j["doubling_change"] = run.doubling_change;
    j["ok"] = ok;
    return {status_of(ok), std::move(j)};
}

RunResult run_descend(const JobConfig& c) {
    const std::string& qs = single_q(c);
    const QParam q = parse_q(qs);
    const CubicCase cs = resolve_case(c, qs);
    CaseBundle b;
    try {
        b = build_case(cs, q, c.N);
    } catch (const CaseError& e) {
        if (e.stage() == "validate") throw UsageError(e.what());
        throw;
    }
    const std::vector<Poly> basis{b.p.ops[0], b.p.ops[1], b.p.ops[2]};
    const Descent d = descend_pearson({b.cls.phi, b.cls.psi}, b.cls.s, basis, 3, q, b.u, b.v);
    // (f_0, g_0) proportional to the classical pair of v
    const CycScalar lambda = d.pair.phi.leading() / b.pair_v.phi.leading();
    const bool proportional = d.pair.phi == b.pair_v.phi * lambda && d.pair.psi == b.pair_v.psi * lambda;
    Report checks;
    const auto res = pearson_residual(b.v, d.pair, q.power(3));
    checks.add("H_{q^3}(f0 v) = g0 v", !res.empty() && all_zero(res), std::to_string(res.size()) + " moments");
    checks.add("max(deg f0 - 2, deg g0 - 1) = floor(s/3)", d.bound == b.cls.s / 3,
               "bound " + std::to_string(d.bound));
    Json j = header(c);
    j["q"] = q.value().str();
    j["case"] = cs.id;
    j["s"] = b.cls.s;
    j["p"] = d.p;
    j["f0"] = to_json(d.pair.phi);
    j["g0"] = to_json(d.pair.psi);
    j["v_pair"] = to_json(b.pair_v);
    j["proportional_to_v_pair"] = proportional;
    j["report"] = to_json(checks);
    j["ok"] = checks.ok();
    return {status_of(checks.ok()), std::move(j)};
}

void render(const Json& j, const std::string& indent, std::ostringstream& out) {
    if (j.is_object()) {
        if (j.contains("checks") && j.at("checks").is_array()) {
            for (const auto& c : j.at("checks")) {
                out << indent << (c.at("ok").get<bool>() ? "PASS " : "FAIL ") << c.at("name").get<std::string>();
                if (c.contains("detail")) out << "  (" << c.at("detail").get<std::string>() << ")";
                out << "\n";
            }
            return;
        }
        for (const auto& [k, v] : j.items()) {
            if (v.is_object() || v.is_array()) {
                std::ostringstream sub;
                render(v, indent + "  ", sub);
                if (!sub.str().empty()) out << indent << k << ":\n" << sub.str();
            }
        }
    } else if (j.is_array()) {
        for (const auto& e : j) {
            if (e.is_object() && e.contains("case")) {
                out << indent << "q = " << e.value("q", std::string()) << ", case " << e.at("case").get<int>() << ": "
                    << (e.at("ok").get<bool>() ? "ok" : "FAILED") << "\n";
                if (e.contains("error")) out << indent << "  " << e.at("error").get<std::string>() << "\n";
            }
            render(e, indent + "  ", out);
        }
    }
}

}  // namespace

RunResult run(const JobConfig& config) {
    try {
        if (config.command == "ops") return run_ops(config);
        if (config.command == "map") return run_map(config);
        if (config.command == "classify") return run_classify(config);
        if (config.command == "tables") return run_tables(config);
        if (config.command == "measure") return run_measure(config);
        if (config.command == "descend") return run_descend(config);
        throw UsageError("unknown command '" + config.command + "'");
    } catch (const UsageError& e) {
        Json j = header(config);
        j["error"] = e.what();
        j["ok"] = false;
        return {2, std::move(j)};
    } catch (const Error& e) {
        Json j = header(config);
        j["error"] = e.what();
        j["ok"] = false;
        return {1, std::move(j)};
    }
}

std::string render_text(const Json& report) {
    std::ostringstream out;
    out << report.value("command", std::string("?")) << ": "
        << (report.value("ok", false) ? "ok" : "FAILED") << "\n";
    if (report.contains("error")) out << "  " << report.at("error").get<std::string>() << "\n";
    render(report, "  ", out);
    return out.str();
}

}  // namespace qmap
