// qmap: command-line driver for the polynomial-mapping pipeline. Emits one JSON report.
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "qmap/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Exact q-difference polynomial mapping toolkit"};
    app.require_subcommand(1);
    app.fallthrough();
    qmap::JobConfig cfg;
    std::string output;
    bool text = false;
    app.add_option("--output,-o", output, "write the JSON report to a file");
    app.add_flag("--text", text, "print a PASS/FAIL summary instead of JSON");
    app.add_option("--fixtures", cfg.fixtures, "case fixture file");

    auto scalar = [&](CLI::App* sub, const std::string& name, const std::string& help) {
        sub->add_option_function<std::string>(
            "--" + name, [&cfg, name](const std::string& v) { cfg.params[name] = v; }, help);
    };
    auto common_case = [&](CLI::App* sub) {
        sub->add_option("--case", cfg.case_id, "case id 1..13");
        for (const char* n : {"a", "b", "c", "tau"}) scalar(sub, n, std::string("override parameter ") + n);
    };

    auto* ops = app.add_subcommand("ops", "moments, recurrence and polynomials of a classical family");
    ops->add_option("--family", cfg.family, "little-q-laguerre | little-q-jacobi")->required();
    ops->add_option("--q", cfg.q, "deformation parameter")->required()->expected(1);
    ops->add_option("--N", cfg.N, "number of polynomials");
    scalar(ops, "a", "family parameter a");
    scalar(ops, "b", "family parameter b");
    scalar(ops, "u0", "first moment");

    auto* map = app.add_subcommand("map", "block conditions, mapping data and interleave identities");
    map->add_option("--q", cfg.q, "deformation parameter")->required()->expected(1);
    map->add_option("--k", cfg.k, "mapping degree");
    map->add_option("--m", cfg.m, "offset");
    map->add_option("--N", cfg.N, "number of polynomials");
    map->add_option("--family", cfg.family, "classical family instead of a case");
    scalar(map, "r0", "r_0 (default: pi_k(0) = 0)");
    common_case(map);

    auto* classify = app.add_subcommand("classify", "class and canonical pair of a cubic case");
    classify->add_option("--q", cfg.q, "deformation parameter")->required()->expected(1);
    classify->add_option("--N", cfg.N, "number of polynomials");
    common_case(classify);

    auto* tables = app.add_subcommand("tables", "every cubic case at the given q values");
    tables->add_option("--q", cfg.q, "deformation parameter (repeatable)")->required();
    tables->add_option("--N", cfg.N, "number of polynomials");

    auto* measure = app.add_subcommand("measure", "discrete measure against exact moments");
    measure->add_option("--q", cfg.q, "deformation parameter")->required()->expected(1);
    measure->add_option("--L", cfg.L, "number of atoms");
    measure->add_option("--tol", cfg.tol, "absolute tolerance");
    measure->add_option("--N", cfg.N, "highest moment")->default_val(10);
    common_case(measure);

    auto* descend = app.add_subcommand("descend", "Pearson pair of v from the pair of u");
    descend->add_option("--q", cfg.q, "deformation parameter")->required()->expected(1);
    descend->add_option("--N", cfg.N, "number of polynomials");
    common_case(descend);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    cfg.command = app.get_subcommands().front()->get_name();

    const qmap::RunResult res = qmap::run(cfg);
    const std::string body = text ? qmap::render_text(res.report) : res.report.dump(2) + "\n";
    if (!output.empty()) {
        std::ofstream out(output);
        if (!out) {
            std::cerr << "cannot write " << output << "\n";
            return 2;
        }
        out << body;
    } else {
        std::cout << body;
    }
    if (res.status != 0 && res.report.contains("error")) std::cerr << res.report["error"].get<std::string>() << "\n";
    return res.status;
}
