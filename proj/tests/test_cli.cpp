#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <string>

#include "qmap/cli.hpp"
#include "qmap/cubic_cases.hpp"
#include "qmap/error.hpp"
#include "qmap/serialize.hpp"
#include "support/random.hpp"

using qmap::CycScalar;
using qmap::JobConfig;
using qmap::Json;
using qmap::Poly;
using qmap::QParam;

namespace {

JobConfig config(std::string command, std::vector<std::string> q) {
    JobConfig c;
    c.command = std::move(command);
    c.q = std::move(q);
    c.fixtures = QMAP_TEST_FIXTURES;
    return c;
}

int exit_code(const std::string& args) {
    const std::string cmd = std::string(QMAP_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    const int raw = std::system(cmd.c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

}  // namespace

TEST(Serialize, ScalarsAndPolynomials) {
    EXPECT_EQ(qmap::to_json(CycScalar::fraction(-3, 4)), Json("-3/4"));
    EXPECT_EQ(qmap::to_json(Poly{1, 0, CycScalar::fraction(1, 2)}).dump(), R"(["1/1","0/1","1/2"])");
    EXPECT_EQ(qmap::to_json(Poly{}).dump(), "[]");
    qmap::testing::Gen g(81);
    for (int i = 0; i < 50; ++i) {
        const Poly p = g.poly(6);
        EXPECT_EQ(qmap::poly_from_json(qmap::to_json(p)), p);
        const CycScalar s = g.scalar();
        EXPECT_EQ(qmap::scalar_from_json(qmap::to_json(s)), s);
    }
    EXPECT_EQ(qmap::scalar_from_json(Json(3)), CycScalar(3));
    EXPECT_THROW(qmap::scalar_from_json(Json(0.5)), qmap::ParseError);
}

TEST(Serialize, FunctionalRecurrenceTriple) {
    qmap::testing::Gen g(82);
    const auto u = g.functional(7);
    const Json ju = qmap::to_json(u);
    EXPECT_EQ(ju.at("order"), 7);
    EXPECT_EQ(qmap::functional_from_json(ju), u);
    Json broken = ju;
    broken["order"] = 3;
    EXPECT_THROW(qmap::functional_from_json(broken), qmap::ParseError);

    const auto r = g.recurrence(5);
    const Json jr = qmap::to_json(r);
    EXPECT_TRUE(jr.contains("b"));
    EXPECT_TRUE(jr.contains("a"));
    EXPECT_EQ(qmap::recurrence_from_json(jr), r);

    const qmap::ACDTriple t{g.poly(3), g.poly(3), g.poly(3)};
    EXPECT_EQ(qmap::acd_from_json(qmap::to_json(t)), t);
}

TEST(Run, ClassifyCaseOne) {
    auto c = config("classify", {"1/2"});
    c.case_id = 1;
    const auto r = qmap::run(c);
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.report.at("class"), 1);
    const auto cs = qmap::make_case(1, {{"tau", CycScalar(-1)}, {"a", CycScalar(2)}});
    const auto expect = qmap::expected_pair(cs, QParam(CycScalar::fraction(1, 2)));
    EXPECT_EQ(r.report.at("phi"), qmap::to_json(expect.phi));
    EXPECT_EQ(r.report.at("psi"), qmap::to_json(expect.psi));
}

TEST(Run, OpsLaguerre) {
    auto c = config("ops", {"1/2"});
    c.family = "little-q-laguerre";
    c.params = {{"a", "1/4"}};
    c.N = 12;
    const auto r = qmap::run(c);
    EXPECT_EQ(r.status, 0) << r.report.dump();
    EXPECT_EQ(r.report.at("moments").at("moments").at(2), "105/128");
}

TEST(Run, TablesDeterministicAcrossThreads) {
    auto c = config("tables", {"1/2", "1/3"});
    c.N = 12;
    c.threads = 1;
    const auto one = qmap::run(c);
    c.threads = 4;
    const auto four = qmap::run(c);
    EXPECT_EQ(one.status, 0);
    EXPECT_EQ(one.report.dump(), four.report.dump());
    EXPECT_EQ(one.report.dump(), qmap::run(c).report.dump());
}

TEST(Run, MapAndDescend) {
    auto m = config("map", {"1/2"});
    m.case_id = 13;
    EXPECT_EQ(qmap::run(m).status, 0);
    auto bad = config("map", {"1/2"});
    bad.family = "little-q-jacobi";
    bad.params = {{"a", "1/3"}, {"b", "1/5"}};
    EXPECT_EQ(qmap::run(bad).status, 1);
    auto d = config("descend", {"1/2"});
    d.case_id = 13;
    const auto rd = qmap::run(d);
    EXPECT_EQ(rd.status, 0) << rd.report.dump();
}

TEST(Run, MeasureCaseOne) {
    auto c = config("measure", {"1/2"});
    c.case_id = 1;
    c.N = 10;
    const auto r = qmap::run(c);
    EXPECT_EQ(r.status, 0) << r.report.dump();
}

TEST(Run, UsageErrors) {
    auto unknown = config("frobnicate", {"1/2"});
    EXPECT_EQ(qmap::run(unknown).status, 2);
    auto badq = config("classify", {"x"});
    badq.case_id = 1;
    EXPECT_EQ(qmap::run(badq).status, 2);
    auto missing = config("classify", {"2/7"});
    missing.case_id = 1;
    EXPECT_EQ(qmap::run(missing).status, 2);
    auto noparam = config("ops", {"1/2"});
    noparam.family = "little-q-laguerre";
    EXPECT_EQ(qmap::run(noparam).status, 2);
    auto nocase = config("classify", {"1/2"});
    EXPECT_EQ(qmap::run(nocase).status, 2);
}

TEST(Binary, ExitCodes) {
    EXPECT_EQ(exit_code("classify --case 1 --q 1/2"), 0);
    EXPECT_EQ(exit_code("classify --case 1 --q 1/2 --text"), 0);
    EXPECT_EQ(exit_code("map --family little-q-jacobi --a 1/3 --b 1/5 --q 1/2"), 1);
    EXPECT_EQ(exit_code("classify --case 1 --q x"), 2);
    EXPECT_EQ(exit_code("classify --case 1 --q 2/7"), 2);
    EXPECT_EQ(exit_code("nonsense"), 2);
    EXPECT_EQ(exit_code(""), 2);
}
