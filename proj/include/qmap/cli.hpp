#pragma once

#include <map>
#include <string>
#include <vector>

#include "qmap/serialize.hpp"

namespace qmap {

/// One CLI invocation. Scalars stay as strings until run() validates them.
struct JobConfig {
    std::string command;  // ops | map | classify | tables | measure | descend
    std::vector<std::string> q;
    int k = 3;
    int m = 0;
    int N = 24;
    std::string family;
    std::map<std::string, std::string> params;  // a, b, c, tau, u0, r0
    int case_id = 0;
    int L = 200;
    double tol = 1e-10;
    std::string fixtures;
    /// Worker cap for `tables`; 0 reads QMAP_THREADS (default 1).
    int threads = 0;
};

struct RunResult {
    /// 0 all assertions pass, 1 assertion failure, 2 usage error.
    int status = 0;
    Json report;
};

RunResult run(const JobConfig& config);

/// Indented "name: PASS/FAIL" lines for every check list found in a report.
std::string render_text(const Json& report);

}  // namespace qmap
