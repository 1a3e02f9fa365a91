#pragma once

// Orchestration: run the selected verification suites on a geometry spec and
// assemble the report in declaration order.  Exit-code contract of the CLI:
// 0 = no FAIL, 1 = some FAIL, 2 = usage or load error.

#include <cstdint>

#include "pathgeo/check.hpp"
#include "pathgeo/specfile.hpp"

namespace pathgeo {

struct RunOptions {
    std::set<std::string> suites{"all"};  // empty means: take them from the spec
    bool randomized = false;
    std::uint64_t seed = 0;
    int trials = 32;
    long bound = 100;
};

Report run_suites(const GeometrySpec& spec, const RunOptions& opt);

}  // namespace pathgeo
