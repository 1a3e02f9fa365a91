#pragma once

// Line-oriented geometry spec files:
//
//   [geometry]
//   mode = ode            # or: frames
//   n = 1
//   F1 = "p^2"            # ode mode: one right-hand side per a = 1..n
//   # frames mode instead declares:
//   #   coords = x, y, p
//   #   E  = "1", "p", "0"
//   #   V1 = "0", "0", "1"
//   [scale]
//   g = "1"
//   change = "1+x^2"
//   [checks]
//   suites = all
//
// '#' starts a comment, whitespace is insignificant, expression values are
// quoted.  Errors report the offending line.

#include <set>
#include <string>
#include <vector>

#include "pathgeo/geometry.hpp"
#include "pathgeo/weyl.hpp"

namespace pathgeo {

struct GeometrySpec {
    enum class Mode { ode, frames };
    Mode mode = Mode::ode;
    std::size_t n = 0;
    std::vector<std::string> F;                    // ode mode
    std::vector<std::string> coords;               // frames mode
    std::vector<std::string> E;                    // frames mode, 2n+1 entries
    std::vector<std::vector<std::string>> V;       // frames mode, n vectors
    std::string scale = "1";
    std::string scale_change;                      // default: 1 + first_coord^2
    std::set<std::string> suites{"all"};
};

class spec_error : public error {
public:
    spec_error(const std::string& msg, std::size_t line)
        : error(msg + " (line " + std::to_string(line) + ")") {}
    explicit spec_error(const std::string& msg) : error(msg) {}
};

GeometrySpec load_spec(const std::string& path);
GeometrySpec parse_spec_text(const std::string& text);

// Materialized inputs: every expression parsed and validated.
struct SpecInputs {
    PathGeometry geometry;
    Scale scale;
    RatExpr scale_change;
};
SpecInputs build_inputs(const GeometrySpec& spec);

const std::set<std::string>& known_suites();

}  // namespace pathgeo
