#include "pathgeo/specfile.hpp"

#include <fstream>
#include <sstream>

namespace pathgeo {

const std::set<std::string>& known_suites() {
    static const std::set<std::string> s{"validate", "weyl",    "bgg",          "distinguished",
                                         "schouten", "tractor", "invariant-op", "all"};
    return s;
}

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

// Splits a value into items: quoted strings or bare tokens, comma separated.
std::vector<std::string> split_value(const std::string& v, std::size_t line) {
    std::vector<std::string> items;
    std::size_t i = 0;
    while (i < v.size()) {
        while (i < v.size() && (std::isspace(static_cast<unsigned char>(v[i])) || v[i] == ','))
            ++i;
        if (i >= v.size()) break;
        if (v[i] == '"') {
            std::size_t j = v.find('"', i + 1);
            if (j == std::string::npos) throw spec_error("unterminated quote", line);
            items.push_back(v.substr(i + 1, j - i - 1));
            i = j + 1;
        } else {
            std::size_t j = i;
            while (j < v.size() && v[j] != ',') ++j;
            std::string tok = trim(v.substr(i, j - i));
            if (!tok.empty()) items.push_back(tok);
            i = j;
        }
    }
    return items;
}

std::string strip_comment(const std::string& line) {
    bool in_quote = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        if (line[i] == '"') in_quote = !in_quote;
        if (line[i] == '#' && !in_quote) return line.substr(0, i);
    }
    return line;
}

}  // namespace

GeometrySpec parse_spec_text(const std::string& text) {
    GeometrySpec spec;
    std::istringstream in(text);
    std::string raw;
    std::string section;
    std::size_t lineno = 0;
    bool have_n = false, have_mode = false;
    std::vector<std::pair<std::size_t, std::string>> f_keys;  // (index, expr)
    std::vector<std::pair<std::size_t, std::vector<std::string>>> v_keys;

    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = trim(strip_comment(raw));
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') throw spec_error("malformed section header", lineno);
            section = line.substr(1, line.size() - 2);
            if (section != "geometry" && section != "scale" && section != "checks")
                throw spec_error("unknown section '" + section + "'", lineno);
            continue;
        }
        std::size_t eq = line.find('=');
        if (eq == std::string::npos) throw spec_error("expected 'key = value'", lineno);
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        auto items = split_value(value, lineno);
        auto one = [&]() -> const std::string& {
            if (items.size() != 1) throw spec_error("key '" + key + "' expects one value", lineno);
            return items[0];
        };

        if (section == "geometry") {
            if (key == "mode") {
                const std::string& m = one();
                if (m == "ode")
                    spec.mode = GeometrySpec::Mode::ode;
                else if (m == "frames")
                    spec.mode = GeometrySpec::Mode::frames;
                else
                    throw spec_error("mode must be 'ode' or 'frames'", lineno);
                have_mode = true;
            } else if (key == "n") {
                spec.n = static_cast<std::size_t>(std::stoul(one()));
                if (spec.n == 0) throw spec_error("n must be positive", lineno);
                have_n = true;
            } else if (key == "coords") {
                spec.coords = items;
            } else if (key == "E") {
                spec.E = items;
            } else if (key == "F" || (key.size() > 1 && key[0] == 'F')) {
                std::size_t idx = key == "F" ? 1 : std::stoul(key.substr(1));
                if (idx == 0) throw spec_error("F indices start at 1", lineno);
                f_keys.emplace_back(idx, one());
            } else if (key.size() > 1 && key[0] == 'V') {
                std::size_t idx = std::stoul(key.substr(1));
                if (idx == 0) throw spec_error("V indices start at 1", lineno);
                v_keys.emplace_back(idx, items);
            } else {
                throw spec_error("unknown geometry key '" + key + "'", lineno);
            }
        } else if (section == "scale") {
            if (key == "g")
                spec.scale = one();
            else if (key == "change")
                spec.scale_change = one();
            else
                throw spec_error("unknown scale key '" + key + "'", lineno);
        } else if (section == "checks") {
            if (key == "suites") {
                spec.suites.clear();
                for (const auto& s : items) {
                    if (!known_suites().count(s))
                        throw spec_error("unknown suite '" + s + "'", lineno);
                    spec.suites.insert(s);
                }
            } else {
                throw spec_error("unknown checks key '" + key + "'", lineno);
            }
        } else {
            throw spec_error("key outside of any section", lineno);
        }
    }

    if (!have_mode) throw spec_error("missing 'mode' in [geometry]");
    if (!have_n) throw spec_error("missing 'n' in [geometry]");
    if (spec.mode == GeometrySpec::Mode::ode) {
        spec.F.assign(spec.n, "");
        std::vector<bool> seen(spec.n, false);
        for (auto& [idx, expr] : f_keys) {
            if (idx > spec.n) throw spec_error("F index exceeds n");
            if (seen[idx - 1]) throw spec_error("duplicate F" + std::to_string(idx));
            seen[idx - 1] = true;
            spec.F[idx - 1] = expr;
        }
        for (std::size_t a = 0; a < spec.n; ++a)
            if (!seen[a]) throw spec_error("missing F" + std::to_string(a + 1));
    } else {
        if (spec.coords.size() != 2 * spec.n + 1)
            throw spec_error("frames mode needs 2n+1 coordinate names");
        if (spec.E.size() != 2 * spec.n + 1)
            throw spec_error("frames mode needs 2n+1 components for E");
        spec.V.assign(spec.n, {});
        std::vector<bool> seen(spec.n, false);
        for (auto& [idx, comps] : v_keys) {
            if (idx > spec.n) throw spec_error("V index exceeds n");
            if (comps.size() != 2 * spec.n + 1)
                throw spec_error("V" + std::to_string(idx) + " needs 2n+1 components");
            if (seen[idx - 1]) throw spec_error("duplicate V" + std::to_string(idx));
            seen[idx - 1] = true;
            spec.V[idx - 1] = comps;
        }
        for (std::size_t a = 0; a < spec.n; ++a)
            if (!seen[a]) throw spec_error("missing V" + std::to_string(a + 1));
    }
    return spec;
}

GeometrySpec load_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw spec_error("cannot open spec file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_spec_text(buf.str());
}

SpecInputs build_inputs(const GeometrySpec& spec) {
    SpecInputs out;
    if (spec.mode == GeometrySpec::Mode::ode) {
        ODESystem sys;
        sys.n = spec.n;
        sys.rhs = spec.F;
        out.geometry = from_ode(sys);
    } else {
        out.geometry.chart = Chart(spec.n, spec.coords);
        std::size_t d = out.geometry.dim();
        out.geometry.xiE = VectorField(d, d);
        for (std::size_t i = 0; i < d; ++i)
            out.geometry.xiE.c[i] = parse_expr(spec.E[i], spec.coords);
        for (std::size_t a = 0; a < spec.n; ++a) {
            VectorField eta(d, d);
            for (std::size_t i = 0; i < d; ++i) eta.c[i] = parse_expr(spec.V[a][i], spec.coords);
            out.geometry.etas.push_back(eta);
        }
    }
    const auto& coords = out.geometry.chart.coords;
    out.scale = Scale{parse_expr(spec.scale, coords)};
    if (out.scale.g.is_zero()) throw spec_error("scale must be nonzero");
    std::string change = spec.scale_change.empty() ? "1+" + coords[0] + "^2" : spec.scale_change;
    out.scale_change = parse_expr(change, coords);
    if (out.scale_change.is_zero()) throw spec_error("scale change factor must be nonzero");
    return out;
}

}  // namespace pathgeo
