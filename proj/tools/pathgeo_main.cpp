// Verification CLI: load a geometry spec, run the selected suites in exact
// or randomized mode, print a report table, optionally write line-delimited
// records.  Exit codes: 0 all PASS/SKIP, 1 some FAIL, 2 usage/load error.

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <iostream>

#include "pathgeo/runner.hpp"

int main(int argc, char** argv) {
    CLI::App app{"exact verification engine for path-geometry calculus"};
    std::string spec_path;
    std::vector<std::string> suites;
    std::string mode = "exact";
    std::uint64_t seed = 0;
    int trials = 32;
    long bound = 100;
    std::string out_path;
    std::string gcd = "content";

    app.add_option("spec", spec_path, "geometry spec file")->required();
    app.add_option("--suite", suites,
                   "suites to run (validate, weyl, bgg, distinguished, schouten, tractor, "
                   "invariant-op, all); default: from the spec file")
        ->delimiter(',');
    app.add_option("--mode", mode, "exact | randomized")
        ->check(CLI::IsMember({"exact", "randomized"}));
    app.add_option("--seed", seed, "seed for randomized mode and sampled sections");
    app.add_option("--trials", trials, "evaluation points per randomized zero test")
        ->check(CLI::PositiveNumber);
    app.add_option("--bound", bound, "coordinate bound for randomized evaluation points")
        ->check(CLI::PositiveNumber);
    app.add_option("--out", out_path, "write line-delimited records (id, status, witness, millis)");
    app.add_option("--gcd", gcd, "rational-function reduction: content | full")
        ->check(CLI::IsMember({"content", "full"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    pathgeo::set_gcd_mode(gcd == "full" ? pathgeo::GcdMode::full : pathgeo::GcdMode::content);

    pathgeo::Report report;
    try {
        pathgeo::GeometrySpec spec = pathgeo::load_spec(spec_path);
        pathgeo::RunOptions opt;
        opt.suites.clear();
        for (const auto& s : suites) {
            if (!pathgeo::known_suites().count(s)) {
                std::cerr << "unknown suite: " << s << "\n";
                return 2;
            }
            opt.suites.insert(s);
        }
        opt.randomized = mode == "randomized";
        opt.seed = seed;
        opt.trials = trials;
        opt.bound = bound;
        report = pathgeo::run_suites(spec, opt);
    } catch (const pathgeo::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    std::size_t idw = 12;
    for (const auto& r : report.entries) idw = std::max(idw, r.id.size());
    std::cout << std::left << std::setw(static_cast<int>(idw) + 2) << "check" << std::setw(13)
              << "status" << std::setw(10) << "millis" << "witness\n";
    for (const auto& r : report.entries) {
        std::string witness = r.witness;
        if (witness.size() > 96) witness = witness.substr(0, 93) + "...";
        std::cout << std::left << std::setw(static_cast<int>(idw) + 2) << r.id << std::setw(13)
                  << pathgeo::status_name(r.status) << std::setw(10) << std::fixed
                  << std::setprecision(1) << r.millis << witness << "\n";
    }
    std::cout << (report.all_ok() ? "RESULT: PASS" : "RESULT: FAIL") << " ("
              << report.entries.size() << " checks, " << report.fail_count() << " failures)\n";

    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "error: cannot write " << out_path << "\n";
            return 2;
        }
        for (const auto& r : report.entries) {
            std::string witness = r.witness;
            for (auto& ch : witness)
                if (ch == '\t' || ch == '\n') ch = ' ';
            out << r.id << "\t" << pathgeo::status_name(r.status) << "\t"
                << (witness.empty() ? "-" : witness) << "\t" << std::fixed << std::setprecision(3)
                << r.millis << "\n";
        }
    }
    return report.all_ok() ? 0 : 1;
}
