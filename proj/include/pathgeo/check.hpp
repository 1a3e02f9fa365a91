#pragma once

// Check plumbing shared by the verification suites: a zero-tester that is
// either exact or randomized (Schwartz-Zippel at a seeded generator), a
// per-check accumulator, and the report assembled in declaration order.

#include <chrono>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "pathgeo/ratexpr.hpp"

namespace pathgeo {

enum class Status { PASS, FAIL, SKIP, UNSUPPORTED };

const char* status_name(Status s);

struct CheckResult {
    std::string id;
    Status status = Status::PASS;
    std::string witness;
    double millis = 0.0;
};

struct Report {
    std::vector<CheckResult> entries;
    bool all_ok() const;
    std::size_t fail_count() const;
    const CheckResult* find(const std::string& id) const;
};

class ZeroTester {
public:
    ZeroTester() = default;  // exact
    ZeroTester(int trials, long bound, std::uint64_t seed)
        : randomized_(true), trials_(trials), bound_(bound), rng_(seed) {}

    bool randomized() const { return randomized_; }
    bool is_zero(const RatExpr& e) const;

private:
    bool randomized_ = false;
    int trials_ = 32;
    long bound_ = 100;
    mutable std::mt19937_64 rng_{0};
};

class CheckRun {
public:
    // Requires the residual to be zero; records the first failure as witness.
    void zero(const RatExpr& residual, const std::string& what);
    void zero_all(const std::vector<RatExpr>& residuals, const std::string& what);
    void is_true(bool cond, const std::string& what);
    // Informational annotation; never fails the check.
    void note(const std::string& text);

    bool ok() const { return ok_; }
    const std::string& witness() const { return witness_; }

private:
    friend class CheckContext;
    CheckRun(const ZeroTester& t, const std::vector<std::string>& names)
        : tester_(&t), names_(&names) {}
    const ZeroTester* tester_;
    const std::vector<std::string>* names_;
    bool ok_ = true;
    std::string witness_;
};

class CheckContext {
public:
    explicit CheckContext(ZeroTester tester = ZeroTester(),
                          std::vector<std::string> coord_names = {})
        : tester_(std::move(tester)), names_(std::move(coord_names)) {}

    void set_coord_names(std::vector<std::string> names) { names_ = std::move(names); }
    const ZeroTester& tester() const { return tester_; }

    void check(const std::string& id, const std::function<void(CheckRun&)>& body);
    void skip(const std::string& id, const std::string& reason);
    void unsupported(const std::string& id, const std::string& reason);

    const Report& report() const { return report_; }
    Report take_report() { return std::move(report_); }

private:
    ZeroTester tester_;
    std::vector<std::string> names_;
    Report report_;
};

}  // namespace pathgeo
