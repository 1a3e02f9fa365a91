#include "pathgeo/check.hpp"

namespace pathgeo {

const char* status_name(Status s) {
    switch (s) {
        case Status::PASS: return "PASS";
        case Status::FAIL: return "FAIL";
        case Status::SKIP: return "SKIP";
        case Status::UNSUPPORTED: return "UNSUPPORTED";
    }
    return "?";
}

bool Report::all_ok() const {
    for (const auto& e : entries)
        if (e.status == Status::FAIL) return false;
    return true;
}

std::size_t Report::fail_count() const {
    std::size_t k = 0;
    for (const auto& e : entries)
        if (e.status == Status::FAIL) ++k;
    return k;
}

const CheckResult* Report::find(const std::string& id) const {
    for (const auto& e : entries)
        if (e.id == id) return &e;
    return nullptr;
}

bool ZeroTester::is_zero(const RatExpr& e) const {
    if (!randomized_) return e.is_zero();
    return random_zero_test(e, trials_, bound_, rng_);
}

void CheckRun::zero(const RatExpr& residual, const std::string& what) {
    if (!ok_) return;  // keep the first witness
    if (!tester_->is_zero(residual)) {
        ok_ = false;
        witness_ = what + ": " + residual.str(*names_);
    }
}

void CheckRun::zero_all(const std::vector<RatExpr>& residuals, const std::string& what) {
    for (std::size_t i = 0; i < residuals.size(); ++i)
        zero(residuals[i], what + "[" + std::to_string(i) + "]");
}

void CheckRun::is_true(bool cond, const std::string& what) {
    if (!ok_ || cond) return;
    ok_ = false;
    witness_ = what;
}

void CheckRun::note(const std::string& text) {
    if (ok_) witness_ = text;
}

void CheckContext::check(const std::string& id, const std::function<void(CheckRun&)>& body) {
    CheckResult res;
    res.id = id;
    auto t0 = std::chrono::steady_clock::now();
    CheckRun run(tester_, names_);
    try {
        body(run);
        res.status = run.ok() ? Status::PASS : Status::FAIL;
        res.witness = run.witness();
    } catch (const error& ex) {
        res.status = Status::FAIL;
        res.witness = std::string("exception: ") + ex.what();
    }
    auto t1 = std::chrono::steady_clock::now();
    res.millis = std::chrono::duration<double, std::milli>(t1 - t0).count();
    report_.entries.push_back(std::move(res));
}

void CheckContext::skip(const std::string& id, const std::string& reason) {
    report_.entries.push_back({id, Status::SKIP, reason, 0.0});
}

void CheckContext::unsupported(const std::string& id, const std::string& reason) {
    report_.entries.push_back({id, Status::UNSUPPORTED, reason, 0.0});
}

}  // namespace pathgeo
