// internal helpers shared by the verification suites
#pragma once

#include <chrono>
#include <sstream>
#include <string>

#include "prodeq/fc_sets.hpp"
#include "prodeq/verify.hpp"

namespace prodeq {

class Suite {
public:
    explicit Suite(std::string name) : start_(std::chrono::steady_clock::now()) {
        s_.suite = std::move(name);
    }

    void check(bool ok, const std::string& what, const std::string& repro) {
        ++s_.cases;
        if (!ok) s_.failures.push_back({what, repro});
    }

    void record_case() { ++s_.cases; }

    void warn(const std::string& what) { s_.warnings.push_back(what); }

    VerificationSummary finish() {
        s_.wall_s =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        return s_;
    }

private:
    VerificationSummary s_;
    std::chrono::steady_clock::time_point start_;
};

inline std::string fmt(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

inline std::string set_text(const FcSet& F) {
    std::string out;
    for (u64 e : F.elements()) out += (out.empty() ? "" : ",") + std::to_string(e);
    return out;
}

inline std::string primes_text(const PrimeFamily& fam) {
    std::string out;
    for (u64 p : fam.primes()) out += (out.empty() ? "" : ",") + std::to_string(p);
    return out;
}

}  // namespace prodeq
