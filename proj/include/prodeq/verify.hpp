// Verification suites: every module's invariants, runnable from the CLI.
// Any failure carries the reproducing command line.

#pragma once

#include <string>
#include <vector>

#include "prodeq/verify_config.hpp"

namespace prodeq {

struct Failure {
    std::string what;   // inputs and both values
    std::string repro;  // command line that reproduces the case
};

struct VerificationSummary {
    std::string suite;
    std::uint64_t cases = 0;
    std::vector<Failure> failures;
    std::vector<std::string> warnings;  // reported but not failing (unproven bounds)
    double wall_s = 0.0;

    bool ok() const { return failures.empty(); }
};

VerificationSummary verify_identities(const VerifyGrids& g, int threads = 1);
VerificationSummary verify_correlation(const VerifyGrids& g, int threads = 1);
VerificationSummary verify_counting(const VerifyGrids& g, int threads = 1);
VerificationSummary verify_fc(const VerifyGrids& g, int threads = 1);
VerificationSummary verify_zeta(const VerifyGrids& g, int threads = 1);

// suites: subset of {"identities", "correlation", "counting", "fc", "zeta"};
// unknown names throw std::invalid_argument
std::vector<VerificationSummary> run_verify(const std::vector<std::string>& suites,
                                            const VerifyGrids& g, int threads = 1);

}  // namespace prodeq
