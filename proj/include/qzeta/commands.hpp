#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qzeta/zeta.hpp"

namespace qzeta {

// Configuration for `qzeta compute`.
struct ComputeConfig {
    std::string input_path;
    int order = 8;
    std::vector<Method> methods = {Method::euler, Method::expgen, Method::hashimoto,
                                   Method::bass};
    std::optional<std::string> output_path;
};

// Runs the requested methods on the input graph, writes a JSON report to
// `output_path` (or `out` when no path is given), and returns the process
// exit code: 0 when all requested methods agree (a single method agrees
// vacuously), 1 on a coefficient discrepancy, 2 on usage or input errors.
int run_compute(const ComputeConfig& config, std::ostream& out, std::ostream& err);

// Configuration for `qzeta verify`.
struct VerifyConfig {
    std::uint64_t seed = 42;
    int trials = 20;
    std::string suite = "all";
    // Self-test hook: deliberately corrupts the Study determinant used by the
    // "study" suite so the suite must catch it and fail.
    bool corrupt_sdet = false;
};

// Runs the randomized property suites. Prints one line per check; on the
// first failure prints the check name and a minimal failing instance, then
// returns 1. Returns 0 when every check passes, 2 on usage errors.
int run_verify(const VerifyConfig& config, std::ostream& out, std::ostream& err);

// Names accepted by VerifyConfig::suite, in execution order ("all" aside).
std::vector<std::string> verify_suite_names();

}  // namespace qzeta
