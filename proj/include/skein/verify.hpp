#pragma once

#include <string>
#include <vector>

namespace skein {
namespace verify {

struct CheckResult {
    std::string id;
    bool pass = false;
    double seconds = 0;
    std::string detail;
};

struct Options {
    std::string dataDir = "data";
    std::string only;  // run checks whose id starts with this
};

// Runs the acceptance suite: the three worked low-rank reproductions,
// dimension counts, bar-matrix properties, relation suites, the category
// relation suite, link evaluator sanity, the Hecke cross-check, involution
// and embedding checks, and the positivity report.
std::vector<CheckResult> runAcceptance(const Options& opts);

bool allPass(const std::vector<CheckResult>& results);

}  // namespace verify
}  // namespace skein
