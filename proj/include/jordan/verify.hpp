#ifndef jordan_verify_hpp_
#define jordan_verify_hpp_

#include <string>
#include <vector>

#include "jordan/types.hpp"

namespace jordan::verify {

struct CheckResult {
    std::string name;
    double residual;
    double tolerance;
    bool pass;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;
    double seconds = 0.;
    bool pass = true;
};

struct VerifyConfig {
    size_t trials = 20;  // random similarities per fixture in the equivariance suite
    uint64_t seed = 7;
    double map_tol = 1e-3; // conformal-map construction tolerance (criterion bounds stay pinned)
};

// Property criteria, numbered 1..10.
std::vector<CheckResult> run_criterion(int index, const VerifyConfig &config = {});
const char *criterion_name(int index);

// Suites: equivariance, convex-agreement, interiority, reach, flow, convergence, all.
std::vector<std::string> suite_names();
std::vector<int> suite_criteria(const std::string &suite);
SuiteReport run_suite(const std::string &suite, const VerifyConfig &config = {});

} // namespace jordan::verify

#endif
