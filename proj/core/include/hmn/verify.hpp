#pragma once

#include <string>
#include <vector>

#include "hmn/field.hpp"

namespace hmn {

// One checked statement. `params` names the instance inside the suite's grid;
// `detail` carries computed values, always on failure and for summary rows.
struct CaseResult {
    std::string params;
    bool ok = true;
    std::string detail;
};

struct SuiteResult {
    std::string id;
    std::string grid; // which ranges the suite actually covered
    std::vector<CaseResult> cases;
    long elapsed_ms = 0;
    bool ok = true;

    int passed() const;
    int failed() const;
};

struct VerifyOptions {
    int m = 2, n = 2;
    std::vector<std::string> suites; // empty: every registered suite, in order
    int dim_cap = 12;                // classification sample: modules up to this dimension
    int tower_height = 3;            // tallest tower floor exercised
    std::vector<std::string> eta_grid = {"1", "2", "-1", "xi"};
    bool timings = false;            // off by default so reports are byte-stable
};

struct VerifyReport {
    int m = 0, n = 0;
    std::vector<SuiteResult> suites;
    bool ok = true;

    // Insertion-ordered JSON; identical inputs produce identical bytes.
    std::string to_json() const;
};

// Registered suite ids in execution order.
std::vector<std::string> verify_suite_ids();

// Runs the requested suites at (m, n). Throws std::invalid_argument on an
// unknown suite id or degenerate parameters.
VerifyReport run_verification(const VerifyOptions& opt);

// Scalar syntax used for eta on the command line and in reports: an integer
// ("-3"), a rational ("2/5"), or a root of unity ("xi", "xi^4"). Throws
// std::invalid_argument on anything else.
Cyc parse_scalar(const Field& F, const std::string& s);

} // namespace hmn
