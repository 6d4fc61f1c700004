// Acceptance gate: runs every verification suite and prints one pass/fail
// line per criterion.  Exit code 0 iff everything passed.

#include <cstdio>
#include <string>

#include "grouplike_kit/verify_suites.hpp"

int main() {
    int criterion = 0;
    int failures = 0;
    for (const auto& name : gk::acceptance_suite_names()) {
        gk::SuiteResult suite = gk::run_acceptance_suite(name);
        ++criterion;
        bool ok = suite.passed();
        failures += ok ? 0 : 1;
        std::printf("[%s] criterion %2d %-20s %s\n", ok ? "PASS" : "FAIL", criterion,
                    suite.name.c_str(), suite.statement.c_str());
        if (!ok)
            for (const auto& c : suite.cases)
                if (!c.passed) std::printf("       case %s: %s\n", c.name.c_str(), c.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%d criteria passed\n", criterion - failures, criterion);
    return failures == 0 ? 0 : 1;
}
