#ifndef WORDREP_SELFTEST_HPP
#define WORDREP_SELFTEST_HPP

#include <ostream>
#include <string>
#include <vector>

namespace wordrep::selftest {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    bool skipped = false;
    std::string detail;
    double elapsed_s = 0.0;
};

struct Options {
    bool quick = false;            // skip the two long exhaustive searches
    unsigned seed = 12345;         // for the randomized cross-oracle check
    std::string fixture_dir;       // directory holding the golden fixtures
};

// Runs the bundled acceptance suite, one result per criterion.
std::vector<CriterionResult> run_acceptance(const Options& opts);

// Prints one PASS/FAIL/SKIP line per criterion; returns true iff none failed.
bool report(const std::vector<CriterionResult>& results, std::ostream& out);

std::string default_fixture_dir();

} // namespace wordrep::selftest

#endif
