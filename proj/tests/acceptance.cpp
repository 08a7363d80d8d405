// Runs every acceptance criterion at full depth and prints one line each.
#include <iostream>
#include <string>

#include "wordrep/selftest.hpp"

#ifndef WORDREP_FIXTURE_DIR
#define WORDREP_FIXTURE_DIR "tests/fixtures"
#endif

int main(int argc, char** argv) {
    wordrep::selftest::Options opts;
    opts.fixture_dir = WORDREP_FIXTURE_DIR;
    for (int i = 1; i < argc; ++i)
        if (std::string(argv[i]) == "--quick") opts.quick = true;
    auto results = wordrep::selftest::run_acceptance(opts);
    return wordrep::selftest::report(results, std::cout) ? 0 : 1;
}
