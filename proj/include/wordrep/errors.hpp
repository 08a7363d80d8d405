#ifndef WORDREP_ERRORS_HPP
#define WORDREP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wordrep {

// An exhaustive search was asked for an instance above its configured bound.
// Always an explicit refusal, never silent truncation.
struct BoundExceeded : std::runtime_error {
    explicit BoundExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

// A constructed word failed its own representation certificate. Signals an
// implementation bug, not bad input; the CLI maps this to exit code 2.
struct CertificationError : std::logic_error {
    explicit CertificationError(const std::string& msg) : std::logic_error(msg) {}
};

} // namespace wordrep

#endif
