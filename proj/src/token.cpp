#include "wordrep/token.hpp"

#include <cctype>
#include <limits>
#include <stdexcept>
#include <tuple>

namespace wordrep {

Token::Token(std::string n) : name(std::move(n)) {
    if (name.empty())
        throw std::invalid_argument("token name must be non-empty");
    for (char c : name) {
        if (std::isspace(static_cast<unsigned char>(c)))
            throw std::invalid_argument("token name must not contain whitespace: '" + name + "'");
    }
}

std::optional<long long> Token::numeric() const {
    if (name.empty()) return std::nullopt;
    long long value = 0;
    for (char c : name) {
        if (c < '0' || c > '9') return std::nullopt;
        if (value > (std::numeric_limits<long long>::max() - (c - '0')) / 10)
            return std::nullopt; // too big, fall back to lexicographic
        value = value * 10 + (c - '0');
    }
    return value;
}

namespace {
// Sort key: numeric tokens first (by value, then name), then the rest by name.
std::tuple<int, long long, const std::string&> key(const Token& t) {
    auto v = t.numeric();
    if (v) return {0, *v, t.name};
    return {1, 0, t.name};
}
} // namespace

bool operator<(const Token& a, const Token& b) { return key(a) < key(b); }
bool operator>(const Token& a, const Token& b) { return b < a; }
bool operator<=(const Token& a, const Token& b) { return !(b < a); }
bool operator>=(const Token& a, const Token& b) { return !(a < b); }

} // namespace wordrep
