#ifndef WORDREP_TOKEN_HPP
#define WORDREP_TOKEN_HPP

#include <optional>
#include <string>
#include <vector>

namespace wordrep {

// A vertex name. Non-empty, no whitespace. Pure-integer names compare
// numerically and sort ahead of all other names; everything else compares
// lexicographically. This gives one fixed total order for deterministic
// output.
struct Token {
    std::string name;

    Token() = default;
    Token(std::string n);
    Token(const char* n) : Token(std::string(n)) {}

    // Numeric value if the name is a pure decimal integer, else absent.
    std::optional<long long> numeric() const;

    bool operator==(const Token& other) const { return name == other.name; }
    bool operator!=(const Token& other) const { return name != other.name; }
};

bool operator<(const Token& a, const Token& b);
bool operator>(const Token& a, const Token& b);
bool operator<=(const Token& a, const Token& b);
bool operator>=(const Token& a, const Token& b);

} // namespace wordrep

#endif
