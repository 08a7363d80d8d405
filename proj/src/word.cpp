#include "wordrep/word.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace wordrep {

Word PermSequence::concat() const {
    Word out;
    for (const Word& p : perms) out.insert(out.end(), p.begin(), p.end());
    return out;
}

Word restrict_to(const Word& w, const std::set<Token>& keep) {
    Word out;
    for (const Token& t : w)
        if (keep.count(t)) out.push_back(t);
    return out;
}

bool alternates(const Word& w, const Token& a, const Token& b) {
    if (a == b) throw std::invalid_argument("alternates: letters must be distinct");
    const Token* prev = nullptr;
    for (const Token& t : w) {
        if (t != a && t != b) continue;
        if (prev && *prev == t) return false;
        prev = &t;
    }
    return true;
}

std::optional<int> uniformity(const Word& w) {
    if (w.empty()) return std::nullopt;
    std::map<Token, int> count;
    for (const Token& t : w) ++count[t];
    int k = count.begin()->second;
    for (const auto& [t, c] : count)
        if (c != k) return std::nullopt;
    return k;
}

std::optional<PermSequence> as_perm_sequence(const Word& w,
                                             const std::vector<Token>& vertex_set) {
    const std::size_t n = vertex_set.size();
    if (n == 0 || w.size() % n != 0) return std::nullopt;
    std::set<Token> want(vertex_set.begin(), vertex_set.end());
    if (want.size() != n) return std::nullopt;

    PermSequence seq;
    for (std::size_t i = 0; i < w.size(); i += n) {
        Word block(w.begin() + i, w.begin() + i + n);
        std::set<Token> seen(block.begin(), block.end());
        if (seen != want) return std::nullopt;
        seq.perms.push_back(std::move(block));
    }
    return seq;
}

Word reverse_perm(const Word& p) {
    std::set<Token> seen(p.begin(), p.end());
    if (seen.size() != p.size())
        throw std::invalid_argument("reverse_perm: repeated letter");
    return Word(p.rbegin(), p.rend());
}

std::vector<Token> distinct_letters(const Word& w) {
    std::set<Token> seen(w.begin(), w.end());
    return std::vector<Token>(seen.begin(), seen.end());
}

std::string to_string(const Word& w) {
    std::string out;
    for (const Token& t : w) {
        if (!out.empty()) out += ' ';
        out += t.name;
    }
    return out;
}

} // namespace wordrep
