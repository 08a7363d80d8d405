#include "wordrep/pathcycle.hpp"

#include <stdexcept>

#include "wordrep/errors.hpp"
#include "wordrep/oracle.hpp"
#include "wordrep/treebuilder.hpp"

namespace wordrep {

std::vector<Token> default_path_tokens(int n) {
    std::vector<Token> out;
    out.reserve(n);
    for (int i = 1; i <= n; ++i) out.emplace_back("a" + std::to_string(i));
    return out;
}

namespace {

std::vector<Token> resolve_tokens(int n, const std::vector<Token>& tokens, const char* who) {
    if (tokens.empty()) return default_path_tokens(n);
    if (static_cast<int>(tokens.size()) != n)
        throw std::invalid_argument(std::string(who) + ": expected " + std::to_string(n) +
                                    " tokens, got " + std::to_string(tokens.size()));
    std::set<Token> distinct(tokens.begin(), tokens.end());
    if (static_cast<int>(distinct.size()) != n)
        throw std::invalid_argument(std::string(who) + ": tokens must be distinct");
    return tokens;
}

// Closed forms of the two path permutations; a[i] is the (i+1)-th vertex.
Word path_p2_closed(const std::vector<Token>& a) {
    const int n = static_cast<int>(a.size());
    Word p;
    if (n % 2 == 1) {
        for (int i = 2; i <= n - 1; i += 2) {
            p.push_back(a[i - 1]);
            p.push_back(a[i - 2]);
        }
        p.push_back(a[n - 1]);
    } else {
        for (int i = 2; i <= n - 2; i += 2) {
            p.push_back(a[i - 1]);
            p.push_back(a[i - 2]);
        }
        p.push_back(a[n - 1]);
        p.push_back(a[n - 2]);
    }
    return p;
}

Word path_p3_closed(const std::vector<Token>& a) {
    const int n = static_cast<int>(a.size());
    Word p;
    if (n % 2 == 1) {
        for (int i = n - 1; i >= 2; i -= 2) {
            p.push_back(a[i - 1]);
            p.push_back(a[i]);
        }
        p.push_back(a[0]);
    } else {
        p.push_back(a[n - 1]);
        for (int i = n - 2; i >= 2; i -= 2) {
            p.push_back(a[i - 1]);
            p.push_back(a[i]);
        }
        p.push_back(a[0]);
    }
    return p;
}

} // namespace

PermSequence path_permutations(int n, const std::vector<Token>& tokens) {
    if (n < 3)
        throw std::invalid_argument(
            "path_permutations: n < 3; P1 and P2 are complete, use a single permutation");
    std::vector<Token> a = resolve_tokens(n, tokens, "path_permutations");
    RootedLabeledTree rooted = root_and_label(make_path(a), a.front());
    PermSequence three = tree_permutations(rooted);
    PermSequence two;
    two.perms = {three.perms[1], three.perms[2]};
    if (two.perms[0] != path_p2_closed(a) || two.perms[1] != path_p3_closed(a))
        throw CertificationError("path_permutations: output differs from the closed forms");
    return two;
}

Word path_word(int n, const std::vector<Token>& tokens) {
    if (n < 1) throw std::invalid_argument("path_word: n must be >= 1");
    std::vector<Token> a = resolve_tokens(n, tokens, "path_word");
    Word w;
    if (n <= 2) {
        w = Word(a.begin(), a.end());
    } else {
        w = path_permutations(n, a).concat();
    }
    if (!represents(w, make_path(a)))
        throw CertificationError("path_word: word does not represent the path");
    return w;
}

PermSequence cycle_permutations(int n, const std::vector<Token>& tokens) {
    if (n % 2 == 1)
        throw std::invalid_argument("cycle_permutations: odd cycles are not comparability graphs");
    if (n == 4)
        throw std::invalid_argument(
            "cycle_permutations: C4 has prn 2, use cycle_prn (exhaustive search) instead");
    if (n < 6) throw std::invalid_argument("cycle_permutations: n must be an even number >= 6");
    std::vector<Token> a = resolve_tokens(n, tokens, "cycle_permutations");

    std::vector<Token> path_part(a.begin(), a.end() - 1); // P_{n-1}, n-1 odd
    PermSequence two = path_permutations(n - 1, path_part);
    Word p2{a[n - 1]}, p3{a[n - 1]};
    p2.insert(p2.end(), two.perms[0].begin(), two.perms[0].end());
    p3.insert(p3.end(), two.perms[1].begin(), two.perms[1].end());

    // p1 = p_A p_B a_n a_1 a_{n-1}, ascending index inside p_A and p_B
    Word p1;
    for (int i = 2; i <= n - 2; i += 2) p1.push_back(a[i - 1]);
    for (int i = 3; i <= n - 3; i += 2) p1.push_back(a[i - 1]);
    p1.push_back(a[n - 1]);
    p1.push_back(a[0]);
    p1.push_back(a[n - 2]);

    PermSequence seq;
    seq.perms = {p1, p2, p3};
    if (!represents(seq.concat(), make_cycle(a)))
        throw CertificationError("cycle_permutations: word does not represent the cycle");
    return seq;
}

CyclePrnResult cycle_prn(int n, const std::vector<Token>& tokens, bool certify_lower_bound) {
    if (n % 2 == 1)
        throw std::invalid_argument("cycle_prn: odd cycles are not comparability graphs");
    if (n < 4) throw std::invalid_argument("cycle_prn: n must be an even number >= 4");
    std::vector<Token> a = resolve_tokens(n, tokens, "cycle_prn");
    Graph cn = make_cycle(a);

    CyclePrnResult result;
    if (n == 4) {
        oracle::SearchOutcome out = oracle::prn_search(cn, 2);
        if (!out.found) throw CertificationError("cycle_prn: C4 must be a permutation graph");
        result.prn = 2;
        result.witness = out.perm_witness->concat();
        result.lower_bound_certified = true; // C4 is not complete, so prn > 1
    } else {
        result.prn = 3;
        result.witness = cycle_permutations(n, a).concat();
        if (certify_lower_bound && n == 6) {
            if (oracle::prn_search(cn, 2).found)
                throw CertificationError("cycle_prn: C6 unexpectedly has a 2-permutation word");
            result.lower_bound_certified = true;
        }
    }
    if (!represents(result.witness, cn))
        throw CertificationError("cycle_prn: witness does not represent the cycle");
    return result;
}

} // namespace wordrep
