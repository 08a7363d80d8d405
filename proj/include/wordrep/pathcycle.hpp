#ifndef WORDREP_PATHCYCLE_HPP
#define WORDREP_PATHCYCLE_HPP

#include <vector>

#include "wordrep/graph.hpp"

namespace wordrep {

// Default vertex tokens a1..an.
std::vector<Token> default_path_tokens(int n);

// Two permutations whose concatenation represents the path a1-...-an.
// Built by the tree builder rooted at a1 (first permutation discarded) and
// certified against the closed forms. Requires n >= 3; P1 and P2 are
// complete and take a single permutation instead.
PermSequence path_permutations(int n, const std::vector<Token>& tokens = {});

// A word representing P_n permutationally: one permutation for n <= 2,
// otherwise the two-permutation concatenation.
Word path_word(int n, const std::vector<Token>& tokens = {});

// Three permutations whose concatenation represents the even cycle C_n,
// n >= 6. Odd n is rejected (odd cycles are not comparability graphs);
// n = 4 is rejected and handled by the exhaustive search in cycle_prn.
PermSequence cycle_permutations(int n, const std::vector<Token>& tokens = {});

struct CyclePrnResult {
    int prn = 0;
    Word witness;
    bool lower_bound_certified = false; // n = 6 only, by exhaustive search
};

// prn of the even cycle C_n with a machine-checked witness. For n = 6 the
// lower bound prn >= 3 can additionally be certified by exhausting all
// two-permutation candidates.
CyclePrnResult cycle_prn(int n, const std::vector<Token>& tokens = {},
                         bool certify_lower_bound = false);

} // namespace wordrep

#endif
