#ifndef WORDREP_WORD_HPP
#define WORDREP_WORD_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "wordrep/token.hpp"

namespace wordrep {

// A finite sequence of vertex tokens, repeats allowed.
using Word = std::vector<Token>;

// An ordered list of permutations over one vertex set; the concatenation is
// a |perms|-uniform word.
struct PermSequence {
    std::vector<Word> perms;

    Word concat() const;
};

// The subsequence of w consisting of letters in keep, order preserved.
// May be empty.
Word restrict_to(const Word& w, const std::set<Token>& keep);

// True iff the restriction of w to {a,b} is of the form abab... or baba...
// (any length, including length 0 or 1). Letters occurring at most once
// count as alternating with an absent letter.
bool alternates(const Word& w, const Token& a, const Token& b);

// k if every distinct letter of w occurs exactly k times, else absent.
std::optional<int> uniformity(const Word& w);

// Splits w into consecutive blocks of length |vertex_set|; succeeds iff
// every block is a permutation of vertex_set.
std::optional<PermSequence> as_perm_sequence(const Word& w,
                                             const std::vector<Token>& vertex_set);

// Reversal of a permutation. Throws if p has a repeated letter.
Word reverse_perm(const Word& p);

std::vector<Token> distinct_letters(const Word& w); // sorted ascending

std::string to_string(const Word& w); // space-separated token names

} // namespace wordrep

#endif
