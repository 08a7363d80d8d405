#ifndef WORDREP_BOOKGRAPH_HPP
#define WORDREP_BOOKGRAPH_HPP

#include <string>

#include "wordrep/graph.hpp"

namespace wordrep {

// Cartesian product. Product vertices (a,b) are rendered as "a,b", which is
// injective as long as vertex names of g contain no comma.
Graph cartesian_product(const Graph& g, const Graph& h);
Token product_vertex(const Token& a, const Token& b);

// The book graph B_m: two stars 0-1..m and 0'-1'..m' plus the rungs i-i'.
// 2m+2 vertices, 3m+1 edges. The primed page uses `suffix` after the digit
// ("'" by default; "_p" is the ASCII-safe alternative).
Graph book(int m, const std::string& suffix = "'");

// The three permutations q1,q2,q3 whose concatenation represents B_m,
// obtained by shuffling the star permutations of the two pages and swapping
// the spine letters in the third. Certified internally.
PermSequence book_permutations(int m, const std::string& suffix = "'");

struct BookNumbers {
    int representation_number = 0;
    int prn = 0;
    Word witness; // machine-checked upper-bound witness
};

// Representation number and prn of B_m: (2,2) for m in {1,2}, (3,3) for
// m >= 3. The witness is a 2-permutation word found by exhaustive search for
// small m and the q1q2q3 word otherwise.
BookNumbers book_numbers(int m, const std::string& suffix = "'");

} // namespace wordrep

#endif
