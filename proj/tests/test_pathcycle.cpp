#include <doctest.h>

#include <algorithm>

#include "wordrep/errors.hpp"
#include "wordrep/graph.hpp"
#include "wordrep/oracle.hpp"
#include "wordrep/pathcycle.hpp"
#include "wordrep/word.hpp"

using namespace wordrep;

TEST_CASE("default_path_tokens") {
    auto t = default_path_tokens(3);
    REQUIRE(t.size() == 3);
    CHECK(t[0] == Token("a1"));
    CHECK(t[2] == Token("a3"));
}

TEST_CASE("path_permutations closed forms, odd and even n") {
    PermSequence p5 = path_permutations(5);
    CHECK(to_string(p5.perms[0]) == "a2 a1 a4 a3 a5");
    CHECK(to_string(p5.perms[1]) == "a4 a5 a2 a3 a1");

    PermSequence p6 = path_permutations(6);
    CHECK(to_string(p6.perms[0]) == "a2 a1 a4 a3 a6 a5");
    CHECK(to_string(p6.perms[1]) == "a6 a4 a5 a2 a3 a1");

    PermSequence p3 = path_permutations(3);
    CHECK(to_string(p3.perms[0]) == "a2 a1 a3");
    CHECK(to_string(p3.perms[1]) == "a2 a3 a1");
}

TEST_CASE("path_permutations represents P_n for a range of n") {
    for (int n = 3; n <= 20; ++n) {
        std::vector<Token> a = default_path_tokens(n);
        Word w = path_permutations(n).concat();
        CHECK(uniformity(w) == 2);
        CHECK(represents(w, make_path(a)));
    }
}

TEST_CASE("path_permutations input validation") {
    CHECK_THROWS_AS(path_permutations(2), std::invalid_argument);
    CHECK_THROWS_AS(path_permutations(5, {Token("x"), Token("y")}), std::invalid_argument);
    std::vector<Token> dup{Token("x"), Token("x"), Token("y")};
    CHECK_THROWS_AS(path_permutations(3, dup), std::invalid_argument);
}

TEST_CASE("path_permutations honors custom tokens") {
    std::vector<Token> a{Token("p"), Token("q"), Token("r"), Token("s")};
    PermSequence seq = path_permutations(4, a);
    CHECK(to_string(seq.perms[0]) == "q p s r");
    CHECK(represents(seq.concat(), make_path(a)));
}

TEST_CASE("path_word handles the complete cases") {
    CHECK(to_string(path_word(1)) == "a1");
    CHECK(to_string(path_word(2)) == "a1 a2");
    CHECK(uniformity(path_word(7)) == 2);
    CHECK_THROWS_AS(path_word(0), std::invalid_argument);
}

TEST_CASE("two-permutation path words are essentially unique") {
    // every 2-permutation word for P_n has each inner even-indexed vertex's
    // two neighbors on a common side, in both permutations (bipartite
    // side-consistency); check by enumerating all pairs for n = 4
    const int n = 4;
    std::vector<Token> a = default_path_tokens(n);
    Graph pn = make_path(a);
    std::vector<Token> p = a, q = a;
    int witnesses = 0;
    std::sort(p.begin(), p.end());
    do {
        std::vector<Token> q2 = a;
        std::sort(q2.begin(), q2.end());
        do {
            Word w(p.begin(), p.end());
            w.insert(w.end(), q2.begin(), q2.end());
            if (!represents(w, pn)) continue;
            ++witnesses;
            for (int i = 2; i <= n; i += 2) {
                for (const std::vector<Token>* perm : {&p, &q2}) {
                    auto posn = [&](const Token& t) {
                        return std::find(perm->begin(), perm->end(), t) - perm->begin();
                    };
                    long pa = posn(a[i - 1]);
                    int left = 0, right = 0;
                    for (const Token& nb : pn.neighbors(a[i - 1]))
                        (posn(nb) < pa ? left : right)++;
                    CHECK((left == 0 || right == 0));
                }
            }
        } while (std::next_permutation(q2.begin(), q2.end()));
    } while (std::next_permutation(p.begin(), p.end()));
    CHECK(witnesses > 0);
}

TEST_CASE("cycle_permutations matches the construction for C6") {
    PermSequence seq = cycle_permutations(6);
    CHECK(to_string(seq.perms[0]) == "a2 a4 a3 a6 a1 a5");
    CHECK(to_string(seq.perms[1]) == "a6 a2 a1 a4 a3 a5");
    CHECK(to_string(seq.perms[2]) == "a6 a4 a5 a2 a3 a1");
    CHECK(represents(seq.concat(), make_cycle(default_path_tokens(6))));
}

TEST_CASE("cycle_permutations represents C_n for even n up to 20") {
    for (int n = 6; n <= 20; n += 2) {
        Word w = cycle_permutations(n).concat();
        CHECK(uniformity(w) == 3);
        CHECK(represents(w, make_cycle(default_path_tokens(n))));
    }
}

TEST_CASE("cycle_permutations input validation") {
    CHECK_THROWS_AS(cycle_permutations(5), std::invalid_argument);
    CHECK_THROWS_AS(cycle_permutations(7), std::invalid_argument);
    CHECK_THROWS_AS(cycle_permutations(4), std::invalid_argument);
    CHECK_THROWS_AS(cycle_permutations(2), std::invalid_argument);
}

TEST_CASE("cycle_prn") {
    CyclePrnResult c4 = cycle_prn(4);
    CHECK(c4.prn == 2);
    CHECK(c4.lower_bound_certified);
    CHECK(uniformity(c4.witness) == 2);
    CHECK(represents(c4.witness, make_cycle(default_path_tokens(4))));

    CyclePrnResult c8 = cycle_prn(8);
    CHECK(c8.prn == 3);
    CHECK_FALSE(c8.lower_bound_certified);
    CHECK(represents(c8.witness, make_cycle(default_path_tokens(8))));

    CHECK_THROWS_AS(cycle_prn(3), std::invalid_argument);
    CHECK_THROWS_AS(cycle_prn(2), std::invalid_argument);
}

TEST_CASE("cycle_prn certifies the C6 lower bound by exhaustion") {
    CyclePrnResult c6 = cycle_prn(6, {}, true);
    CHECK(c6.prn == 3);
    CHECK(c6.lower_bound_certified);
}

TEST_CASE("independent search agrees with the path construction at small n") {
    for (int n = 3; n <= 6; ++n) {
        Graph pn = make_path(default_path_tokens(n));
        oracle::SearchOutcome out = oracle::prn_search(pn, 2);
        REQUIRE(out.found);
        CHECK(represents(out.perm_witness->concat(), pn));
        CHECK_FALSE(oracle::prn_search(pn, 1).found); // paths of n >= 3 are not complete
    }
}
