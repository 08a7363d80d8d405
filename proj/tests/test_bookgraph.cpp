#include <doctest.h>

#include "wordrep/bookgraph.hpp"
#include "wordrep/errors.hpp"
#include "wordrep/graph.hpp"
#include "wordrep/oracle.hpp"
#include "wordrep/pathcycle.hpp"
#include "wordrep/word.hpp"

using namespace wordrep;

TEST_CASE("product_vertex and cartesian_product") {
    CHECK(product_vertex(Token("a"), Token("b")) == Token("a,b"));

    Graph k2;
    k2.add_edge("x", "y");
    Graph p3 = make_path({Token("1"), Token("2"), Token("3")});
    Graph prod = cartesian_product(p3, k2);
    CHECK(prod.vertex_count() == 6);
    CHECK(prod.edge_count() == 7); // 2*2 path copies + 3 rungs
    CHECK(prod.has_edge(Token("1,x"), Token("2,x")));
    CHECK(prod.has_edge(Token("1,x"), Token("1,y")));
    CHECK_FALSE(prod.has_edge(Token("1,x"), Token("2,y")));

    // product with a single vertex is a relabeled copy
    Graph one;
    one.add_vertex(Token("z"));
    Graph copy = cartesian_product(p3, one);
    CHECK(copy.vertex_count() == 3);
    CHECK(copy.edge_count() == 2);
}

TEST_CASE("book graph shape") {
    Graph b3 = book(3);
    CHECK(b3.vertex_count() == 8);
    CHECK(b3.edge_count() == 10);
    CHECK(b3.degree(Token("0")) == 4);  // spine: 3 pages + rung
    CHECK(b3.degree(Token("0'")) == 4);
    CHECK(b3.degree(Token("2")) == 2);
    CHECK(b3.has_edge(Token("2"), Token("2'")));
    CHECK_FALSE(b3.has_edge(Token("1"), Token("2")));
    CHECK_THROWS_AS(book(0), std::invalid_argument);
}

TEST_CASE("book equals star times K2") {
    for (int m = 1; m <= 4; ++m) {
        std::vector<Token> leaves;
        for (int i = 1; i <= m; ++i) leaves.emplace_back(std::to_string(i));
        Graph star = make_star(Token("0"), leaves);
        Graph k2;
        k2.add_edge("u", "v");
        Graph prod = cartesian_product(star, k2);
        auto iso = oracle::isomorphic(prod, book(m));
        CHECK(iso.has_value());
    }
}

TEST_CASE("B1 is C4 and B2 is the six-vertex ladder") {
    CHECK(oracle::isomorphic(book(1), make_cycle(default_path_tokens(4))).has_value());

    Graph ladder; // P3 x K2
    const char* edges[][2] = {{"a", "b"}, {"b", "c"}, {"d", "e"}, {"e", "f"},
                              {"a", "d"}, {"b", "e"}, {"c", "f"}};
    for (auto& e : edges) ladder.add_edge(e[0], e[1]);
    CHECK(oracle::isomorphic(book(2), ladder).has_value());
}

TEST_CASE("book_permutations for B3") {
    PermSequence seq = book_permutations(3);
    CHECK(to_string(seq.perms[0]) == "0' 1 1' 2 2' 3 3' 0");
    CHECK(to_string(seq.perms[1]) == "0' 3 3' 2 2' 1 1' 0");
    CHECK(to_string(seq.perms[2]) == "1 2 3 0' 0 3' 2' 1'");
    CHECK(represents(seq.concat(), book(3)));
}

TEST_CASE("book_permutations represents B_m across m") {
    for (int m = 1; m <= 15; ++m) {
        Word w = book_permutations(m).concat();
        CHECK(uniformity(w) == 3);
        CHECK(represents(w, book(m)));
    }
}

TEST_CASE("ascii-safe suffix") {
    Graph b = book(2, "_p");
    CHECK(b.has_vertex(Token("0_p")));
    PermSequence seq = book_permutations(2, "_p");
    CHECK(represents(seq.concat(), b));
}

TEST_CASE("book_numbers") {
    BookNumbers b1 = book_numbers(1);
    CHECK(b1.representation_number == 2);
    CHECK(b1.prn == 2);
    CHECK(uniformity(b1.witness) == 2);
    CHECK(represents(b1.witness, book(1)));

    BookNumbers b2 = book_numbers(2);
    CHECK(b2.prn == 2);
    CHECK(represents(b2.witness, book(2)));

    BookNumbers b4 = book_numbers(4);
    CHECK(b4.representation_number == 3);
    CHECK(b4.prn == 3);
    CHECK(uniformity(b4.witness) == 3);
    CHECK(represents(b4.witness, book(4)));

    CHECK_THROWS_AS(book_numbers(-1), std::invalid_argument);
}

TEST_CASE("B3 is not a circle graph, so its representation number exceeds 2") {
    oracle::SearchOutcome out = oracle::circle_search(book(3));
    CHECK_FALSE(out.found);
}
