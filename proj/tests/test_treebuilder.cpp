#include <doctest.h>

#include <algorithm>
#include <random>

#include "wordrep/errors.hpp"
#include "wordrep/graph.hpp"
#include "wordrep/io.hpp"
#include "wordrep/oracle.hpp"
#include "wordrep/treebuilder.hpp"
#include "wordrep/word.hpp"

using namespace wordrep;

namespace {

Graph demo_tree() {
    Graph g;
    const char* edges[][2] = {{"1", "2"},  {"1", "4"}, {"1", "6"}, {"2", "3"},
                              {"2", "5"},  {"3", "8"}, {"4", "7"}, {"7", "10"},
                              {"6", "9"},  {"6", "11"}, {"11", "12"}};
    for (auto& e : edges) g.add_edge(e[0], e[1]);
    return g;
}

// g restricted/relabeled through nothing -- just a random tree on tokens 1..n.
Graph random_tree(int n, std::mt19937& rng) {
    Graph g;
    g.add_vertex(Token("1"));
    for (int v = 2; v <= n; ++v) {
        int p = std::uniform_int_distribution<int>(1, v - 1)(rng);
        g.add_edge(Token(std::to_string(p)), Token(std::to_string(v)));
    }
    return g;
}

bool before(const Word& p, const Token& a, const Token& b) {
    auto ia = std::find(p.begin(), p.end(), a);
    auto ib = std::find(p.begin(), p.end(), b);
    return ia < ib;
}

bool is_subsequence(const Word& small, const Word& big) {
    std::size_t i = 0;
    for (const Token& t : big)
        if (i < small.size() && small[i] == t) ++i;
    return i == small.size();
}

} // namespace

TEST_CASE("root_and_label parity labeling of P5") {
    std::vector<Token> v{Token("a1"), Token("a2"), Token("a3"), Token("a4"), Token("a5")};
    RootedLabeledTree t = root_and_label(make_path(v), Token("a1"));
    CHECK(t.n == 5);
    CHECK(t.label_of.at(Token("a1")) == 1);
    CHECK(t.label_of.at(Token("a2")) == 2);
    CHECK(t.label_of.at(Token("a3")) == 3);
    CHECK(t.label_of.at(Token("a4")) == 4);
    CHECK(t.label_of.at(Token("a5")) == 5);
    CHECK(t.parent_of[1] == 0);
    CHECK(t.parent_of[2] == 1);
    CHECK(t.parent_of[3] == 2);
    CHECK(t.parent_of[5] == 4);
    CHECK(t.children_of[1] == std::vector<int>{2});
}

TEST_CASE("root_and_label of a star: leaves get the even labels in token order") {
    Graph star = make_star(Token("c"), {Token("x"), Token("y"), Token("z")});
    RootedLabeledTree t = root_and_label(star, Token("c"));
    CHECK(t.label_of.at(Token("c")) == 1);
    CHECK(t.label_of.at(Token("x")) == 2);
    CHECK(t.label_of.at(Token("y")) == 4);
    CHECK(t.label_of.at(Token("z")) == 6);
    CHECK(t.children_of[1] == std::vector<int>({2, 4, 6}));
}

TEST_CASE("root_and_label rejects non-trees") {
    Graph c3 = make_cycle({Token("a"), Token("b"), Token("c")});
    CHECK_THROWS_AS(root_and_label(c3, Token("a")), std::invalid_argument);

    Graph forest; // two components, |E| = |V|-1 fails first
    forest.add_edge("a", "b");
    forest.add_vertex(Token("c"));
    CHECK_THROWS_AS(root_and_label(forest, Token("a")), std::invalid_argument);

    Graph edge;
    edge.add_edge("a", "b");
    CHECK_THROWS_AS(root_and_label(edge, Token("zz")), std::invalid_argument);
}

TEST_CASE("tree_permutations reproduces the worked 12-vertex example") {
    RootedLabeledTree t = root_and_label(demo_tree(), Token("1"));
    TreeSteps trace;
    PermSequence seq = tree_permutations(t, &trace);

    CHECK(to_string(seq.perms[0]) == "2 8 3 5 4 6 1 10 7 9 12 11");
    CHECK(to_string(seq.perms[1]) == "6 12 11 9 4 10 7 2 1 5 8 3");
    CHECK(to_string(seq.perms[2]) == "12 10 8 2 3 5 4 7 6 9 11 1");
    CHECK(represents(seq.concat(), demo_tree()));

    // one snapshot per visited internal vertex: 1, 2, 4, 6, 3, 7, 11
    REQUIRE(trace.steps.size() == 7);
    CHECK(to_string(trace.steps[0].p1) == "2 4 6 1");
    CHECK(to_string(trace.steps[0].p2) == "6 4 2 1");
    CHECK(to_string(trace.steps[0].p3) == "2 4 6 1");
    CHECK(to_string(trace.steps[1].p1) == "2 3 5 4 6 1");
    CHECK(to_string(trace.steps[1].p2) == "6 4 2 1 5 3");
    CHECK(to_string(trace.steps[1].p3) == "2 3 5 4 6 1");
    CHECK(to_string(trace.steps[3].p1) == "2 3 5 4 6 1 7 9 11");
    CHECK(to_string(trace.steps[3].p2) == "6 11 9 4 7 2 1 5 3");
    CHECK(to_string(trace.steps[3].p3) == "2 3 5 4 7 6 9 11 1");
}

TEST_CASE("each step only inserts letters") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        int n = std::uniform_int_distribution<int>(3, 12)(rng);
        RootedLabeledTree t = root_and_label(random_tree(n, rng), Token("1"));
        TreeSteps trace;
        tree_permutations(t, &trace);
        Word prev1{t.root}, prev2{t.root}, prev3{t.root};
        for (const auto& s : trace.steps) {
            CHECK(is_subsequence(prev1, s.p1));
            CHECK(is_subsequence(prev2, s.p2));
            CHECK(is_subsequence(prev3, s.p3));
            prev1 = s.p1;
            prev2 = s.p2;
            prev3 = s.p3;
        }
    }
}

TEST_CASE("tree_permutations works for the smallest trees") {
    Graph one;
    one.add_vertex(Token("a"));
    PermSequence s1 = tree_permutations(root_and_label(one, Token("a")));
    CHECK(s1.perms.size() == 3);
    CHECK(represents(s1.concat(), one));

    Graph two;
    two.add_edge("a", "b");
    CHECK(represents(tree_permutations(root_and_label(two, Token("a"))).concat(), two));
}

TEST_CASE("random trees: 3-uniform output represents the tree from every root") {
    std::mt19937 rng(29);
    for (int trial = 0; trial < 40; ++trial) {
        int n = std::uniform_int_distribution<int>(2, 14)(rng);
        Graph g = random_tree(n, rng);
        for (const Token& root : g.vertices()) {
            PermSequence seq = tree_permutations(root_and_label(g, root));
            REQUIRE(seq.perms.size() == 3);
            Word w = seq.concat();
            CHECK(uniformity(w) == 3);
            CHECK(represents(w, g));
        }
    }
}

TEST_CASE("order structure of the three permutations on random trees") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        int n = std::uniform_int_distribution<int>(3, 11)(rng);
        RootedLabeledTree t = root_and_label(random_tree(n, rng), Token("1"));
        PermSequence seq = tree_permutations(t);
        const Word &p1 = seq.perms[0], &p2 = seq.perms[1], &p3 = seq.perms[2];

        std::vector<int> labels;
        for (const auto& [tok, label] : t.label_of) labels.push_back(label);

        // ancestor relation by labels (excluding the direct parent)
        const int m = t.max_label;
        std::vector<std::vector<bool>> anc(m + 1, std::vector<bool>(m + 1, false));
        for (int v : labels)
            for (int a = t.parent_of[t.parent_of[v]]; a != 0; a = t.parent_of[a])
                anc[a][v] = true;

        for (int u : labels) {
            for (int v : labels) {
                if (u == v) continue;
                const Token &a = t.token_of_label[u], &b = t.token_of_label[v];
                if (anc[u][v]) {
                    // strict ancestor: descendant precedes it in p3, and the
                    // even-labeled ancestor precedes the descendant in p1
                    CHECK(before(p3, b, a));
                    if (u % 2 == 0) CHECK(before(p1, a, b));
                    else CHECK((before(p1, a, b) || before(p2, a, b)));
                } else if (u < v && !anc[v][u] && t.parent_of[u] != v &&
                           t.parent_of[v] != u) {
                    // incomparable vertices are non-adjacent: some pair of
                    // permutations must disagree on their order
                    bool o1 = before(p1, a, b), o2 = before(p2, a, b), o3 = before(p3, a, b);
                    CHECK((o1 != o2 || o1 != o3));
                    // siblings specifically are ordered oppositely by p1 / p2
                    if (t.parent_of[u] == t.parent_of[v]) CHECK(o1 != o2);
                }
            }
        }

        // bipartite side-consistency: the neighbors of an even-labeled vertex
        // sit on one common side of it in each permutation
        for (int u : labels) {
            if (u % 2 == 1) continue;
            const Token& a = t.token_of_label[u];
            for (const Word* p : {&p1, &p2, &p3}) {
                int left = 0, right = 0;
                for (const Token& nb : t.tree.neighbors(a))
                    (before(*p, nb, a) ? left : right)++;
                CHECK((left == 0 || right == 0));
            }
        }
    }
}

TEST_CASE("s_graph and contains_s") {
    Graph s = s_graph();
    CHECK(s.vertex_count() == 7);
    CHECK(s.edge_count() == 6);
    CHECK(s.degree(Token("1")) == 3);

    auto self = contains_s(s);
    REQUIRE(self.has_value());
    for (const auto& [pu, pv] : s.edges())
        CHECK(s.has_edge(self->at(pu), self->at(pv)));

    // the demo tree contains S (center 1, legs 2-3, 4-7, 6-9)
    auto hit = contains_s(demo_tree());
    REQUIRE(hit.has_value());
    Graph host = demo_tree();
    for (const auto& [pu, pv] : s.edges())
        CHECK(host.has_edge(hit->at(pu), hit->at(pv)));

    // paths and stars are S-free
    std::vector<Token> p8;
    for (int i = 1; i <= 8; ++i) p8.emplace_back("v" + std::to_string(i));
    CHECK_FALSE(contains_s(make_path(p8)).has_value());
    CHECK_FALSE(contains_s(make_star(Token("c"), p8)).has_value());
}

TEST_CASE("tree_prn on the three regimes") {
    Graph two;
    two.add_edge("a", "b");
    TreePrnResult r1 = tree_prn(two);
    CHECK(r1.prn == 1);
    CHECK(uniformity(r1.witness) == 1);
    CHECK(represents(r1.witness, two));

    std::vector<Token> p5{Token("a"), Token("b"), Token("c"), Token("d"), Token("e")};
    Graph path = make_path(p5);
    TreePrnResult r2 = tree_prn(path);
    CHECK(r2.prn == 2);
    CHECK(uniformity(r2.witness) == 2);
    CHECK(represents(r2.witness, path));

    TreePrnResult r3 = tree_prn(s_graph());
    CHECK(r3.prn == 3);
    CHECK(uniformity(r3.witness) == 3);
    CHECK(represents(r3.witness, s_graph()));
}

TEST_CASE("tree_prn rejects non-trees and empty input") {
    CHECK_THROWS_AS(tree_prn(Graph{}), std::invalid_argument);
    Graph c4 = make_cycle({Token("a"), Token("b"), Token("c"), Token("d")});
    CHECK_THROWS_AS(tree_prn(c4), std::invalid_argument);
}
