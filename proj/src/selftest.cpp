#include "wordrep/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>

#include "wordrep/bookgraph.hpp"
#include "wordrep/graph.hpp"
#include "wordrep/io.hpp"
#include "wordrep/oracle.hpp"
#include "wordrep/pathcycle.hpp"
#include "wordrep/treebuilder.hpp"

#ifndef WORDREP_FIXTURE_DIR
#define WORDREP_FIXTURE_DIR "tests/fixtures"
#endif

namespace wordrep::selftest {

namespace {

using Clock = std::chrono::steady_clock;

struct Check {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& msg) {
        if (!cond && ok) {
            ok = false;
            detail = msg;
        }
    }
    void note(const std::string& msg) {
        if (ok) detail = msg;
    }
};

Graph fig6_tree() {
    Graph g;
    const char* edges[][2] = {{"1", "2"},  {"1", "4"}, {"1", "6"}, {"2", "3"},
                              {"2", "5"},  {"3", "8"}, {"4", "7"}, {"7", "10"},
                              {"6", "9"},  {"6", "11"}, {"11", "12"}};
    for (auto& e : edges) g.add_edge(e[0], e[1]);
    return g;
}

Graph book3_fig2() {
    // B_3 in the 1..8 labeling: spine 1,5; pages 2,3,4 and 6,7,8.
    Graph g;
    const char* edges[][2] = {{"1", "2"}, {"1", "3"}, {"1", "4"}, {"1", "5"}, {"2", "6"},
                              {"3", "7"}, {"4", "8"}, {"5", "6"}, {"5", "7"}, {"5", "8"}};
    for (auto& e : edges) g.add_edge(e[0], e[1]);
    return g;
}

Word s_word() {
    return parse_word("2 3 4 6 1 5 7 6 7 4 5 2 1 3 2 3 4 5 6 7 1");
}

// Closed forms from the two-permutation path construction; the acceptance
// check keeps its own transcription, independent of the builder.
Word expected_path_p2(const std::vector<Token>& a) {
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

Word expected_path_p3(const std::vector<Token>& a) {
    const int n = static_cast<int>(a.size());
    Word p;
    if (n % 2 == 1) {
        for (int i = n - 1; i >= 2; i -= 2) {
            p.push_back(a[i - 1]);
            p.push_back(a[i]);
        }
    } else {
        p.push_back(a[n - 1]);
        for (int i = n - 2; i >= 2; i -= 2) {
            p.push_back(a[i - 1]);
            p.push_back(a[i]);
        }
    }
    p.push_back(a[0]);
    return p;
}

void criterion_golden_tree(Check& c) {
    RootedLabeledTree t = root_and_label(fig6_tree(), Token("1"));
    PermSequence seq = tree_permutations(t);
    c.require(to_string(seq.perms[0]) == "2 8 3 5 4 6 1 10 7 9 12 11",
              "p1 mismatch: " + to_string(seq.perms[0]));
    c.require(to_string(seq.perms[1]) == "6 12 11 9 4 10 7 2 1 5 8 3",
              "p2 mismatch: " + to_string(seq.perms[1]));
    c.require(to_string(seq.perms[2]) == "12 10 8 2 3 5 4 7 6 9 11 1",
              "p3 mismatch: " + to_string(seq.perms[2]));
    c.require(represents(seq.concat(), fig6_tree()), "word does not represent the tree");
}

void criterion_all_trees(Check& c) {
    const int expected_counts[] = {0, 1, 1, 1, 2, 3, 6, 11, 23, 47, 106};
    long long checked = 0;
    for (int n = 1; n <= 10; ++n) {
        std::vector<Graph> trees = oracle::all_free_trees(n);
        c.require(static_cast<int>(trees.size()) == expected_counts[n],
                  "free tree count at n=" + std::to_string(n) + " is " +
                      std::to_string(trees.size()));
        if (!c.ok) return;
        for (const Graph& t : trees) {
            for (const Token& root : t.vertices()) {
                Word w = tree_permutations(root_and_label(t, root)).concat();
                c.require(uniformity(w) == std::optional<int>(3),
                          "word not 3-uniform (n=" + std::to_string(n) + ")");
                c.require(represents(w, t),
                          "word fails on a tree with n=" + std::to_string(n) +
                              " rooted at " + root.name);
                if (!c.ok) return;
                ++checked;
            }
        }
    }
    c.note(std::to_string(checked) + " rooted trees checked");
}

void criterion_graph_s(Check& c, bool quick) {
    Graph s = s_graph();
    c.require(represents(s_word(), s), "the 21-letter word does not represent S");
    if (quick) {
        c.note("exhaustive prn_search(S,2) skipped (--quick)");
        return;
    }
    oracle::SearchOutcome out = oracle::prn_search(s, 2);
    c.require(!out.found, "unexpected 2-permutation word for S");
    c.require(out.states_examined == 25401600ull,
              "examined " + std::to_string(out.states_examined) + " pairs, expected 25401600");
    c.note("prn(S) = 3 certified over 25401600 pairs");
}

void criterion_paths(Check& c) {
    for (int n = 3; n <= 14; ++n) {
        std::vector<Token> a = default_path_tokens(n);
        PermSequence two = path_permutations(n, a);
        c.require(two.perms[0] == expected_path_p2(a),
                  "p2 closed form mismatch at n=" + std::to_string(n));
        c.require(two.perms[1] == expected_path_p3(a),
                  "p3 closed form mismatch at n=" + std::to_string(n));
        c.require(represents(two.concat(), make_path(a)),
                  "p2p3 fails on P_" + std::to_string(n));
        if (!c.ok) return;
    }
}

void criterion_cycles(Check& c) {
    for (int n = 6; n <= 14; n += 2) {
        std::vector<Token> a = default_path_tokens(n);
        Word w = cycle_permutations(n, a).concat();
        c.require(uniformity(w) == std::optional<int>(3),
                  "cycle word not 3-uniform at n=" + std::to_string(n));
        c.require(represents(w, make_cycle(a)), "cycle word fails on C_" + std::to_string(n));
        if (!c.ok) return;
    }
    oracle::SearchOutcome out = oracle::prn_search(make_cycle(default_path_tokens(6)), 2);
    c.require(!out.found, "unexpected 2-permutation word for C6");
    c.require(out.states_examined == 518400ull,
              "examined " + std::to_string(out.states_examined) + " pairs, expected 518400");
    c.note("prn(C6) >= 3 certified over 518400 pairs");
}

void criterion_books(Check& c, bool quick) {
    for (int m = 1; m <= 12; ++m) {
        Word w = book_permutations(m).concat();
        c.require(uniformity(w) == std::optional<int>(3),
                  "book word not 3-uniform at m=" + std::to_string(m));
        c.require(represents(w, book(m)), "q1q2q3 fails on B_" + std::to_string(m));
        if (!c.ok) return;
    }
    if (quick) {
        c.note("exhaustive circle_search(B3) skipped (--quick)");
        return;
    }
    oracle::SearchOutcome out = oracle::circle_search(book(3));
    c.require(!out.found, "unexpected chord diagram for B3");
    c.require(out.states_examined == 2027025ull,
              "examined " + std::to_string(out.states_examined) + " diagrams, expected 2027025");
    c.note("R(B3) = 3 certified over 2027025 diagrams");
}

void criterion_local_complement(Check& c, const std::string& fixture_dir) {
    const std::string path = fixture_dir + "/fig3_local_complement.txt";
    Graph expected;
    try {
        expected = parse_graph_file(path);
    } catch (const std::exception& e) {
        c.require(false, std::string("fixture: ") + e.what());
        return;
    }
    Graph b3 = book3_fig2();
    Graph lc = oracle::local_complement(b3, Token("1"));
    c.require(lc == expected, "local complement at 1 differs from the golden edge set");
    c.require(oracle::local_complement(lc, Token("1")) == b3, "involution property fails");
}

void criterion_performance(Check& c) {
    auto time_path_tree = [](int n) {
        std::vector<Token> toks;
        toks.reserve(n);
        for (int i = 1; i <= n; ++i) toks.emplace_back(std::to_string(i));
        Graph p = make_path(toks);
        RootedLabeledTree t = root_and_label(p, toks.front());
        auto t0 = Clock::now();
        tree_permutations(t);
        return std::chrono::duration<double>(Clock::now() - t0).count();
    };
    double t2500 = time_path_tree(2500);
    double t5000 = time_path_tree(5000);
    double t10000 = time_path_tree(10000);

    std::vector<Token> leaves;
    for (int i = 1; i <= 10000; ++i) leaves.emplace_back(std::to_string(i));
    Graph star = make_star(Token("0"), leaves);
    auto t0 = Clock::now();
    tree_permutations(root_and_label(star, Token("0")));
    double tstar = std::chrono::duration<double>(Clock::now() - t0).count();

    c.require(t10000 <= 10.0, "10000-vertex path took " + std::to_string(t10000) + " s");
    c.require(tstar <= 10.0, "10000-leaf star took " + std::to_string(tstar) + " s");
    // loose quadratic envelope; tiny times are floored against timer noise
    const double floor_s = 0.02;
    double r1 = t5000 / std::max(t2500, floor_s);
    double r2 = t10000 / std::max(t5000, floor_s);
    c.require(r1 <= 5.0, "2500->5000 ratio " + std::to_string(r1));
    c.require(r2 <= 5.0, "5000->10000 ratio " + std::to_string(r2));
    std::ostringstream msg;
    msg << std::fixed << std::setprecision(3) << "path t(2500)=" << t2500
        << " t(5000)=" << t5000 << " t(10000)=" << t10000 << " star t=" << tstar << " (s)";
    c.note(msg.str());
}

void criterion_cross_oracle(Check& c, unsigned seed) {
    std::mt19937 rng(seed);
    const std::string alphabet = "abcdefg";
    for (int trial = 0; trial < 500; ++trial) {
        int letters = std::uniform_int_distribution<int>(1, 7)(rng);
        Word w;
        for (int i = 0; i < letters; ++i) {
            Token t(std::string(1, alphabet[i]));
            w.push_back(t);
            w.push_back(t);
        }
        std::shuffle(w.begin(), w.end(), rng);

        oracle::ChordDiagram d;
        std::map<Token, std::vector<int>> positions;
        for (int i = 0; i < static_cast<int>(w.size()); ++i) positions[w[i]].push_back(i);
        for (const auto& [t, ps] : positions) {
            d.chords.emplace_back(ps[0], ps[1]);
            d.labels.push_back(t);
        }
        c.require(derive_graph(w) == oracle::chord_intersection_graph(d),
                  "mismatch on trial " + std::to_string(trial) + ": " + to_string(w));
        if (!c.ok) return;
    }
    c.note("500 random 2-uniform words agree with their chord diagrams");
}

} // namespace

std::string default_fixture_dir() { return WORDREP_FIXTURE_DIR; }

std::vector<CriterionResult> run_acceptance(const Options& opts) {
    const std::string fixtures =
        opts.fixture_dir.empty() ? default_fixture_dir() : opts.fixture_dir;

    struct Entry {
        int id;
        std::string name;
        std::function<void(Check&)> fn;
    };
    std::vector<Entry> entries = {
        {1, "golden-tree-trace", [](Check& c) { criterion_golden_tree(c); }},
        {2, "all-trees-n<=10", [](Check& c) { criterion_all_trees(c); }},
        {3, "graph-s-prn-3", [&](Check& c) { criterion_graph_s(c, opts.quick); }},
        {4, "paths-closed-forms", [](Check& c) { criterion_paths(c); }},
        {5, "even-cycles", [](Check& c) { criterion_cycles(c); }},
        {6, "book-graphs", [&](Check& c) { criterion_books(c, opts.quick); }},
        {7, "local-complement-golden",
         [&](Check& c) { criterion_local_complement(c, fixtures); }},
        {8, "performance-envelope", [](Check& c) { criterion_performance(c); }},
        {9, "cross-oracle-chords", [&](Check& c) { criterion_cross_oracle(c, opts.seed); }},
    };

    std::vector<CriterionResult> results;
    for (const Entry& e : entries) {
        CriterionResult r;
        r.id = e.id;
        r.name = e.name;
        Check c;
        auto t0 = Clock::now();
        try {
            e.fn(c);
            r.pass = c.ok;
            r.detail = c.detail;
        } catch (const std::exception& ex) {
            r.pass = false;
            r.detail = std::string("exception: ") + ex.what();
        }
        r.elapsed_s = std::chrono::duration<double>(Clock::now() - t0).count();
        results.push_back(std::move(r));
    }
    return results;
}

bool report(const std::vector<CriterionResult>& results, std::ostream& out) {
    bool all_pass = true;
    for (const CriterionResult& r : results) {
        const char* tag = r.skipped ? "SKIP" : (r.pass ? "PASS" : "FAIL");
        if (!r.skipped && !r.pass) all_pass = false;
        out << tag << " " << r.id << " " << r.name;
        if (!r.detail.empty()) out << ": " << r.detail;
        out << " (" << std::fixed << std::setprecision(2) << r.elapsed_s << " s)\n";
    }
    out << (all_pass ? "acceptance: all criteria passed\n" : "acceptance: FAILURES above\n");
    return all_pass;
}

} // namespace wordrep::selftest
