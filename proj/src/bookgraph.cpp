#include "wordrep/bookgraph.hpp"

#include <stdexcept>

#include "wordrep/errors.hpp"
#include "wordrep/oracle.hpp"

namespace wordrep {

Token product_vertex(const Token& a, const Token& b) { return Token(a.name + "," + b.name); }

Graph cartesian_product(const Graph& g, const Graph& h) {
    Graph out;
    for (const Token& a : g.vertices())
        for (const Token& b : h.vertices()) out.add_vertex(product_vertex(a, b));
    for (const Token& a : g.vertices())
        for (const auto& [b, d] : h.edges())
            out.add_edge(product_vertex(a, b), product_vertex(a, d));
    for (const Token& b : h.vertices())
        for (const auto& [a, c] : g.edges())
            out.add_edge(product_vertex(a, b), product_vertex(c, b));
    return out;
}

namespace {

Token plain(int i) { return Token(std::to_string(i)); }
Token primed(int i, const std::string& suffix) { return Token(std::to_string(i) + suffix); }

} // namespace

Graph book(int m, const std::string& suffix) {
    if (m < 1) throw std::invalid_argument("book: m must be >= 1");
    Graph g;
    for (int i = 1; i <= m; ++i) {
        g.add_edge(plain(0), plain(i));
        g.add_edge(primed(0, suffix), primed(i, suffix));
    }
    for (int i = 0; i <= m; ++i) g.add_edge(plain(i), primed(i, suffix));
    return g;
}

PermSequence book_permutations(int m, const std::string& suffix) {
    if (m < 1) throw std::invalid_argument("book_permutations: m must be >= 1");
    Word q1, q2, q3;
    // q1 = 0' 1 1' 2 2' ... m m' 0
    q1.push_back(primed(0, suffix));
    for (int i = 1; i <= m; ++i) {
        q1.push_back(plain(i));
        q1.push_back(primed(i, suffix));
    }
    q1.push_back(plain(0));
    // q2 = 0' m m' (m-1) (m-1)' ... 1 1' 0
    q2.push_back(primed(0, suffix));
    for (int i = m; i >= 1; --i) {
        q2.push_back(plain(i));
        q2.push_back(primed(i, suffix));
    }
    q2.push_back(plain(0));
    // q3 = 1 2 ... m 0' 0 m' (m-1)' ... 1'
    for (int i = 1; i <= m; ++i) q3.push_back(plain(i));
    q3.push_back(primed(0, suffix));
    q3.push_back(plain(0));
    for (int i = m; i >= 1; --i) q3.push_back(primed(i, suffix));

    PermSequence seq;
    seq.perms = {std::move(q1), std::move(q2), std::move(q3)};
    if (!represents(seq.concat(), book(m, suffix)))
        throw CertificationError("book_permutations: word does not represent B_" +
                                 std::to_string(m));
    return seq;
}

BookNumbers book_numbers(int m, const std::string& suffix) {
    if (m < 1) throw std::invalid_argument("book_numbers: m must be >= 1");
    Graph bm = book(m, suffix);
    BookNumbers out;
    if (m <= 2) {
        // B1 = C4, B2 = the six-vertex ladder; both have a two-permutation word.
        oracle::SearchOutcome search = oracle::prn_search(bm, 2);
        if (!search.found)
            throw CertificationError("book_numbers: no 2-permutation word for B_" +
                                     std::to_string(m));
        out.representation_number = 2;
        out.prn = 2;
        out.witness = search.perm_witness->concat();
    } else {
        out.representation_number = 3;
        out.prn = 3;
        out.witness = book_permutations(m, suffix).concat();
    }
    if (!represents(out.witness, bm))
        throw CertificationError("book_numbers: witness does not represent B_" +
                                 std::to_string(m));
    return out;
}

} // namespace wordrep
