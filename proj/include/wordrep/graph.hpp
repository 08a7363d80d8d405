#ifndef WORDREP_GRAPH_HPP
#define WORDREP_GRAPH_HPP

#include <cstddef>
#include <set>
#include <utility>
#include <vector>

#include "wordrep/word.hpp"

namespace wordrep {

// Simple undirected labeled graph. No self-loops; edge endpoints are always
// vertices of the graph.
class Graph {
public:
    Graph() = default;

    void add_vertex(const Token& v);
    void add_edge(const Token& u, const Token& v); // adds missing endpoints

    bool has_vertex(const Token& v) const;
    bool has_edge(const Token& u, const Token& v) const;

    const std::vector<Token>& vertices() const { return verts_; } // sorted
    std::vector<std::pair<Token, Token>> edges() const;           // normalized, sorted
    std::size_t vertex_count() const { return verts_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    std::vector<Token> neighbors(const Token& v) const; // sorted
    std::size_t degree(const Token& v) const;

    // Index of v in the sorted vertex list, or -1.
    int index_of(const Token& v) const;
    // n x n adjacency matrix in sorted vertex order (for search hot loops).
    std::vector<std::vector<char>> adjacency_matrix() const;

    bool operator==(const Graph& other) const {
        return verts_ == other.verts_ && edges_ == other.edges_;
    }

private:
    std::pair<Token, Token> normalized(const Token& u, const Token& v) const;

    std::vector<Token> verts_; // kept sorted, unique
    std::set<std::pair<Token, Token>> edges_;
};

// The graph represented by w: vertices are the distinct letters, edges the
// alternating pairs. Throws on the empty word.
Graph derive_graph(const Word& w);

// True iff derive_graph(w) has exactly g's edge set. Throws if the distinct
// letters of w differ from g's vertex set.
bool represents(const Word& w, const Graph& g);

// Small builders.
Graph make_path(const std::vector<Token>& tokens);
Graph make_cycle(const std::vector<Token>& tokens);
Graph make_star(const Token& center, const std::vector<Token>& leaves);
Graph make_complete(const std::vector<Token>& tokens);

} // namespace wordrep

#endif
