#include "wordrep/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace wordrep {

void Graph::add_vertex(const Token& v) {
    auto it = std::lower_bound(verts_.begin(), verts_.end(), v);
    if (it == verts_.end() || *it != v) verts_.insert(it, v);
}

std::pair<Token, Token> Graph::normalized(const Token& u, const Token& v) const {
    return u < v ? std::make_pair(u, v) : std::make_pair(v, u);
}

void Graph::add_edge(const Token& u, const Token& v) {
    if (u == v) throw std::invalid_argument("add_edge: self-loop on '" + u.name + "'");
    add_vertex(u);
    add_vertex(v);
    edges_.insert(normalized(u, v));
}

bool Graph::has_vertex(const Token& v) const {
    return std::binary_search(verts_.begin(), verts_.end(), v);
}

bool Graph::has_edge(const Token& u, const Token& v) const {
    if (u == v) return false;
    return edges_.count(normalized(u, v)) != 0;
}

std::vector<std::pair<Token, Token>> Graph::edges() const {
    return {edges_.begin(), edges_.end()};
}

std::vector<Token> Graph::neighbors(const Token& v) const {
    std::vector<Token> out;
    for (const Token& u : verts_)
        if (u != v && has_edge(u, v)) out.push_back(u);
    return out;
}

std::size_t Graph::degree(const Token& v) const { return neighbors(v).size(); }

int Graph::index_of(const Token& v) const {
    auto it = std::lower_bound(verts_.begin(), verts_.end(), v);
    if (it == verts_.end() || *it != v) return -1;
    return static_cast<int>(it - verts_.begin());
}

std::vector<std::vector<char>> Graph::adjacency_matrix() const {
    const std::size_t n = verts_.size();
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (const auto& [u, v] : edges_) {
        int i = index_of(u), j = index_of(v);
        adj[i][j] = adj[j][i] = 1;
    }
    return adj;
}

Graph derive_graph(const Word& w) {
    if (w.empty()) throw std::invalid_argument("derive_graph: empty word");
    std::vector<Token> verts = distinct_letters(w);
    Graph g;
    for (const Token& v : verts) g.add_vertex(v);
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (alternates(w, verts[i], verts[j])) g.add_edge(verts[i], verts[j]);
    return g;
}

bool represents(const Word& w, const Graph& g) {
    if (w.empty()) throw std::invalid_argument("represents: empty word");
    if (distinct_letters(w) != g.vertices())
        throw std::invalid_argument("represents: word letters do not match graph vertices");
    return derive_graph(w) == g;
}

Graph make_path(const std::vector<Token>& tokens) {
    Graph g;
    for (const Token& t : tokens) g.add_vertex(t);
    for (std::size_t i = 0; i + 1 < tokens.size(); ++i) g.add_edge(tokens[i], tokens[i + 1]);
    return g;
}

Graph make_cycle(const std::vector<Token>& tokens) {
    if (tokens.size() < 3) throw std::invalid_argument("make_cycle: need at least 3 vertices");
    Graph g = make_path(tokens);
    g.add_edge(tokens.back(), tokens.front());
    return g;
}

Graph make_star(const Token& center, const std::vector<Token>& leaves) {
    Graph g;
    g.add_vertex(center);
    for (const Token& l : leaves) g.add_edge(center, l);
    return g;
}

Graph make_complete(const std::vector<Token>& tokens) {
    Graph g;
    for (const Token& t : tokens) g.add_vertex(t);
    for (std::size_t i = 0; i < tokens.size(); ++i)
        for (std::size_t j = i + 1; j < tokens.size(); ++j) g.add_edge(tokens[i], tokens[j]);
    return g;
}

} // namespace wordrep
