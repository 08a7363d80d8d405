#include "wordrep/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace wordrep {

namespace {
// Strip a '#' comment and surrounding whitespace.
std::string strip(const std::string& line) {
    std::string s = line.substr(0, line.find('#'));
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

[[noreturn]] void parse_fail(int lineno, const std::string& msg) {
    throw std::runtime_error("line " + std::to_string(lineno) + ": " + msg);
}
} // namespace

Word parse_word(const std::string& line) {
    Word w;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) w.emplace_back(tok);
    return w;
}

Word read_word(std::istream& in) {
    std::string line;
    while (std::getline(in, line)) {
        std::string s = strip(line);
        if (!s.empty()) return parse_word(s);
    }
    throw std::runtime_error("no word found in input");
}

Graph parse_graph(std::istream& in) {
    std::string line;
    int lineno = 0;
    long long n = -1, m = -1;
    Graph g;
    long long edges_read = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string s = strip(line);
        if (s.empty()) continue;
        std::istringstream ls(s);
        if (n < 0) {
            if (!(ls >> n >> m) || n < 0 || m < 0)
                parse_fail(lineno, "expected header 'n m'");
            std::string extra;
            if (ls >> extra) parse_fail(lineno, "trailing content after header");
            continue;
        }
        std::string u, v;
        if (!(ls >> u >> v)) parse_fail(lineno, "expected edge 'u v'");
        std::string extra;
        if (ls >> extra) parse_fail(lineno, "trailing content after edge");
        if (u == v) parse_fail(lineno, "self-loop '" + u + "'");
        try {
            g.add_edge(Token(u), Token(v));
        } catch (const std::invalid_argument& e) {
            parse_fail(lineno, e.what());
        }
        ++edges_read;
    }
    if (n < 0) throw std::runtime_error("empty graph input, expected 'n m' header");
    if (edges_read != m)
        throw std::runtime_error("header declares " + std::to_string(m) + " edges, found " +
                                 std::to_string(edges_read));
    if (static_cast<long long>(g.vertex_count()) != n)
        throw std::runtime_error("header declares " + std::to_string(n) + " vertices, edges name " +
                                 std::to_string(g.vertex_count()));
    return g;
}

Graph parse_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    try {
        return parse_graph(in);
    } catch (const std::runtime_error& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

std::string format_graph(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges()) out << u.name << ' ' << v.name << '\n';
    return out.str();
}

nlohmann::json graph_to_json(const Graph& g) {
    nlohmann::json j;
    j["n"] = g.vertex_count();
    j["m"] = g.edge_count();
    nlohmann::json verts = nlohmann::json::array();
    for (const Token& v : g.vertices()) verts.push_back(v.name);
    j["vertices"] = verts;
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back({u.name, v.name});
    j["edges"] = edges;
    return j;
}

Graph graph_from_json(const nlohmann::json& j) {
    Graph g;
    for (const auto& v : j.at("vertices")) g.add_vertex(Token(v.get<std::string>()));
    for (const auto& e : j.at("edges"))
        g.add_edge(Token(e.at(0).get<std::string>()), Token(e.at(1).get<std::string>()));
    return g;
}

nlohmann::json perms_to_json(const PermSequence& seq) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Word& p : seq.perms) arr.push_back(to_string(p));
    return arr;
}

} // namespace wordrep
