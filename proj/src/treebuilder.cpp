#include "wordrep/treebuilder.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_map>

#include "wordrep/errors.hpp"
#include "wordrep/oracle.hpp"

namespace wordrep {

RootedLabeledTree root_and_label(const Graph& t, const Token& root) {
    const int n = static_cast<int>(t.vertex_count());
    if (n == 0) throw std::invalid_argument("root_and_label: empty graph");
    if (!t.has_vertex(root))
        throw std::invalid_argument("root_and_label: root '" + root.name + "' is not a vertex");
    if (t.edge_count() != static_cast<std::size_t>(n) - 1)
        throw std::invalid_argument("root_and_label: not a tree (|E| != |V|-1)");

    // Adjacency lists once up front; Graph::neighbors would rescan the whole
    // vertex set per call.
    std::map<Token, std::vector<Token>> adj;
    for (const auto& [u, v] : t.edges()) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (auto& [v, list] : adj) std::sort(list.begin(), list.end());

    // BFS with ascending-token sibling order; record depth and parent.
    std::vector<Token> order;
    std::map<Token, int> depth;
    std::map<Token, Token> parent;
    std::deque<Token> q{root};
    depth[root] = 0;
    while (!q.empty()) {
        Token v = q.front();
        q.pop_front();
        order.push_back(v);
        for (const Token& u : adj[v]) {
            if (depth.count(u)) continue;
            depth[u] = depth[v] + 1;
            parent.emplace(u, v);
            q.push_back(u);
        }
    }
    if (static_cast<int>(order.size()) != n)
        throw std::invalid_argument("root_and_label: not a tree (disconnected)");

    RootedLabeledTree out;
    out.tree = t;
    out.root = root;
    out.n = n;
    int next_odd = 1, next_even = 2;
    for (const Token& v : order) {
        int label = (depth[v] % 2 == 0) ? (next_odd += 2) - 2 : (next_even += 2) - 2;
        out.label_of.emplace(v, label);
        out.max_label = std::max(out.max_label, label);
    }
    out.token_of_label.assign(out.max_label + 1, Token("x"));
    for (const auto& [v, label] : out.label_of) out.token_of_label[label] = v;
    out.parent_of.assign(out.max_label + 1, 0);
    out.children_of.assign(out.max_label + 1, {});
    for (const Token& v : order) {
        if (v == root) continue;
        int lv = out.label_of.at(v);
        int lp = out.label_of.at(parent.at(v));
        out.parent_of[lv] = lp;
        out.children_of[lp].push_back(lv);
    }
    for (auto& kids : out.children_of) std::sort(kids.begin(), kids.end());
    return out;
}

namespace {

int position_of(const std::vector<int>& p, int label) {
    auto it = std::find(p.begin(), p.end(), label);
    return static_cast<int>(it - p.begin());
}

Word labels_to_word(const std::vector<int>& p, const RootedLabeledTree& t) {
    Word w;
    w.reserve(p.size());
    for (int label : p) w.push_back(t.token_of_label[label]);
    return w;
}

// Certificate: in a concatenation of permutations, two letters alternate iff
// their relative order agrees in every permutation. For the output of the
// builder that must happen exactly on the parent-child pairs.
void certify(const RootedLabeledTree& t, const std::vector<int>& p1,
             const std::vector<int>& p2, const std::vector<int>& p3) {
    const int n = t.n;
    std::vector<int> pos1(t.max_label + 1), pos2(t.max_label + 1), pos3(t.max_label + 1);
    for (int i = 0; i < n; ++i) {
        pos1[p1[i]] = i;
        pos2[p2[i]] = i;
        pos3[p3[i]] = i;
    }
    std::vector<int> labels;
    labels.reserve(n);
    for (const auto& [tok, label] : t.label_of) labels.push_back(label);
    std::sort(labels.begin(), labels.end());
    for (int u : labels) {
        for (int v : labels) {
            if (v <= u) continue;
            bool adjacent = t.parent_of[u] == v || t.parent_of[v] == u;
            bool o1 = pos1[u] < pos1[v];
            bool alternate = o1 == (pos2[u] < pos2[v]) && o1 == (pos3[u] < pos3[v]);
            if (adjacent != alternate)
                throw CertificationError("tree_permutations: output fails on pair {" +
                                         t.token_of_label[u].name + "," +
                                         t.token_of_label[v].name + "}");
        }
    }
}

} // namespace

PermSequence tree_permutations(const RootedLabeledTree& t, TreeSteps* trace) {
    const int root = t.label_of.at(t.root);
    std::vector<int> p1{root}, p2{root}, p3{root};
    std::deque<int> q{root};
    // Per odd parent: letters already inserted directly after it in p1 by its
    // non-leftmost children. Keeps the D-blocks contiguous.
    std::unordered_map<int, int> d_after;

    while (!q.empty()) {
        int a = q.front();
        q.pop_front();
        const std::vector<int>& kids = t.children_of[a];
        if (kids.empty()) continue;

        if (a % 2 == 1) {
            // odd: children precede a in p1/p2, and prefix p3
            p1.insert(p1.begin() + position_of(p1, a), kids.begin(), kids.end());
            p2.insert(p2.begin() + position_of(p2, a), kids.rbegin(), kids.rend());
            p3.insert(p3.begin(), kids.begin(), kids.end());
        } else {
            int par = t.parent_of[a];
            const std::vector<int>& sibs = t.children_of[par];
            if (a == sibs.front()) {
                p1.insert(p1.begin() + position_of(p1, a) + 1, kids.begin(), kids.end());
                int ipar = position_of(p2, par);
                if (ipar == 0 || p2[ipar - 1] != a)
                    throw CertificationError("tree_permutations: leftmost child not before its parent in p2");
                p2.insert(p2.begin() + ipar + 1, kids.rbegin(), kids.rend());
                p3.insert(p3.begin() + position_of(p3, a) + 1, kids.begin(), kids.end());
            } else {
                int ipar = position_of(p1, par);
                int& off = d_after[par];
                p1.insert(p1.begin() + ipar + 1 + off, kids.begin(), kids.end());
                off += static_cast<int>(kids.size());
                p2.insert(p2.begin() + position_of(p2, a) + 1, kids.rbegin(), kids.rend());
                p3.insert(p3.begin() + position_of(p3, a) + 1, kids.begin(), kids.end());
            }
        }
        for (int c : kids)
            if (!t.children_of[c].empty()) q.push_back(c);
        if (trace)
            trace->steps.push_back({labels_to_word(p1, t), labels_to_word(p2, t),
                                    labels_to_word(p3, t)});
    }

    certify(t, p1, p2, p3);
    PermSequence seq;
    seq.perms = {labels_to_word(p1, t), labels_to_word(p2, t), labels_to_word(p3, t)};
    return seq;
}

Graph s_graph() {
    Graph g;
    g.add_edge("1", "2");
    g.add_edge("1", "4");
    g.add_edge("1", "6");
    g.add_edge("2", "3");
    g.add_edge("4", "5");
    g.add_edge("6", "7");
    return g;
}

std::optional<std::map<Token, Token>> contains_s(const Graph& g) {
    return oracle::induced_subgraph(g, s_graph());
}

TreePrnResult tree_prn(const Graph& t, const Token& root) {
    RootedLabeledTree rooted = root_and_label(t, root); // validates tree
    TreePrnResult result;
    if (rooted.n <= 2) {
        result.prn = 1;
        result.witness = Word(t.vertices().begin(), t.vertices().end());
    } else if (contains_s(t)) {
        result.prn = 3;
        result.witness = tree_permutations(rooted).concat();
    } else {
        // S-free tree on >= 3 vertices is a permutation graph; find a
        // two-permutation witness exhaustively.
        oracle::SearchOutcome out = oracle::prn_search(t, 2);
        if (!out.found)
            throw CertificationError("tree_prn: S-free tree has no 2-permutation word");
        result.prn = 2;
        result.witness = out.perm_witness->concat();
    }
    if (!represents(result.witness, t))
        throw CertificationError("tree_prn: witness does not represent the tree");
    return result;
}

TreePrnResult tree_prn(const Graph& t) {
    if (t.vertex_count() == 0) throw std::invalid_argument("tree_prn: empty graph");
    return tree_prn(t, t.vertices().front());
}

} // namespace wordrep
