#include "wordrep/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "wordrep/errors.hpp"

namespace wordrep::oracle {

namespace {

int env_int(const char* name, int fallback) {
    const char* v = std::getenv(name);
    if (!v || !*v) return fallback;
    try {
        return std::stoi(v);
    } catch (...) {
        return fallback;
    }
}

} // namespace

SearchLimits SearchLimits::from_env() {
    SearchLimits l;
    l.prn1_max_vertices = env_int("WORDREP_PRN1_MAX", l.prn1_max_vertices);
    l.prn2_max_vertices = env_int("WORDREP_PRN2_MAX", l.prn2_max_vertices);
    l.prn3_max_vertices = env_int("WORDREP_PRN3_MAX", l.prn3_max_vertices);
    l.circle_max_vertices = env_int("WORDREP_CIRCLE_MAX", l.circle_max_vertices);
    l.comparability_max_edges = env_int("WORDREP_ORIENT_MAX", l.comparability_max_edges);
    l.iso_max_vertices = env_int("WORDREP_ISO_MAX", l.iso_max_vertices);
    l.induced_max_vertices = env_int("WORDREP_INDUCED_MAX", l.induced_max_vertices);
    return l;
}

SearchOutcome prn_search(const Graph& g, int k, const SearchLimits& limits, bool canonical) {
    if (k < 1) throw std::invalid_argument("prn_search: k must be >= 1");
    const int n = static_cast<int>(g.vertex_count());
    if (n == 0) throw std::invalid_argument("prn_search: empty graph");
    const int bound = k == 1   ? limits.prn1_max_vertices
                      : k == 2 ? limits.prn2_max_vertices
                               : limits.prn3_max_vertices;
    if (n > bound)
        throw BoundExceeded("prn_search: |V| = " + std::to_string(n) + " exceeds bound " +
                            std::to_string(bound) + " for k = " + std::to_string(k) +
                            " (raise WORDREP_PRN" + std::to_string(std::min(k, 3)) + "_MAX)");

    const std::vector<Token>& verts = g.vertices();
    const auto target = g.adjacency_matrix();

    std::vector<int> ident(n);
    std::iota(ident.begin(), ident.end(), 0);
    std::vector<std::vector<int>> perms(k, ident);
    std::vector<std::vector<int>> pos(k, std::vector<int>(n));
    auto recompute = [&](int i) {
        for (int j = 0; j < n; ++j) pos[i][perms[i][j]] = j;
    };
    for (int i = 0; i < k; ++i) recompute(i);

    const int start = (canonical && k >= 2) ? 1 : 0;

    // Exact check: concatenation of permutations represents g iff each vertex
    // pair keeps one relative order across all k permutations exactly on edges.
    auto check_exact = [&]() {
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                bool order = pos[0][u] < pos[0][v];
                bool same = true;
                for (int t = 1; t < k; ++t) {
                    if ((pos[t][u] < pos[t][v]) != order) {
                        same = false;
                        break;
                    }
                }
                if (same != static_cast<bool>(target[u][v])) return false;
            }
        }
        return true;
    };

    auto make_witness = [&](const Embedding* relabel) {
        PermSequence seq;
        for (int i = 0; i < k; ++i) {
            Word p;
            p.reserve(n);
            for (int j = 0; j < n; ++j) {
                const Token& t = verts[perms[i][j]];
                p.push_back(relabel ? relabel->at(t) : t);
            }
            seq.perms.push_back(std::move(p));
        }
        return seq;
    };

    SearchOutcome out;
    while (true) {
        ++out.states_examined;
        if (!canonical) {
            if (check_exact()) {
                out.found = true;
                out.perm_witness = make_witness(nullptr);
                return out;
            }
        } else {
            // Derive the candidate's graph and compare up to isomorphism;
            // relabel the witness through the bijection so it represents g.
            Graph cand;
            for (const Token& v : verts) cand.add_vertex(v);
            for (int u = 0; u < n; ++u) {
                for (int v = u + 1; v < n; ++v) {
                    bool order = pos[0][u] < pos[0][v];
                    bool same = true;
                    for (int t = 1; t < k; ++t)
                        if ((pos[t][u] < pos[t][v]) != order) {
                            same = false;
                            break;
                        }
                    if (same) cand.add_edge(verts[u], verts[v]);
                }
            }
            if (auto iso = isomorphic(cand, g, limits)) {
                out.found = true;
                out.perm_witness = make_witness(&*iso);
                return out;
            }
        }
        int i = k - 1;
        while (i >= start && !std::next_permutation(perms[i].begin(), perms[i].end())) {
            perms[i] = ident;
            recompute(i);
            --i;
        }
        if (i < start) break;
        recompute(i);
    }
    return out;
}

bool is_permutation_graph_small(const Graph& g, const SearchLimits& limits) {
    const std::size_t n = g.vertex_count();
    if (n == 0) throw std::invalid_argument("is_permutation_graph_small: empty graph");
    if (g.edge_count() == n * (n - 1) / 2) return true; // complete, prn 1
    return prn_search(g, 2, limits).found;
}

Graph chord_intersection_graph(const ChordDiagram& d) {
    const std::size_t n = d.chords.size();
    if (d.labels.size() != n)
        throw std::invalid_argument("chord_intersection_graph: labels/chords size mismatch");
    std::vector<char> seen(2 * n, 0);
    for (auto [a, b] : d.chords) {
        if (a < 0 || b < 0 || a >= static_cast<int>(2 * n) || b >= static_cast<int>(2 * n) ||
            a == b || seen[a] || seen[b])
            throw std::invalid_argument("chord_intersection_graph: not a perfect matching");
        seen[a] = seen[b] = 1;
    }
    Graph g;
    for (const Token& t : d.labels) g.add_vertex(t);
    if (std::set<Token>(d.labels.begin(), d.labels.end()).size() != n)
        throw std::invalid_argument("chord_intersection_graph: duplicate chord labels");
    for (std::size_t i = 0; i < n; ++i) {
        auto [a, b] = std::minmax(d.chords[i].first, d.chords[i].second);
        for (std::size_t j = i + 1; j < n; ++j) {
            auto [c, e] = std::minmax(d.chords[j].first, d.chords[j].second);
            bool cross = (a < c && c < b && b < e) || (c < a && a < e && e < b);
            if (cross) g.add_edge(d.labels[i], d.labels[j]);
        }
    }
    return g;
}

SearchOutcome circle_search(const Graph& g, const SearchLimits& limits) {
    const int n = static_cast<int>(g.vertex_count());
    if (n == 0) throw std::invalid_argument("circle_search: empty graph");
    if (n > limits.circle_max_vertices)
        throw BoundExceeded("circle_search: |V| = " + std::to_string(n) + " exceeds bound " +
                            std::to_string(limits.circle_max_vertices) +
                            " (raise WORDREP_CIRCLE_MAX)");

    const std::vector<Token>& verts = g.vertices();
    std::vector<int> target_degrees;
    for (const Token& v : verts) target_degrees.push_back(static_cast<int>(g.degree(v)));
    std::sort(target_degrees.begin(), target_degrees.end());

    SearchOutcome out;
    std::vector<std::pair<int, int>> chords;
    chords.reserve(n);
    std::vector<char> used(2 * n, 0);

    std::function<bool()> rec = [&]() -> bool {
        int p = -1;
        for (int i = 0; i < 2 * n; ++i) {
            if (!used[i]) {
                p = i;
                break;
            }
        }
        if (p < 0) {
            ++out.states_examined;
            // degree-multiset pruning before the isomorphism test
            std::vector<int> deg(n, 0);
            for (int i = 0; i < n; ++i) {
                auto [a, b] = chords[i];
                for (int j = i + 1; j < n; ++j) {
                    auto [c, d] = chords[j];
                    if ((a < c && c < b && b < d) || (c < a && a < d && d < b)) {
                        ++deg[i];
                        ++deg[j];
                    }
                }
            }
            std::vector<int> sorted_deg = deg;
            std::sort(sorted_deg.begin(), sorted_deg.end());
            if (sorted_deg != target_degrees) return false;

            ChordDiagram d{chords, verts};
            Graph cand = chord_intersection_graph(d);
            if (auto iso = isomorphic(cand, g, limits)) {
                for (int i = 0; i < n; ++i) d.labels[i] = iso->at(verts[i]);
                out.found = true;
                out.chord_witness = std::move(d);
                return true;
            }
            return false;
        }
        used[p] = 1;
        for (int q = p + 1; q < 2 * n; ++q) {
            if (used[q]) continue;
            used[q] = 1;
            chords.emplace_back(p, q);
            if (rec()) return true;
            chords.pop_back();
            used[q] = 0;
        }
        used[p] = 0;
        return false;
    };
    rec();
    return out;
}

Graph local_complement(const Graph& g, const Token& v) {
    if (!g.has_vertex(v))
        throw std::invalid_argument("local_complement: vertex '" + v.name + "' not in graph");
    std::vector<Token> nbrs = g.neighbors(v);
    std::set<Token> nbr_set(nbrs.begin(), nbrs.end());
    Graph out;
    for (const Token& u : g.vertices()) out.add_vertex(u);
    for (const auto& [a, b] : g.edges())
        if (!(nbr_set.count(a) && nbr_set.count(b))) out.add_edge(a, b);
    for (std::size_t i = 0; i < nbrs.size(); ++i)
        for (std::size_t j = i + 1; j < nbrs.size(); ++j)
            if (!g.has_edge(nbrs[i], nbrs[j])) out.add_edge(nbrs[i], nbrs[j]);
    return out;
}

std::optional<Orientation> is_comparability_small(const Graph& g, const SearchLimits& limits) {
    const int n = static_cast<int>(g.vertex_count());
    const int m = static_cast<int>(g.edge_count());
    if (m > limits.comparability_max_edges)
        throw BoundExceeded("is_comparability_small: |E| = " + std::to_string(m) +
                            " exceeds bound " + std::to_string(limits.comparability_max_edges) +
                            " (raise WORDREP_ORIENT_MAX)");
    auto edge_list = g.edges();
    std::vector<std::pair<int, int>> e;
    for (const auto& [u, v] : edge_list) e.emplace_back(g.index_of(u), g.index_of(v));

    std::vector<std::vector<char>> dir(n, std::vector<char>(n, 0));
    std::vector<std::pair<int, int>> de(m);
    for (std::uint64_t mask = 0; mask < (1ull << m); ++mask) {
        for (int i = 0; i < m; ++i) {
            de[i] = (mask >> i) & 1 ? std::make_pair(e[i].second, e[i].first) : e[i];
            dir[de[i].first][de[i].second] = 1;
        }
        bool transitive = true;
        for (int i = 0; i < m && transitive; ++i)
            for (int j = 0; j < m; ++j)
                if (de[i].second == de[j].first && !dir[de[i].first][de[j].second]) {
                    transitive = false;
                    break;
                }
        if (transitive) {
            Orientation o;
            for (int i = 0; i < m; ++i)
                o.emplace_back(g.vertices()[de[i].first], g.vertices()[de[i].second]);
            return o;
        }
        for (int i = 0; i < m; ++i) dir[de[i].first][de[i].second] = 0;
    }
    return std::nullopt;
}

std::optional<Embedding> induced_subgraph(const Graph& host, const Graph& pattern,
                                          const SearchLimits& limits) {
    const int nh = static_cast<int>(host.vertex_count());
    const int np = static_cast<int>(pattern.vertex_count());
    if (nh > limits.induced_max_vertices)
        throw BoundExceeded("induced_subgraph: host |V| = " + std::to_string(nh) +
                            " exceeds bound " + std::to_string(limits.induced_max_vertices) +
                            " (raise WORDREP_INDUCED_MAX)");
    if (np > nh || static_cast<int>(pattern.edge_count()) > static_cast<int>(host.edge_count()))
        return std::nullopt;
    if (np == 0) return Embedding{};

    auto ah = host.adjacency_matrix();
    auto ap = pattern.adjacency_matrix();
    std::vector<int> dh(nh, 0), dp(np, 0);
    for (int i = 0; i < nh; ++i)
        for (int j = 0; j < nh; ++j) dh[i] += ah[i][j];
    for (int i = 0; i < np; ++i)
        for (int j = 0; j < np; ++j) dp[i] += ap[i][j];

    // Connectivity-first placement order for early pruning.
    std::vector<int> order;
    std::vector<char> placed(np, 0);
    for (int step = 0; step < np; ++step) {
        int best = -1, best_links = -1, best_deg = -1;
        for (int v = 0; v < np; ++v) {
            if (placed[v]) continue;
            int links = 0;
            for (int u : order)
                if (ap[v][u]) ++links;
            if (links > best_links || (links == best_links && dp[v] > best_deg)) {
                best = v;
                best_links = links;
                best_deg = dp[v];
            }
        }
        order.push_back(best);
        placed[best] = 1;
    }

    std::vector<int> map_to(np, -1);
    std::vector<char> used(nh, 0);
    std::function<bool(int)> rec = [&](int step) -> bool {
        if (step == np) return true;
        int v = order[step];
        for (int h = 0; h < nh; ++h) {
            if (used[h] || dh[h] < dp[v]) continue;
            bool ok = true;
            for (int s = 0; s < step; ++s) {
                int u = order[s];
                if (ap[v][u] != ah[h][map_to[u]]) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            map_to[v] = h;
            used[h] = 1;
            if (rec(step + 1)) return true;
            used[h] = 0;
            map_to[v] = -1;
        }
        return false;
    };
    if (!rec(0)) return std::nullopt;
    Embedding emb;
    for (int v = 0; v < np; ++v) emb[pattern.vertices()[v]] = host.vertices()[map_to[v]];
    return emb;
}

std::optional<Embedding> isomorphic(const Graph& g1, const Graph& g2,
                                    const SearchLimits& limits) {
    const int n = static_cast<int>(g1.vertex_count());
    if (n > limits.iso_max_vertices ||
        static_cast<int>(g2.vertex_count()) > limits.iso_max_vertices)
        throw BoundExceeded("isomorphic: |V| exceeds bound " +
                            std::to_string(limits.iso_max_vertices) +
                            " (raise WORDREP_ISO_MAX)");
    if (g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count())
        return std::nullopt;
    if (n == 0) return Embedding{};

    auto a1 = g1.adjacency_matrix();
    auto a2 = g2.adjacency_matrix();

    // Vertex invariant: (degree, sorted neighbor degrees).
    auto invariants = [n](const std::vector<std::vector<char>>& a) {
        std::vector<int> deg(n, 0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) deg[i] += a[i][j];
        std::vector<std::vector<int>> inv(n);
        for (int i = 0; i < n; ++i) {
            inv[i].push_back(deg[i]);
            std::vector<int> nd;
            for (int j = 0; j < n; ++j)
                if (a[i][j]) nd.push_back(deg[j]);
            std::sort(nd.begin(), nd.end());
            inv[i].insert(inv[i].end(), nd.begin(), nd.end());
        }
        return inv;
    };
    auto inv1 = invariants(a1), inv2 = invariants(a2);
    {
        auto s1 = inv1, s2 = inv2;
        std::sort(s1.begin(), s1.end());
        std::sort(s2.begin(), s2.end());
        if (s1 != s2) return std::nullopt;
    }

    std::vector<int> map_to(n, -1);
    std::vector<char> used(n, 0);
    std::function<bool(int)> rec = [&](int v) -> bool {
        if (v == n) return true;
        for (int h = 0; h < n; ++h) {
            if (used[h] || inv1[v] != inv2[h]) continue;
            bool ok = true;
            for (int u = 0; u < v; ++u)
                if (a1[v][u] != a2[h][map_to[u]]) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            map_to[v] = h;
            used[h] = 1;
            if (rec(v + 1)) return true;
            used[h] = 0;
            map_to[v] = -1;
        }
        return false;
    };
    if (!rec(0)) return std::nullopt;
    Embedding emb;
    for (int v = 0; v < n; ++v) emb[g1.vertices()[v]] = g2.vertices()[map_to[v]];
    return emb;
}

ProbeReport conjecture_probe(const Graph& g, const SearchLimits& limits) {
    const int n = static_cast<int>(g.vertex_count());
    if (n == 0) throw std::invalid_argument("conjecture_probe: empty graph");
    if (n > 7)
        throw BoundExceeded("conjecture_probe: |V| = " + std::to_string(n) + " exceeds bound 7");

    ProbeReport r;
    if (prn_search(g, 1, limits).found) {
        r.reason = "R(G) = 1 (complete graph), premise does not apply";
        r.conclusion = "skipped";
        return r;
    }
    if (!circle_search(g, limits).found) {
        r.reason = "not a circle graph, so R(G) >= 3";
        r.conclusion = "skipped";
        return r;
    }
    if (!is_comparability_small(g, limits)) {
        r.reason = "not a comparability graph, prn undefined";
        r.conclusion = "skipped";
        return r;
    }
    r.applicable = true;
    r.reason = "circle graph, not complete, comparability: R(G) = 2 premise plausible";
    if (auto s2 = prn_search(g, 2, limits); s2.found) {
        r.prn_found = 2;
        r.witness = s2.perm_witness;
        r.conclusion = "consistent";
        return r;
    }
    if (auto s3 = prn_search(g, 3, limits); s3.found) {
        r.prn_found = 3;
        r.witness = s3.perm_witness;
        r.conclusion = "consistent";
    } else {
        r.conclusion = "inconclusive";
    }
    return r;
}

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

std::string canon_rooted(int root, int parent, const std::vector<std::vector<int>>& adj) {
    std::vector<std::string> parts;
    for (int c : adj[root])
        if (c != parent) parts.push_back(canon_rooted(c, root, adj));
    std::sort(parts.begin(), parts.end());
    std::string s = "(";
    for (const std::string& p : parts) s += p;
    s += ")";
    return s;
}

std::string canon_free(int n, const EdgeList& edges) {
    std::vector<std::vector<int>> adj(n);
    for (auto [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    // centers by repeated leaf stripping
    std::vector<int> deg(n);
    for (int i = 0; i < n; ++i) deg[i] = static_cast<int>(adj[i].size());
    std::vector<int> layer;
    std::vector<char> removed(n, 0);
    for (int i = 0; i < n; ++i)
        if (deg[i] <= 1) layer.push_back(i);
    int remaining = n;
    while (remaining > 2) {
        std::vector<int> next;
        for (int v : layer) {
            removed[v] = 1;
            --remaining;
            for (int u : adj[v])
                if (!removed[u] && --deg[u] == 1) next.push_back(u);
        }
        layer = std::move(next);
    }
    std::string best;
    for (int i = 0; i < n; ++i) {
        if (removed[i]) continue;
        std::string s = canon_rooted(i, -1, adj);
        if (best.empty() || s < best) best = s;
    }
    return best;
}

} // namespace

std::vector<Graph> all_free_trees(int n) {
    if (n < 1) throw std::invalid_argument("all_free_trees: n must be >= 1");
    std::vector<EdgeList> current{{}}; // the single tree on one vertex
    for (int size = 2; size <= n; ++size) {
        std::set<std::string> seen;
        std::vector<EdgeList> next;
        for (const EdgeList& t : current) {
            for (int v = 0; v < size - 1; ++v) {
                EdgeList grown = t;
                grown.emplace_back(v, size - 1);
                std::string c = canon_free(size, grown);
                if (seen.insert(c).second) next.push_back(std::move(grown));
            }
        }
        current = std::move(next);
    }
    std::vector<Graph> out;
    for (const EdgeList& t : current) {
        Graph g;
        for (int i = 0; i < n; ++i) g.add_vertex(Token(std::to_string(i + 1)));
        for (auto [u, v] : t) g.add_edge(Token(std::to_string(u + 1)), Token(std::to_string(v + 1)));
        out.push_back(std::move(g));
    }
    return out;
}

} // namespace wordrep::oracle
