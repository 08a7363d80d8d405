#ifndef WORDREP_ORACLE_HPP
#define WORDREP_ORACLE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wordrep/graph.hpp"

namespace wordrep::oracle {

// Bounds for the exhaustive searches. Conservative defaults; each can be
// raised through the matching WORDREP_* environment variable. Exceeding a
// bound is an explicit refusal (BoundExceeded), never silent truncation.
struct SearchLimits {
    int prn1_max_vertices = 10;        // WORDREP_PRN1_MAX
    int prn2_max_vertices = 8;         // WORDREP_PRN2_MAX
    int prn3_max_vertices = 6;         // WORDREP_PRN3_MAX (also k > 3)
    int circle_max_vertices = 8;       // WORDREP_CIRCLE_MAX
    int comparability_max_edges = 20;  // WORDREP_ORIENT_MAX
    int iso_max_vertices = 10;         // WORDREP_ISO_MAX
    int induced_max_vertices = 32;     // WORDREP_INDUCED_MAX

    static SearchLimits from_env();
};

// Perfect matching of positions {0,...,2n-1} on a circle into n labeled
// chords. Crossing pairs define a circle graph.
struct ChordDiagram {
    std::vector<std::pair<int, int>> chords; // first < second
    std::vector<Token> labels;               // parallel to chords
};

struct SearchOutcome {
    bool found = false;
    std::optional<PermSequence> perm_witness;
    std::optional<ChordDiagram> chord_witness;
    std::uint64_t states_examined = 0;
};

// Exhaustive search for k permutations of g's vertices whose concatenation
// represents g. Enumerates raw k-tuples in lexicographic order and reports
// the first witness; with canonical=true the first permutation is fixed to
// sorted order and candidates are compared against g up to isomorphism (an
// optimization, equivalent on the found/not-found answer).
SearchOutcome prn_search(const Graph& g, int k,
                         const SearchLimits& limits = SearchLimits::from_env(),
                         bool canonical = false);

// True iff g has a representation by at most two permutations.
bool is_permutation_graph_small(const Graph& g,
                                const SearchLimits& limits = SearchLimits::from_env());

// Vertices = chord labels; edge iff the chords interlock.
Graph chord_intersection_graph(const ChordDiagram& d);

// Enumerates all chord diagrams on |V| chords (smallest free position is
// always matched first, anchoring the chord through position 0) and looks
// for one whose intersection graph is isomorphic to g. Degree-multiset
// pruning runs before the isomorphism test.
SearchOutcome circle_search(const Graph& g,
                            const SearchLimits& limits = SearchLimits::from_env());

// Complements the edges among N(v); everything else unchanged.
Graph local_complement(const Graph& g, const Token& v);

using Orientation = std::vector<std::pair<Token, Token>>; // directed edges

// Enumerates the 2^|E| orientations and returns a transitive one, if any.
std::optional<Orientation> is_comparability_small(
    const Graph& g, const SearchLimits& limits = SearchLimits::from_env());

using Embedding = std::map<Token, Token>;

// Injective map pattern -> host preserving both edges and non-edges.
// Backtracking with degree pruning.
std::optional<Embedding> induced_subgraph(
    const Graph& host, const Graph& pattern,
    const SearchLimits& limits = SearchLimits::from_env());

// Bijection g1 -> g2 preserving adjacency, if the graphs are isomorphic.
// Backtracking over degree-compatible assignments with neighborhood pruning.
std::optional<Embedding> isomorphic(
    const Graph& g1, const Graph& g2,
    const SearchLimits& limits = SearchLimits::from_env());

// Experimental probe of "R(G) = 2 implies prn(G) <= 3": when g looks like a
// representation-number-2 comparability graph (circle, not complete,
// transitive orientation exists), search for a representation with at most
// three permutations. A not-found answer is inconclusive, never a
// refutation, because the k=3 search bound may be the binding constraint.
struct ProbeReport {
    bool applicable = false;
    std::string reason;      // why skipped / what premise held
    std::string conclusion;  // "skipped" | "consistent" | "inconclusive"
    std::optional<int> prn_found;
    std::optional<PermSequence> witness;
};

ProbeReport conjecture_probe(const Graph& g,
                             const SearchLimits& limits = SearchLimits::from_env());

// All non-isomorphic free trees on n vertices, with tokens "1".."n".
// Used by the exhaustive tree checks.
std::vector<Graph> all_free_trees(int n);

} // namespace wordrep::oracle

#endif
