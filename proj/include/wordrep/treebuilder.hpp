#ifndef WORDREP_TREEBUILDER_HPP
#define WORDREP_TREEBUILDER_HPP

#include <map>
#include <optional>
#include <vector>

#include "wordrep/graph.hpp"

namespace wordrep {

// A tree rooted and labeled by BFS parity: odd labels 1,3,5,... go to
// even-depth vertices in BFS order, even labels 2,4,6,... to odd-depth
// vertices in BFS order. Sibling order in the BFS is ascending token order,
// so children lists ascend by label.
struct RootedLabeledTree {
    Graph tree;
    Token root;
    int n = 0;
    // Labels are not contiguous when the two depth-parity classes differ in
    // size (a star has leaves 2,4,...,2m); arrays indexed by label are sized
    // max_label + 1.
    int max_label = 0;
    std::vector<Token> token_of_label;       // by label; [0] unused
    std::map<Token, int> label_of;
    std::vector<int> parent_of;              // by label; 0 for the root
    std::vector<std::vector<int>> children_of; // by label, ascending
};

// BFS from root with the parity labeling above. Throws std::invalid_argument
// if t is not a connected acyclic graph or root is not a vertex.
RootedLabeledTree root_and_label(const Graph& t, const Token& root);

// Snapshots of (p1,p2,p3) taken after each processed vertex, for tests.
struct TreeSteps {
    struct Snapshot {
        Word p1, p2, p3;
    };
    std::vector<Snapshot> steps;
};

// Three permutations whose concatenation represents the tree permutationally,
// built by queue-driven rewriting. The result is certified internally against
// the tree's adjacency; a failure throws CertificationError.
PermSequence tree_permutations(const RootedLabeledTree& t, TreeSteps* trace = nullptr);

// The 7-vertex spider with three legs of length 2, the obstruction that
// separates prn 2 from prn 3 within trees.
Graph s_graph();

// Induced-subgraph embedding of the spider into g, if one exists.
std::optional<std::map<Token, Token>> contains_s(const Graph& g);

struct TreePrnResult {
    int prn = 0;   // 1, 2, or 3
    Word witness;  // prn-uniform word representing the tree permutationally
};

// Permutation-representation number of a tree, with a machine-checked
// witness. The prn-2 case searches exhaustively for a two-permutation
// witness and is subject to that search's vertex bound.
TreePrnResult tree_prn(const Graph& t, const Token& root);
TreePrnResult tree_prn(const Graph& t); // root = smallest vertex token

} // namespace wordrep

#endif
