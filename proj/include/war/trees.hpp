#pragma once

#include <string>
#include <utility>
#include <vector>

#include "war/engine.hpp"
#include "war/graphs.hpp"
#include "war/winloss.hpp"

namespace war {

// Full binary tree of rounds: every W node has two children, every L node is
// a leaf. Level i read left-to-right is passthrough i of the corresponding
// unicard sequence.
struct FullBinaryTree {
    struct Node {
        char letter = 'L';
        int parent = -1;
        int left = -1;
        int right = -1;
    };
    std::vector<Node> nodes;  // node 0 is the root

    int size() const { return static_cast<int>(nodes.size()); }
    bool is_leaf(int v) const { return nodes[static_cast<size_t>(v)].left < 0; }
    bool is_right_child(int v) const;
    int height() const;  // number of levels; a lone leaf has height 1
};

FullBinaryTree make_leaf();
FullBinaryTree make_branch(const FullBinaryTree& left, const FullBinaryTree& right);

// Level-by-level construction from a unicard sequence; nodes end up stored
// in level order. Inverse of tree_to_seq.
FullBinaryTree seq_to_tree(const WinLossSequence& seq);

// Level-order readout: W on non-leaves, L on leaves.
WinLossSequence tree_to_seq(const FullBinaryTree& tree);

// One tree per block of an m-card game, each node labeled with the cards of
// its round: (Alice's card, Bob's card). root_card is the initial card of
// Alice that induced the block.
struct LabeledWinLossTree {
    FullBinaryTree shape;
    std::vector<std::pair<Card, Card>> labels;  // parallel to shape.nodes
    Card root_card = 0;
};

// Requires a single-use trace (otherwise Bob's played cards repeat and the
// labeling breaks down); throws std::domain_error.
std::vector<LabeledWinLossTree> label_tree(const GameTrace& t);

// Parent of the nearest ancestor of v (v included) that is a right child;
// -1 when every node on the path up is a left child.
int right_parent(const FullBinaryTree& tree, int v);

// Rebuilds the game graph from labeled trees alone: a synthetic node holding
// the block's root card is placed above-left of each root (so the root acts
// as its right child), nodes are relabeled with Bob's card, and each node is
// joined to its right parent. Validates that every node's Alice card equals
// its right parent's Bob card (or the block root card); throws
// std::domain_error on inconsistent labels.
GameGraph tree_to_game_graph(const std::vector<LabeledWinLossTree>& trees,
                             const std::vector<Card>& roots, int n);

std::string to_dot(const FullBinaryTree& tree);
std::string to_dot(const std::vector<LabeledWinLossTree>& forest);

}  // namespace war
