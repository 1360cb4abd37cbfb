#include "war/trees.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace war {

bool FullBinaryTree::is_right_child(int v) const {
    const int p = nodes[static_cast<size_t>(v)].parent;
    return p >= 0 && nodes[static_cast<size_t>(p)].right == v;
}

int FullBinaryTree::height() const {
    int best = 0;
    for (size_t v = 0; v < nodes.size(); ++v) {
        int d = 1, u = static_cast<int>(v);
        while (nodes[static_cast<size_t>(u)].parent >= 0) {
            u = nodes[static_cast<size_t>(u)].parent;
            ++d;
        }
        best = std::max(best, d);
    }
    return best;
}

FullBinaryTree make_leaf() {
    FullBinaryTree t;
    t.nodes.push_back({});
    return t;
}

FullBinaryTree make_branch(const FullBinaryTree& left, const FullBinaryTree& right) {
    FullBinaryTree t;
    t.nodes.push_back({'W', -1, 1, 1 + left.size()});
    auto append = [&](const FullBinaryTree& sub, int offset) {
        for (const auto& n : sub.nodes) {
            FullBinaryTree::Node copy = n;
            copy.parent = n.parent < 0 ? 0 : n.parent + offset;
            if (copy.left >= 0) copy.left += offset;
            if (copy.right >= 0) copy.right += offset;
            t.nodes.push_back(copy);
        }
    };
    append(left, 1);
    append(right, 1 + left.size());
    return t;
}

FullBinaryTree seq_to_tree(const WinLossSequence& seq) {
    if (seq.m != 1)
        throw std::invalid_argument("seq_to_tree: unicard sequence required");
    FullBinaryTree t;
    std::deque<int> expecting;  // W nodes still owed children, in level order
    for (char c : seq.letters) {
        const int idx = t.size();
        FullBinaryTree::Node node;
        node.letter = c;
        if (idx > 0) {
            const int parent = expecting.front();
            node.parent = parent;
            auto& p = t.nodes[static_cast<size_t>(parent)];
            if (p.left < 0) {
                p.left = idx;
            } else {
                p.right = idx;
                expecting.pop_front();
            }
        }
        t.nodes.push_back(node);
        if (c == 'W') expecting.push_back(idx);
    }
    if (!expecting.empty())
        throw std::logic_error("seq_to_tree: W node left without children");
    return t;
}

WinLossSequence tree_to_seq(const FullBinaryTree& tree) {
    if (tree.nodes.empty()) throw std::invalid_argument("tree_to_seq: empty tree");
    std::string letters;
    std::deque<int> queue{0};
    while (!queue.empty()) {
        const int v = queue.front();
        queue.pop_front();
        letters += tree.is_leaf(v) ? 'L' : 'W';
        if (!tree.is_leaf(v)) {
            queue.push_back(tree.nodes[static_cast<size_t>(v)].left);
            queue.push_back(tree.nodes[static_cast<size_t>(v)].right);
        }
    }
    return make_sequence(letters, 1);
}

std::vector<LabeledWinLossTree> label_tree(const GameTrace& t) {
    if (!t.single_use)
        throw std::domain_error("label_tree: single-use trace required");
    const int m = t.initial_hand();
    // Tag each card position in Alice's hand with the block it belongs to;
    // a won pair joins the block of the card that won it. Within a
    // passthrough each block's cards play consecutively, so a block's rounds
    // in game order are exactly its tree's nodes in level order.
    std::deque<int> owner;
    for (int b = 0; b < m; ++b) owner.push_back(b);
    std::vector<std::string> letters(static_cast<size_t>(m));
    std::vector<std::vector<std::pair<Card, Card>>> labels(static_cast<size_t>(m));
    for (const RoundRecord& r : t.rounds) {
        const int b = owner.front();
        owner.pop_front();
        const bool aw = r.winner == Player::Alice;
        letters[static_cast<size_t>(b)] += aw ? 'W' : 'L';
        labels[static_cast<size_t>(b)].emplace_back(r.alice_card, r.bob_card);
        if (aw) {
            owner.push_back(b);
            owner.push_back(b);
        }
    }
    std::vector<LabeledWinLossTree> out;
    for (int b = 0; b < m; ++b) {
        LabeledWinLossTree lt;
        lt.shape = seq_to_tree(make_sequence(letters[static_cast<size_t>(b)], 1));
        lt.labels = std::move(labels[static_cast<size_t>(b)]);
        lt.root_card = t.initial.alice[static_cast<size_t>(b)];
        out.push_back(std::move(lt));
    }
    return out;
}

int right_parent(const FullBinaryTree& tree, int v) {
    if (v < 0 || v >= tree.size())
        throw std::invalid_argument("right_parent: node outside tree");
    while (tree.nodes[static_cast<size_t>(v)].parent >= 0) {
        if (tree.is_right_child(v)) return tree.nodes[static_cast<size_t>(v)].parent;
        v = tree.nodes[static_cast<size_t>(v)].parent;
    }
    return -1;
}

GameGraph tree_to_game_graph(const std::vector<LabeledWinLossTree>& trees,
                             const std::vector<Card>& roots, int n) {
    if (trees.size() != roots.size())
        throw std::invalid_argument("tree_to_game_graph: one root card per tree");
    GameGraph g;
    g.n = n;
    std::vector<char> bob_seen(static_cast<size_t>(n) + 1, 0);
    for (size_t b = 0; b < trees.size(); ++b) {
        const auto& tree = trees[b];
        if (tree.labels.size() != tree.shape.nodes.size())
            throw std::invalid_argument("tree_to_game_graph: label/shape mismatch");
        if (tree.root_card != roots[b] || tree.labels.empty() ||
            tree.labels[0].first != roots[b])
            throw std::domain_error("tree_to_game_graph: inconsistent root labels");
        for (int v = 0; v < tree.shape.size(); ++v) {
            const auto [alice, bob] = tree.labels[static_cast<size_t>(v)];
            if (bob < 1 || bob > n || bob_seen[static_cast<size_t>(bob)])
                throw std::domain_error(
                    "tree_to_game_graph: Bob's cards must be distinct (single-use)");
            bob_seen[static_cast<size_t>(bob)] = 1;
            // the synthetic block node sits above-left of the root, so a node
            // with no right parent among real nodes attaches to the root card
            const int rp = right_parent(tree.shape, v);
            const Card up = rp < 0 ? roots[b] : tree.labels[static_cast<size_t>(rp)].second;
            if (alice != up)
                throw std::domain_error("tree_to_game_graph: inconsistent labels");
            g.edges.emplace_back(bob, up);
        }
    }
    return g;
}

std::string to_dot(const FullBinaryTree& tree) {
    std::string out = "graph winloss_tree {\n";
    for (int v = 0; v < tree.size(); ++v) {
        out += "  n" + std::to_string(v) + " [label=\"" +
               tree.nodes[static_cast<size_t>(v)].letter + "\"];\n";
    }
    for (int v = 0; v < tree.size(); ++v) {
        const int p = tree.nodes[static_cast<size_t>(v)].parent;
        if (p >= 0)
            out += "  n" + std::to_string(p) + " -- n" + std::to_string(v) + ";\n";
    }
    out += "}\n";
    return out;
}

std::string to_dot(const std::vector<LabeledWinLossTree>& forest) {
    std::string out = "graph winloss_forest {\n";
    for (size_t b = 0; b < forest.size(); ++b) {
        const auto& tree = forest[b];
        const std::string prefix = "b" + std::to_string(b) + "_n";
        for (int v = 0; v < tree.shape.size(); ++v) {
            const auto [alice, bob] = tree.labels[static_cast<size_t>(v)];
            out += "  " + prefix + std::to_string(v) + " [label=\"" +
                   tree.shape.nodes[static_cast<size_t>(v)].letter + "(" +
                   std::to_string(alice) + "/" + std::to_string(bob) + ")\"];\n";
        }
        for (int v = 0; v < tree.shape.size(); ++v) {
            const int p = tree.shape.nodes[static_cast<size_t>(v)].parent;
            if (p >= 0)
                out += "  " + prefix + std::to_string(p) + " -- " + prefix +
                       std::to_string(v) + ";\n";
        }
    }
    out += "}\n";
    return out;
}

}  // namespace war
