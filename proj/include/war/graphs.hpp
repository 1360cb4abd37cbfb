#pragma once

#include <string>
#include <utility>
#include <vector>

#include "war/engine.hpp"

namespace war {

// One vertex per card, one undirected edge per round between the two cards
// played. Kept as an edge list: repeated pairings give parallel edges.
struct GameGraph {
    int n = 0;
    std::vector<std::pair<Card, Card>> edges;

    // Edge multiset with (low, high) endpoints, sorted.
    std::vector<std::pair<Card, Card>> normalized() const;
};

bool operator==(const GameGraph& a, const GameGraph& b);

GameGraph build_game_graph(const GameTrace& t);

struct ForestDecomposition {
    // Nontrivial components, vertices ascending, components ordered by
    // minimum card.
    std::vector<std::vector<Card>> trees;
    std::vector<Card> isolated;
};

// Throws std::domain_error if the graph has a cycle (parallel edges count);
// a cycle signals a non-single-use input.
ForestDecomposition forest_decomposition(const GameGraph& g);

enum class Orientation { WinnerToLoser, AliceToBob };

struct GameDigraph {
    int n = 0;
    Orientation mode = Orientation::WinnerToLoser;
    int start_round = 1;
    std::vector<std::pair<Card, Card>> edges;  // (from, to), in round order
    // Parallel to edges; true when Alice won the round. In WinnerToLoser
    // mode these are the tree edges (drawn solid), the rest point from
    // Bob's winning card into the tree (drawn dashed).
    std::vector<bool> alice_won;
};

// Edges restricted to rounds >= start_round, oriented winner->loser or
// Alice's card -> Bob's card.
GameDigraph orient(const GameTrace& t, Orientation mode, int start_round = 1);

struct Subblock {
    Card root = 0;
    std::vector<int> round_indices;  // 1-based, ascending
};

// Partition of rounds >= start_round by the card of Alice's hand (as of
// start_round) whose component the round belongs to; subblocks are listed
// in hand order.
std::vector<Subblock> subblocks(const GameTrace& t, int start_round = 1);

std::string to_dot(const GameGraph& g);
std::string to_dot(const GameDigraph& g);

}  // namespace war
