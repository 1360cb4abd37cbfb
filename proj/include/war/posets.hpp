#pragma once

#include <string>
#include <vector>

#include "war/numerics.hpp"
#include "war/winloss.hpp"

namespace war {

// Finite poset over abstract card slots, given by its cover relation
// (transitively reduced by construction here).
struct Poset {
    std::vector<std::string> names;
    std::vector<std::pair<int, int>> covers;  // (upper, lower)

    int size() const { return static_cast<int>(names.size()); }
};

// Counts assignments of 1..n to the elements that respect every cover, by
// walking all n! permutations. The independent oracle for the closed forms
// below; refuses posets larger than 10 elements.
BigInt linear_extensions_bruteforce(const Poset& poset);

// Rooted tree as a poset (root greatest); hook(v) = size of v's subtree.
struct HookedTreePoset {
    std::vector<std::string> names;
    std::vector<int> parent;  // -1 for the root

    int size() const { return static_cast<int>(parent.size()); }
    std::vector<long> hooks() const;
    Poset as_poset() const;
};

// n! / prod hook(v).
BigInt ruskey_count(const HookedTreePoset& tree);

// Plays a unicard sequence symbolically under WL-putback over slots
// a, b, c, ... (a is Alice's card, then Bob's cards in play order) and
// returns the tree component of the winner-to-loser poset: a plus every
// card Alice wins, parent = the card that beat it.
HookedTreePoset wl_tree_component(const WinLossSequence& seq);

// Number of unicard states on n = 2k cards whose WL-putback game follows the
// sequence: (2k)! / (2^k * prod hooks).
BigInt count_states_wl(const WinLossSequence& seq);

// m-card generalization: per-block counts times the multinomial coefficient
// distributing the deck's values into block-sized classes.
BigInt count_states_wl_mcard(const WinLossSequence& seq);

// Two-layer poset for random putback: the cards of L rounds sit directly
// above a; the W rounds of the win-loss binary tree, leaves pruned, hang
// below a as a tree.
struct RandomPoset {
    Poset poset;
    std::vector<int> top;    // element indices of the layer above a
    HookedTreePoset bottom;  // a plus the pruned W structure
};

RandomPoset build_random_poset(const WinLossSequence& seq);

// Number of unicard states on n = 2k cards that follow the sequence under
// every random-putback branch: (k!)^2 / prod hooks of the bottom tree.
BigInt count_states_random_necessary(const WinLossSequence& seq);

std::string to_dot(const HookedTreePoset& tree);
std::string to_dot(const RandomPoset& poset);

}  // namespace war
