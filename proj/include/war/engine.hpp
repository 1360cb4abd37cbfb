#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "war/numerics.hpp"
#include "war/state.hpp"

namespace war {

enum class Player { Alice, Bob };
enum class Outcome { AliceLost, BobLost, Truncated };

// Putback order for the round's winner: the pair of played cards is appended
// to the bottom of the winner's hand, winning card first (WL) or second.
enum class Putback { WinnerFirst, LoserFirst };

struct RoundRecord {
    int index = 0;  // 1-based
    Card alice_card = 0;
    Card bob_card = 0;
    Player winner = Player::Alice;
    Card putback_first = 0;
    Card putback_second = 0;

    bool operator==(const RoundRecord&) const = default;
};

// Full record of one played game. alice_passthrough_boundaries lists the
// round indices after which Alice's hand has been used up: the first after m
// rounds, each later one after twice the number of rounds she won in the
// passthrough just completed. Her hand can only empty at such a boundary.
//
// weight is 1/2^c where c is the number of random putback choices taken on
// this branch (1 for a deterministic game). single_use means Alice lost
// while Bob was still playing his initial cards, i.e. within n - m rounds.
struct GameTrace {
    GameState initial;
    std::vector<RoundRecord> rounds;
    std::vector<int> alice_passthrough_boundaries;
    Outcome outcome = Outcome::Truncated;
    bool single_use = false;
    Rational weight = Rational(1);

    int deck_size() const { return initial.deck_size(); }
    int initial_hand() const { return static_cast<int>(initial.alice.size()); }

    // "WLWLL"-style outcome string, one letter per round.
    std::string letters() const;
};

// n * 2^n, capped; generous bound for deterministic play.
long default_max_rounds(int n);

// Plays one round: both top cards are revealed, the higher wins, both go to
// the winner's bottom in the given order. Throws std::domain_error on an
// empty hand.
std::pair<GameState, RoundRecord> step(const GameState& s, Putback order,
                                       int index = 1);

// Deterministic WL-putback game, at most max_rounds rounds (outcome
// Truncated if neither hand empties by then).
GameTrace play_wl(const GameState& s, long max_rounds);

// Single game with the putback order chosen per round (round index, winner);
// play_wl is the constant-WinnerFirst case.
GameTrace play_with(const GameState& s, long max_rounds,
                    const std::function<Putback(int, Player)>& choose);

struct BranchOptions {
    // Rounds Bob wins append in WL order unless branch_bob is set: his won
    // cards sit below his initial hand, so within a single-use game their
    // order never influences play.
    bool branch_bob = false;
    // Safety cap on the number of branches produced before throwing.
    size_t max_branches = size_t(1) << 22;
};

// Every branch of the binary putback-choice tree, each weighted 1/2 per
// choice taken; weights over the result sum to exactly 1.
std::vector<GameTrace> enumerate_random_branches(const GameState& s,
                                                 long max_rounds,
                                                 const BranchOptions& opts = {});

struct Classification {
    int rounds = 0;
    int passthroughs = 0;
    bool single_use = false;
};

// Requires an AliceLost trace; throws std::domain_error otherwise.
Classification classify(const GameTrace& t);

// States before round 1, 2, ..., plus the final state; replays the recorded
// putback orders exactly.
std::vector<GameState> replay_states(const GameTrace& t);

}  // namespace war
