#pragma once

#include <functional>
#include <string>
#include <vector>

#include "war/engine.hpp"
#include "war/numerics.hpp"
#include "war/winloss.hpp"

namespace war {

enum class Policy { WL, Random };

// All m-card states on n cards in lexicographic order (n! of them). Shards
// split the space by the leading ceil(n/2) cards of the permutation, so
// shard results are independent and merge by addition.
class StateSpace {
public:
    StateSpace(int n, int m);

    int n() const { return n_; }
    int m() const { return m_; }
    BigInt count() const { return factorial(n_); }

    void for_each(const std::function<void(const GameState&)>& fn) const;
    void for_each_shard(int shard, int nshards,
                        const std::function<void(const GameState&)>& fn) const;

private:
    int n_, m_;
};

std::vector<GameState> all_states(int n, int m);

struct BranchResult {
    Outcome outcome = Outcome::Truncated;
    int rounds = 0;
    int passthroughs = 0;  // completed passthroughs of Alice's hand
    bool single_use = false;
    std::string letters;
    Rational weight = Rational(1);
};

// Per-branch classification of one state under a policy: a single weight-1
// branch for WL, the whole putback-choice tree for Random (weights sum to 1).
struct StateClassification {
    GameState state;
    std::vector<BranchResult> branches;
};

StateClassification classify_state(const GameState& s, Policy policy,
                                   long max_rounds, bool branch_bob = false);

// Exact probability, over the n! m-card states, that the game ends with
// Alice losing in exactly R rounds; requires n >= m + R so any such game
// stays within Bob's first passthrough. Returns 0 on a parity mismatch.
Rational probability_r_round(int n, int m, int R, Policy policy, int jobs = 1);

// Exact probability that the game is single-use and ends within k
// passthroughs of Alice's hand; requires n >= 2^k * m.
Rational probability_k_passthrough(int n, int m, int k, Policy policy,
                                   int jobs = 1);

// Same census without the n >= 2^k * m requirement. Where the bound fails
// the value reported is the probability of ending within k passthroughs
// during Bob's first passthrough (with WL order for Bob's putbacks), which
// no closed form is claimed for.
Rational observe_k_passthrough(int n, int m, int k, Policy policy, int jobs = 1);

// Closed forms the censuses are compared against.
Rational r_round_formula(int m, int R);         // C((R+m)/2-1,(R-m)/2) / 2^R
Rational k_passthrough_formula(int m, int k);   // p_k(k)^m

// One round of random putback (both players' putbacks branching) from the
// uniform distribution over m-card states: win and loss halves must each
// carry mass 1/2 and land uniformly on the (m+1)- and (m-1)-card states.
struct UniformLemmaReport {
    int n = 0, m = 0;
    Rational win_mass, loss_mass;
    bool winners_uniform = false;
    bool losers_uniform = false;
    bool pass = false;
};

UniformLemmaReport uniform_lemma_check(int n, int m);

// All m-card states whose WL-putback game realizes the sequence exactly,
// in lexicographic order.
std::vector<GameState> states_matching_wl(const WinLossSequence& seq, int n);

// All unicard states every random-putback branch of which realizes the
// sequence, in lexicographic order.
std::vector<GameState> states_necessarily_random(const WinLossSequence& seq, int n);

}  // namespace war
