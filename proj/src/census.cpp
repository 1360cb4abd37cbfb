#include "war/census.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <thread>

namespace war {

StateSpace::StateSpace(int n, int m) : n_(n), m_(m) {
    if (n < 2 || m < 1 || m >= n)
        throw std::invalid_argument("StateSpace: need 0 < m < n and n >= 2");
}

namespace {

// Lexicographic walk over permutations of 1..n that share a fixed prefix
// assignment policy: prefixes of length p are enumerated in lexicographic
// order and handed to shards round-robin; each shard then completes its
// prefixes with all suffix permutations in order.
void walk_prefixes(int n, int p, int shard, int nshards,
                   const std::function<void(const std::vector<Card>&)>& emit) {
    std::vector<Card> prefix;
    std::vector<char> used(static_cast<size_t>(n) + 1, 0);
    long counter = 0;
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(prefix.size()) == p) {
            if (counter++ % nshards == shard) {
                std::vector<Card> perm = prefix;
                std::vector<Card> suffix;
                for (Card c = 1; c <= n; ++c)
                    if (!used[static_cast<size_t>(c)]) suffix.push_back(c);
                const size_t base = perm.size();
                perm.resize(static_cast<size_t>(n));
                do {
                    std::copy(suffix.begin(), suffix.end(), perm.begin() + base);
                    emit(perm);
                } while (std::next_permutation(suffix.begin(), suffix.end()));
            }
            return;
        }
        for (Card c = 1; c <= n; ++c) {
            if (used[static_cast<size_t>(c)]) continue;
            used[static_cast<size_t>(c)] = 1;
            prefix.push_back(c);
            self(self);
            prefix.pop_back();
            used[static_cast<size_t>(c)] = 0;
        }
    };
    rec(rec);
}

}  // namespace

void StateSpace::for_each_shard(
    int shard, int nshards, const std::function<void(const GameState&)>& fn) const {
    if (nshards < 1 || shard < 0 || shard >= nshards)
        throw std::invalid_argument("for_each_shard: need 0 <= shard < nshards");
    const int p = (n_ + 1) / 2;
    walk_prefixes(n_, p, shard, nshards, [&](const std::vector<Card>& perm) {
        GameState s;
        s.alice.assign(perm.begin(), perm.begin() + m_);
        s.bob.assign(perm.begin() + m_, perm.end());
        fn(s);
    });
}

void StateSpace::for_each(const std::function<void(const GameState&)>& fn) const {
    for_each_shard(0, 1, fn);
}

std::vector<GameState> all_states(int n, int m) {
    StateSpace space(n, m);
    std::vector<GameState> out;
    space.for_each([&](const GameState& s) { out.push_back(s); });
    return out;
}

namespace {

BranchResult to_branch_result(const GameTrace& t) {
    BranchResult b;
    b.outcome = t.outcome;
    b.rounds = static_cast<int>(t.rounds.size());
    b.passthroughs = static_cast<int>(t.alice_passthrough_boundaries.size());
    b.single_use = t.single_use;
    b.letters = t.letters();
    b.weight = t.weight;
    return b;
}

}  // namespace

StateClassification classify_state(const GameState& s, Policy policy,
                                   long max_rounds, bool branch_bob) {
    StateClassification out;
    out.state = s;
    if (policy == Policy::WL) {
        out.branches.push_back(to_branch_result(play_wl(s, max_rounds)));
    } else {
        BranchOptions opts;
        opts.branch_bob = branch_bob;
        for (const GameTrace& t : enumerate_random_branches(s, max_rounds, opts))
            out.branches.push_back(to_branch_result(t));
    }
    return out;
}

namespace {

// Weighted census of an event over all m-card states; exact and
// deterministic for any jobs count since shard results merge by addition.
Rational census_event(int n, int m, Policy policy, int jobs,
                      const std::function<bool(const BranchResult&)>& event) {
    const StateSpace space(n, m);
    const long horizon = n - m;  // Bob's first passthrough bounds every event
    jobs = std::max(jobs, 1);
    std::vector<Rational> partial(static_cast<size_t>(jobs), Rational(0));
    auto run_shard = [&](int shard) {
        Rational acc(0);
        space.for_each_shard(shard, jobs, [&](const GameState& s) {
            const auto cls = classify_state(s, policy, horizon);
            for (const BranchResult& b : cls.branches)
                if (event(b)) acc += b.weight;
        });
        partial[static_cast<size_t>(shard)] = std::move(acc);
    };
    if (jobs == 1) {
        run_shard(0);
    } else {
        std::vector<std::thread> workers;
        for (int j = 0; j < jobs; ++j) workers.emplace_back(run_shard, j);
        for (auto& w : workers) w.join();
    }
    Rational total(0);
    for (const Rational& p : partial) total += p;
    return total / Rational(factorial(n));
}

}  // namespace

Rational probability_r_round(int n, int m, int R, Policy policy, int jobs) {
    if (R < 1) throw std::invalid_argument("probability_r_round: R >= 1");
    if (n < m + R)
        throw std::invalid_argument("probability_r_round: need n >= m + R");
    if (R < m || (R - m) % 2 != 0) return Rational(0);
    return census_event(n, m, policy, jobs, [R](const BranchResult& b) {
        return b.outcome == Outcome::AliceLost && b.rounds == R;
    });
}

Rational observe_k_passthrough(int n, int m, int k, Policy policy, int jobs) {
    if (k < 1) throw std::invalid_argument("observe_k_passthrough: k >= 1");
    return census_event(n, m, policy, jobs, [k](const BranchResult& b) {
        return b.single_use && b.passthroughs <= k;
    });
}

Rational probability_k_passthrough(int n, int m, int k, Policy policy, int jobs) {
    if (k < 1) throw std::invalid_argument("probability_k_passthrough: k >= 1");
    if (k >= 31 || n < (1L << k) * m)
        throw std::invalid_argument(
            "probability_k_passthrough: insufficient n (need n >= 2^k * m)");
    return observe_k_passthrough(n, m, k, policy, jobs);
}

Rational r_round_formula(int m, int R) {
    if (m < 1 || R < 1) throw std::invalid_argument("r_round_formula: m, R >= 1");
    return Rational(count_sequences_rounds(m, R)) /
           Rational(pow_int(BigInt(2), static_cast<unsigned long>(R)));
}

Rational k_passthrough_formula(int m, int k) {
    return pow_rat(p_k(k), static_cast<unsigned long>(m));
}

UniformLemmaReport uniform_lemma_check(int n, int m) {
    const StateSpace space(n, m);
    UniformLemmaReport report;
    report.n = n;
    report.m = m;
    const Rational state_mass = Rational(1) / Rational(factorial(n));
    std::map<std::pair<std::vector<Card>, std::vector<Card>>, Rational> winners,
        losers;
    Rational win_mass(0), loss_mass(0);
    space.for_each([&](const GameState& s) {
        const bool alice_wins = s.alice.front() > s.bob.front();
        for (Putback order : {Putback::WinnerFirst, Putback::LoserFirst}) {
            const auto [next, rec] = step(s, order);
            const Rational mass = state_mass / 2;
            auto key = std::make_pair(next.alice, next.bob);
            if (alice_wins) {
                winners[key] += mass;
                win_mass += mass;
            } else {
                losers[key] += mass;
                loss_mass += mass;
            }
        }
    });
    report.win_mass = win_mass;
    report.loss_mass = loss_mass;
    const Rational expected = state_mass / 2;
    auto uniform = [&](const auto& dist) {
        if (BigInt(static_cast<long>(dist.size())) != factorial(n)) return false;
        for (const auto& [state, mass] : dist)
            if (mass != expected) return false;
        return true;
    };
    report.winners_uniform = uniform(winners);
    report.losers_uniform = uniform(losers);
    report.pass = report.win_mass == Rational(1, 2) &&
                  report.loss_mass == Rational(1, 2) && report.winners_uniform &&
                  report.losers_uniform;
    return report;
}

std::vector<GameState> states_matching_wl(const WinLossSequence& seq, int n) {
    const StateSpace space(n, seq.m);
    std::vector<GameState> out;
    const long guard = static_cast<long>(n) * n;
    space.for_each([&](const GameState& s) {
        const GameTrace t = play_wl(s, guard);
        if (t.outcome == Outcome::AliceLost && t.letters() == seq.letters)
            out.push_back(s);
    });
    return out;
}

namespace {

// Every random-putback branch must realize the sequence; outcomes are fixed
// by the cards, so only Alice's putback orders branch and a deviation at any
// depth disqualifies the state.
bool necessarily_follows(const GameState& s, const std::string& letters,
                         size_t pos) {
    if (pos == letters.size()) return s.alice.empty();
    if (s.alice.empty() || s.bob.empty()) return false;
    const bool alice_wins = s.alice.front() > s.bob.front();
    if (alice_wins != (letters[pos] == 'W')) return false;
    if (!alice_wins) {
        auto [next, rec] = step(s, Putback::WinnerFirst);
        return necessarily_follows(next, letters, pos + 1);
    }
    for (Putback order : {Putback::WinnerFirst, Putback::LoserFirst}) {
        auto [next, rec] = step(s, order);
        if (!necessarily_follows(next, letters, pos + 1)) return false;
    }
    return true;
}

}  // namespace

std::vector<GameState> states_necessarily_random(const WinLossSequence& seq,
                                                 int n) {
    if (seq.m != 1)
        throw std::invalid_argument(
            "states_necessarily_random: unicard sequence required");
    const StateSpace space(n, 1);
    std::vector<GameState> out;
    space.for_each([&](const GameState& s) {
        if (necessarily_follows(s, seq.letters, 0)) out.push_back(s);
    });
    return out;
}

}  // namespace war
