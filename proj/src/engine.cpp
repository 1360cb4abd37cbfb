#include "war/engine.hpp"

#include <deque>
#include <stdexcept>

namespace war {

std::string GameTrace::letters() const {
    std::string out;
    out.reserve(rounds.size());
    for (const RoundRecord& r : rounds)
        out += (r.winner == Player::Alice) ? 'W' : 'L';
    return out;
}

long default_max_rounds(int n) {
    long r = n;
    for (int i = 0; i < n && r < (1L << 20); ++i) r *= 2;
    return std::min(r, 1L << 20);
}

namespace {

struct Hands {
    std::deque<Card> alice, bob;

    explicit Hands(const GameState& s)
        : alice(s.alice.begin(), s.alice.end()), bob(s.bob.begin(), s.bob.end()) {}

    GameState snapshot() const {
        return GameState{{alice.begin(), alice.end()}, {bob.begin(), bob.end()}};
    }

    RoundRecord play(int index, Putback order) {
        if (alice.empty() || bob.empty())
            throw std::domain_error("step: round from an empty hand");
        const Card a = alice.front();
        alice.pop_front();
        const Card b = bob.front();
        bob.pop_front();
        const bool alice_wins = a > b;
        const Card win = alice_wins ? a : b;
        const Card lose = alice_wins ? b : a;
        const Card first = (order == Putback::WinnerFirst) ? win : lose;
        const Card second = (order == Putback::WinnerFirst) ? lose : win;
        auto& dst = alice_wins ? alice : bob;
        dst.push_back(first);
        dst.push_back(second);
        return RoundRecord{index, a, b, alice_wins ? Player::Alice : Player::Bob,
                           first, second};
    }
};

// Countdown of Alice's plays left in her current passthrough; when it hits
// zero the boundary is recorded and the counter restarts at twice the number
// of rounds she won during the passthrough just finished.
struct PassthroughMeter {
    int countdown;
    int wins_in_passthrough = 0;

    explicit PassthroughMeter(int m) : countdown(m) {}

    // Returns true if round `index` closed a passthrough.
    bool advance(bool alice_won) {
        --countdown;
        if (alice_won) ++wins_in_passthrough;
        if (countdown == 0) {
            countdown = 2 * wins_in_passthrough;
            wins_in_passthrough = 0;
            return true;
        }
        return false;
    }
};

void finalize(GameTrace& t, Outcome outcome) {
    t.outcome = outcome;
    const int n = t.deck_size();
    const int m = t.initial_hand();
    t.single_use = outcome == Outcome::AliceLost &&
                   static_cast<int>(t.rounds.size()) <= n - m;
}

}  // namespace

std::pair<GameState, RoundRecord> step(const GameState& s, Putback order,
                                       int index) {
    validate_state(s);
    Hands h(s);
    RoundRecord rec = h.play(index, order);
    return {h.snapshot(), rec};
}

GameTrace play_with(const GameState& s, long max_rounds,
                    const std::function<Putback(int, Player)>& choose) {
    validate_state(s);
    if (max_rounds < 1) throw std::invalid_argument("play: max_rounds >= 1");
    GameTrace t;
    t.initial = s;
    Hands h(s);
    PassthroughMeter meter(t.initial_hand());
    for (long i = 1; !h.alice.empty() && !h.bob.empty(); ++i) {
        if (i > max_rounds) {
            finalize(t, Outcome::Truncated);
            return t;
        }
        const Player winner =
            h.alice.front() > h.bob.front() ? Player::Alice : Player::Bob;
        RoundRecord rec =
            h.play(static_cast<int>(i), choose(static_cast<int>(i), winner));
        t.rounds.push_back(rec);
        if (meter.advance(rec.winner == Player::Alice))
            t.alice_passthrough_boundaries.push_back(static_cast<int>(i));
    }
    finalize(t, h.alice.empty() ? Outcome::AliceLost : Outcome::BobLost);
    return t;
}

GameTrace play_wl(const GameState& s, long max_rounds) {
    return play_with(s, max_rounds,
                     [](int, Player) { return Putback::WinnerFirst; });
}

namespace {

struct BranchWalker {
    long max_rounds;
    BranchOptions opts;
    std::vector<GameTrace>* out;
    const GameState* initial;

    void walk(const Hands& h, PassthroughMeter meter,
              std::vector<RoundRecord> rounds, std::vector<int> boundaries,
              Rational weight) {
        if (h.alice.empty() || h.bob.empty() ||
            static_cast<long>(rounds.size()) == max_rounds) {
            GameTrace t;
            t.initial = *initial;
            t.rounds = std::move(rounds);
            t.alice_passthrough_boundaries = std::move(boundaries);
            t.weight = std::move(weight);
            finalize(t, h.alice.empty()   ? Outcome::AliceLost
                        : h.bob.empty()   ? Outcome::BobLost
                                          : Outcome::Truncated);
            if (out->size() >= opts.max_branches)
                throw std::length_error(
                    "enumerate_random_branches: branch explosion; lower max_rounds");
            out->push_back(std::move(t));
            return;
        }
        const bool alice_wins = h.alice.front() > h.bob.front();
        const bool branch = alice_wins || opts.branch_bob;
        const int index = static_cast<int>(rounds.size()) + 1;
        for (Putback order : {Putback::WinnerFirst, Putback::LoserFirst}) {
            Hands next = h;
            PassthroughMeter next_meter = meter;
            RoundRecord rec = next.play(index, order);
            auto next_rounds = rounds;
            next_rounds.push_back(rec);
            auto next_boundaries = boundaries;
            if (next_meter.advance(rec.winner == Player::Alice))
                next_boundaries.push_back(index);
            walk(next, next_meter, std::move(next_rounds),
                 std::move(next_boundaries),
                 branch ? weight / 2 : weight);
            if (!branch) return;  // only WinnerFirst explored
        }
    }
};

}  // namespace

std::vector<GameTrace> enumerate_random_branches(const GameState& s,
                                                 long max_rounds,
                                                 const BranchOptions& opts) {
    validate_state(s);
    if (max_rounds < 0)
        throw std::invalid_argument("enumerate_random_branches: max_rounds >= 0");
    std::vector<GameTrace> out;
    BranchWalker walker{max_rounds, opts, &out, &s};
    walker.walk(Hands(s), PassthroughMeter(static_cast<int>(s.alice.size())), {},
                {}, Rational(1));
    return out;
}

Classification classify(const GameTrace& t) {
    if (t.outcome != Outcome::AliceLost)
        throw std::domain_error("classify: trace does not end with Alice losing");
    return Classification{static_cast<int>(t.rounds.size()),
                          static_cast<int>(t.alice_passthrough_boundaries.size()),
                          t.single_use};
}

std::vector<GameState> replay_states(const GameTrace& t) {
    std::vector<GameState> states;
    states.reserve(t.rounds.size() + 1);
    Hands h(t.initial);
    states.push_back(h.snapshot());
    for (const RoundRecord& rec : t.rounds) {
        Putback order = (rec.putback_first == std::max(rec.alice_card, rec.bob_card))
                            ? Putback::WinnerFirst
                            : Putback::LoserFirst;
        RoundRecord replay = h.play(rec.index, order);
        if (!(replay == rec))
            throw std::domain_error("replay_states: trace is inconsistent");
        states.push_back(h.snapshot());
    }
    return states;
}

}  // namespace war
