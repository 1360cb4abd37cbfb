#include <doctest.h>

#include <set>

#include "war/census.hpp"

using namespace war;

TEST_CASE("state space enumeration") {
    const auto states = all_states(3, 1);
    REQUIRE(states.size() == 6);
    std::vector<std::string> texts;
    for (const auto& s : states) texts.push_back(format_state(s));
    CHECK(texts == std::vector<std::string>{"1|23", "1|32", "2|13", "2|31", "3|12",
                                            "3|21"});
    CHECK(all_states(4, 1).size() == 24);
    CHECK(all_states(5, 2).size() == 120);
    CHECK_THROWS_AS(StateSpace(3, 3), std::invalid_argument);
}

TEST_CASE("shards partition the state space") {
    StateSpace space(5, 2);
    std::set<std::string> whole;
    space.for_each([&](const GameState& s) { whole.insert(format_state(s)); });
    CHECK(whole.size() == 120);
    std::set<std::string> pieces;
    size_t total = 0;
    for (int shard = 0; shard < 3; ++shard) {
        space.for_each_shard(shard, 3, [&](const GameState& s) {
            pieces.insert(format_state(s));
            ++total;
        });
    }
    CHECK(total == 120);  // no overlap
    CHECK(pieces == whole);
}

TEST_CASE("per-state classification") {
    const auto wl = classify_state(parse_state("2|13"), Policy::WL, 10);
    REQUIRE(wl.branches.size() == 1);
    CHECK(wl.branches[0].weight == Rational(1));
    CHECK(wl.branches[0].letters == "WLL");

    for (const auto& s : all_states(5, 1)) {
        const auto cls = classify_state(s, Policy::Random, 4);
        Rational total(0);
        for (const auto& b : cls.branches) total += b.weight;
        CHECK(total == Rational(1));
    }
}

TEST_CASE("exact R-round probabilities") {
    CHECK(probability_r_round(2, 1, 1, Policy::WL) == Rational(1, 2));
    CHECK(probability_r_round(4, 1, 3, Policy::WL) == Rational(1, 8));
    CHECK(probability_r_round(4, 1, 3, Policy::Random) == Rational(1, 8));
    CHECK(probability_r_round(5, 1, 2, Policy::WL) == Rational(0));  // parity
    CHECK_THROWS_AS(probability_r_round(3, 1, 3, Policy::WL), std::invalid_argument);

    for (int n = 3; n <= 5; ++n)
        for (int m = 1; m <= 2 && m < n; ++m)
            for (int R = m; R <= n - m; R += 2) {
                const Rational expected = r_round_formula(m, R);
                CHECK(probability_r_round(n, m, R, Policy::WL) == expected);
                CHECK(probability_r_round(n, m, R, Policy::Random) == expected);
            }
}

TEST_CASE("exact k-passthrough probabilities") {
    CHECK(probability_k_passthrough(4, 1, 2, Policy::WL) == Rational(5, 8));
    CHECK(probability_k_passthrough(4, 1, 2, Policy::Random) == Rational(5, 8));
    CHECK(probability_k_passthrough(8, 1, 3, Policy::WL) == Rational(89, 128));
    CHECK_THROWS_AS(probability_k_passthrough(5, 1, 3, Policy::WL),
                    std::invalid_argument);
    // outside the guaranteed regime the observed value is still a probability
    const Rational observed = observe_k_passthrough(5, 1, 3, Policy::WL);
    CHECK(observed > Rational(0));
    CHECK(observed < Rational(1));
}

TEST_CASE("sharded censuses agree with the single-threaded run") {
    CHECK(probability_k_passthrough(6, 1, 2, Policy::Random, 3) ==
          probability_k_passthrough(6, 1, 2, Policy::Random, 1));
    CHECK(probability_r_round(6, 2, 4, Policy::Random, 4) ==
          probability_r_round(6, 2, 4, Policy::Random, 1));
}

TEST_CASE("Bob's putback order cannot change single-use events") {
    StateSpace space(4, 1);
    Rational with_bob(0), without(0);
    space.for_each([&](const GameState& s) {
        for (const auto& b : classify_state(s, Policy::Random, 3, true).branches)
            if (b.single_use && b.passthroughs <= 2) with_bob += b.weight;
        for (const auto& b : classify_state(s, Policy::Random, 3, false).branches)
            if (b.single_use && b.passthroughs <= 2) without += b.weight;
    });
    CHECK(with_bob == without);
    CHECK(with_bob / Rational(factorial(4)) == Rational(5, 8));
}

TEST_CASE("one uniform round stays uniform") {
    for (auto [n, m] : std::vector<std::pair<int, int>>{{3, 1}, {4, 2}, {4, 3}}) {
        const UniformLemmaReport r = uniform_lemma_check(n, m);
        CHECK(r.pass);
        CHECK(r.win_mass == Rational(1, 2));
        CHECK(r.loss_mass == Rational(1, 2));
    }
}

TEST_CASE("states matching a sequence under WL putback") {
    const auto matches = states_matching_wl(parse_sequence("W/LL", 1), 4);
    std::vector<std::string> texts;
    for (const auto& s : matches) texts.push_back(format_state(s));
    CHECK(texts == std::vector<std::string>{"2|134", "2|143", "3|142"});

    const auto lone = states_matching_wl(parse_sequence("L", 1), 2);
    REQUIRE(lone.size() == 1);
    CHECK(format_state(lone[0]) == "1|2");

    CHECK(states_matching_wl(parse_sequence("W/LW/LL", 1), 6).size() == 15);
}

TEST_CASE("states that necessarily follow a sequence") {
    const auto necessary = states_necessarily_random(parse_sequence("W/LL", 1), 4);
    std::vector<std::string> texts;
    for (const auto& s : necessary) texts.push_back(format_state(s));
    CHECK(texts == std::vector<std::string>{"2|134", "2|143"});

    const auto lone = states_necessarily_random(parse_sequence("L", 1), 2);
    REQUIRE(lone.size() == 1);
    CHECK(format_state(lone[0]) == "1|2");

    // a state whose branches split across different sequences belongs to none
    for (const auto& seq : enumerate_sequences_rounds(1, 5)) {
        const auto states = states_necessarily_random(seq, 6);
        for (const auto& s : states) CHECK(format_state(s) != "3|14256");
    }
    CHECK_THROWS_AS(states_necessarily_random(make_sequence("LL", 2), 4),
                    std::invalid_argument);
}
