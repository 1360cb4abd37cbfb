#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "war/census.hpp"
#include "war/posets.hpp"

using namespace war;

namespace {

Poset antichain(int n) {
    Poset p;
    for (int i = 0; i < n; ++i) p.names.push_back("e" + std::to_string(i));
    return p;
}

Poset chain(int n) {
    Poset p = antichain(n);
    for (int i = 0; i + 1 < n; ++i) p.covers.emplace_back(i, i + 1);
    return p;
}

}  // namespace

TEST_CASE("brute-force linear extension counts") {
    CHECK(linear_extensions_bruteforce(antichain(3)) == 6);
    CHECK(linear_extensions_bruteforce(chain(3)) == 1);
    Poset v = antichain(3);
    v.covers = {{0, 1}, {0, 2}};  // one top element over two leaves
    CHECK(linear_extensions_bruteforce(v) == 2);
    CHECK_THROWS_AS(linear_extensions_bruteforce(antichain(11)), std::invalid_argument);
}

TEST_CASE("hook-product count for tree posets") {
    HookedTreePoset chain3{{"a", "b", "c"}, {-1, 0, 1}};
    CHECK(ruskey_count(chain3) == 1);

    HookedTreePoset fork{{"a", "b", "c"}, {-1, 0, 0}};
    CHECK(ruskey_count(fork) == 2);
    CHECK(linear_extensions_bruteforce(fork.as_poset()) == 2);

    // a over b and c; b over d and g; c over f; d over h
    HookedTreePoset seven{{"a", "b", "c", "d", "g", "f", "h"},
                          {-1, 0, 0, 1, 1, 2, 3}};
    const auto hooks = seven.hooks();
    CHECK(hooks == std::vector<long>{7, 4, 2, 2, 1, 1, 1});
    CHECK(ruskey_count(seven) == 45);
    CHECK(linear_extensions_bruteforce(seven.as_poset()) == 45);
}

TEST_CASE("hook-product count agrees with brute force on random trees") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        const int size = 1 + static_cast<int>(rng() % 8);
        HookedTreePoset tree;
        for (int v = 0; v < size; ++v) {
            tree.names.push_back("v" + std::to_string(v));
            tree.parent.push_back(v == 0 ? -1 : static_cast<int>(rng() % v));
        }
        CHECK(ruskey_count(tree) == linear_extensions_bruteforce(tree.as_poset()));
    }
}

TEST_CASE("tree component of the winner-to-loser poset") {
    SUBCASE("one win gives a two-chain") {
        const HookedTreePoset t = wl_tree_component(parse_sequence("W/LL", 1));
        REQUIRE(t.names == std::vector<std::string>{"a", "b"});
        CHECK(t.parent == std::vector<int>{-1, 0});
        CHECK(t.hooks() == std::vector<long>{2, 1});
    }
    SUBCASE("a loss alone is a single vertex") {
        const HookedTreePoset t = wl_tree_component(parse_sequence("L", 1));
        CHECK(t.names == std::vector<std::string>{"a"});
        CHECK(t.hooks() == std::vector<long>{1});
    }
    SUBCASE("alternating wins chain downward") {
        const HookedTreePoset t = wl_tree_component(parse_sequence("W/LW/LL", 1));
        REQUIRE(t.names == std::vector<std::string>{"a", "b", "d"});
        CHECK(t.parent == std::vector<int>{-1, 0, 1});
        CHECK(t.hooks() == std::vector<long>{3, 2, 1});
    }
    CHECK_THROWS_AS(wl_tree_component(make_sequence("WLLL", 2)), std::invalid_argument);
}

TEST_CASE("counting states that realize a sequence under WL putback") {
    CHECK(count_states_wl(parse_sequence("W/LL", 1)) == 3);
    CHECK(count_states_wl(parse_sequence("L", 1)) == 1);
    CHECK(count_states_wl(parse_sequence("W/LW/LL", 1)) == 15);
    // census agreement at the small sizes
    for (int k = 1; k <= 3; ++k)
        for (const auto& seq : enumerate_sequences_rounds(1, 2 * k - 1))
            CHECK(count_states_wl(seq) ==
                  BigInt(static_cast<long>(states_matching_wl(seq, 2 * k).size())));
}

TEST_CASE("multi-block state counts") {
    CHECK(count_states_wl_mcard(make_sequence("WLWLL", 1)) ==
          count_states_wl(make_sequence("WLWLL", 1)));
    CHECK(count_states_wl_mcard(make_sequence("LL", 2)) == 6);
    CHECK(count_states_wl_mcard(make_sequence("WLLL", 2)) == 45);
    CHECK(count_states_wl_mcard(make_sequence("LL", 2)) ==
          BigInt(static_cast<long>(states_matching_wl(make_sequence("LL", 2), 4).size())));
    CHECK(count_states_wl_mcard(make_sequence("WLLL", 2)) ==
          BigInt(static_cast<long>(states_matching_wl(make_sequence("WLLL", 2), 6).size())));
    // three trivial blocks, and two blocks that each take two passthroughs
    CHECK(count_states_wl_mcard(make_sequence("LLL", 3)) == 90);
    CHECK(count_states_wl_mcard(make_sequence("LLL", 3)) ==
          BigInt(static_cast<long>(states_matching_wl(make_sequence("LLL", 3), 6).size())));
    CHECK(count_states_wl_mcard(make_sequence("WWLLLL", 2)) == 630);
    CHECK(count_states_wl_mcard(make_sequence("WWLLLL", 2)) ==
          BigInt(static_cast<long>(
              states_matching_wl(make_sequence("WWLLLL", 2), 8).size())));
    // every two-block pairing up to two passthroughs agrees with the census
    for (const auto& a : enumerate_sequences_passthrough(1, 2))
        for (const auto& b : enumerate_sequences_passthrough(1, 2)) {
            const auto seq = combine_blocks({a, b});
            const int n = 2 * static_cast<int>(std::count(seq.letters.begin(),
                                                          seq.letters.end(), 'L'));
            CHECK(count_states_wl_mcard(seq) ==
                  BigInt(static_cast<long>(states_matching_wl(seq, n).size())));
        }
}

TEST_CASE("poset for necessarily following a sequence under random putback") {
    SUBCASE("two losses over a, one win under") {
        const RandomPoset rp = build_random_poset(parse_sequence("W/LL", 1));
        REQUIRE(rp.poset.names == std::vector<std::string>{"a", "b", "c", "d"});
        std::set<std::pair<int, int>> covers(rp.poset.covers.begin(),
                                             rp.poset.covers.end());
        // c > a, d > a, a > b
        CHECK(covers == std::set<std::pair<int, int>>{{2, 0}, {3, 0}, {0, 1}});
        CHECK(rp.top == std::vector<int>{2, 3});
        CHECK(rp.bottom.names == std::vector<std::string>{"a", "b"});
    }
    SUBCASE("a single loss sits above a") {
        const RandomPoset rp = build_random_poset(parse_sequence("L", 1));
        CHECK(rp.poset.covers == std::vector<std::pair<int, int>>{{1, 0}});
        CHECK(rp.bottom.size() == 1);
    }
    SUBCASE("pruned win structure hangs below a") {
        // W/WW/LWWW/LLLLLL: b under a; c, d under b; f under c; g, h under d
        const RandomPoset rp =
            build_random_poset(parse_sequence("W/WW/LWWW/LLLLLL", 1));
        CHECK(rp.poset.size() == 14);
        CHECK(rp.top.size() == 7);
        std::set<std::string> top_names;
        for (int e : rp.top) top_names.insert(rp.poset.names[static_cast<size_t>(e)]);
        CHECK(top_names ==
              std::set<std::string>{"e", "i", "j", "k", "l", "m", "n"});
        REQUIRE(rp.bottom.names ==
                std::vector<std::string>{"a", "b", "c", "d", "f", "g", "h"});
        CHECK(rp.bottom.parent == std::vector<int>{-1, 0, 1, 1, 2, 3, 3});
    }
    SUBCASE("layer sizes always match") {
        for (int k = 1; k <= 4; ++k)
            for (const auto& seq : enumerate_sequences_rounds(1, 2 * k - 1)) {
                const RandomPoset rp = build_random_poset(seq);
                CHECK(static_cast<int>(rp.top.size()) == k);
                CHECK(rp.bottom.size() == k);
            }
    }
}

TEST_CASE("counting states that necessarily follow a sequence") {
    CHECK(count_states_random_necessary(parse_sequence("W/LL", 1)) == 2);
    CHECK(count_states_random_necessary(parse_sequence("L", 1)) == 1);
    CHECK(count_states_random_necessary(parse_sequence("W/LW/LL", 1)) == 6);
    for (int k = 1; k <= 4; ++k)
        for (const auto& seq : enumerate_sequences_rounds(1, 2 * k - 1)) {
            const BigInt closed = count_states_random_necessary(seq);
            CHECK(closed == linear_extensions_bruteforce(build_random_poset(seq).poset));
            // the WL order is one of the random branches
            CHECK(closed <= count_states_wl(seq));
        }
}

TEST_CASE("poset dot export") {
    const std::string dot = to_dot(build_random_poset(parse_sequence("W/LL", 1)));
    CHECK(dot.rfind("digraph", 0) == 0);
    CHECK(dot.find("style=dashed") != std::string::npos);
    const std::string tree_dot = to_dot(wl_tree_component(parse_sequence("W/LW/LL", 1)));
    CHECK(tree_dot.find("a") != std::string::npos);
}
